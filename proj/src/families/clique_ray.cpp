#include <algorithm>

#include "../family_impl.hpp"

namespace endegree {
namespace detail {

namespace {

long long parse_number(const std::string& s, size_t from, size_t to, const VertexId& v) {
    if (from >= to || to - from > 9) throw AddressError("bad number in " + v.addr);
    long long value = 0;
    for (size_t i = from; i < to; ++i) {
        if (s[i] < '0' || s[i] > '9') throw AddressError("bad number in " + v.addr);
        value = value * 10 + (s[i] - '0');
    }
    if (to - from > 1 && s[from] == '0') throw AddressError("bad number in " + v.addr);
    return value;
}

}  // namespace

CliqueRay::CliqueRay(FamilySpec s)
    : spec(std::move(s)),
      k(static_cast<int>(spec.get("k", 1))),
      arms(static_cast<int>(spec.get("arms", 1))),
      stalk(spec.get("stalk", 0) != 0),
      cross(spec.get("cross", 0) != 0) {}

VertexId CliqueRay::root() const { return stalk ? VertexId("r") : VertexId("q0.0"); }

bool CliqueRay::is_stalk(const VertexId& v) const { return !v.addr.empty() && v.addr[0] == 'r'; }

VertexId CliqueRay::clique_vertex(int arm, int index, int pos) const {
    if (index == 0 || arms == 1) {
        return VertexId("q" + std::to_string(index) + "." + std::to_string(pos));
    }
    return VertexId("a" + std::to_string(arm) + ".q" + std::to_string(index) + "." +
                    std::to_string(pos));
}

void CliqueRay::parse(const VertexId& v, int& arm, int& index, int& pos) const {
    const std::string& a = v.addr;
    size_t at = 0;
    arm = 0;
    if (!a.empty() && a[0] == 'a') {
        if (arms < 2) throw AddressError("arm prefix needs arms >= 2: " + a);
        size_t dot = a.find('.');
        if (dot == std::string::npos) throw AddressError("bad address: " + a);
        arm = static_cast<int>(parse_number(a, 1, dot, v));
        if (arm >= arms) throw AddressError("arm out of range: " + a);
        at = dot + 1;
    }
    if (at >= a.size() || a[at] != 'q') throw AddressError("bad address: " + a);
    size_t dot = a.find('.', at);
    if (dot == std::string::npos) throw AddressError("bad address: " + a);
    index = static_cast<int>(parse_number(a, at + 1, dot, v));
    pos = static_cast<int>(parse_number(a, dot + 1, a.size(), v));
    if (pos >= k) throw AddressError("clique position out of range: " + a);
    if (arms >= 2) {
        bool has_arm_prefix = a[0] == 'a';
        if (index == 0 && has_arm_prefix) throw AddressError("shared clique takes no arm: " + a);
        if (index > 0 && !has_arm_prefix) throw AddressError("arm clique needs an arm: " + a);
    }
}

void CliqueRay::validate_address(const VertexId& v) const {
    if (is_stalk(v)) {
        if (!stalk) throw AddressError("family has no stalk: " + v.addr);
        if (v.addr == "r") return;
        if (v.addr.size() < 3 || v.addr[1] != '.') throw AddressError("bad address: " + v.addr);
        long long j = parse_number(v.addr, 2, v.addr.size(), v);
        if (j >= k) throw AddressError("stalk index out of range: " + v.addr);
        return;
    }
    int arm, index, pos;
    parse(v, arm, index, pos);
}

VertexList CliqueRay::clique(int arm, int index) const {
    VertexList out;
    for (int p = 0; p < k; ++p) out.push_back(clique_vertex(arm, index, p));
    return out;
}

VertexList CliqueRay::neighbors(const VertexId& v) const {
    validate_address(v);
    VertexList out;
    if (v.addr == "r") {
        for (int j = 0; j < k; ++j) out.emplace_back("r." + std::to_string(j));
    } else if (is_stalk(v)) {
        out.emplace_back("r");
        for (int p = 0; p < k; ++p) out.push_back(clique_vertex(0, 0, p));
    } else {
        int arm, index, pos;
        parse(v, arm, index, pos);
        for (int p = 0; p < k; ++p) {
            if (p != pos) out.push_back(clique_vertex(arm, index, p));
        }
        if (index == 0) {
            for (int a = 0; a < arms; ++a) {
                VertexList next = clique(a, 1);
                out.insert(out.end(), next.begin(), next.end());
            }
            if (stalk) {
                for (int j = 0; j < k; ++j) out.emplace_back("r." + std::to_string(j));
            }
        } else {
            VertexList prev = clique(arm, index - 1);
            out.insert(out.end(), prev.begin(), prev.end());
            VertexList next = clique(arm, index + 1);
            out.insert(out.end(), next.begin(), next.end());
            if (cross && index == 1) {
                if (arm > 0) out.push_back(clique_vertex(arm - 1, 1, pos));
                if (arm + 1 < arms) out.push_back(clique_vertex(arm + 1, 1, pos));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int CliqueRay::height(const VertexId& v) const {
    if (v.addr == "r") return 0;
    if (is_stalk(v)) return 1;
    int arm, index, pos;
    parse(v, arm, index, pos);
    return index + (stalk ? 2 : 0);
}

int CliqueRay::layer_of(const VertexId& v) const {
    if (is_stalk(v)) return -1;
    int arm, index, pos;
    parse(v, arm, index, pos);
    return index;
}

VertexList CliqueRay::base_vertices(int max_layer) const {
    VertexList out;
    if (stalk) {
        out.emplace_back("r");
        for (int j = 0; j < k; ++j) out.emplace_back("r." + std::to_string(j));
    }
    for (int i = 0; i <= max_layer; ++i) {
        if (i == 0) {
            VertexList q = clique(0, 0);
            out.insert(out.end(), q.begin(), q.end());
        } else {
            for (int a = 0; a < arms; ++a) {
                VertexList q = clique(a, i);
                out.insert(out.end(), q.begin(), q.end());
            }
        }
    }
    return out;
}

VertexList CliqueRay::attachment_vertices(int layer) const {
    VertexList out;
    if (layer == 0) return clique(0, 0);
    for (int a = 0; a < arms; ++a) {
        VertexList q = clique(a, layer);
        out.insert(out.end(), q.begin(), q.end());
    }
    return out;
}

VertexId CliqueRay::attachment_anchor(const VertexId& deep, int layer) const {
    int arm, index, pos;
    parse(deep, arm, index, pos);
    if (index <= layer) throw DomainError("anchor requested for a base vertex");
    return clique_vertex(layer == 0 ? 0 : arm, layer, 0);
}

VertexList CliqueRay::attachment_path(const VertexId& anchor, const VertexId& deep) const {
    int arm, index, pos;
    parse(deep, arm, index, pos);
    int aarm, aindex, apos;
    parse(anchor, aarm, aindex, apos);
    VertexList path;
    path.push_back(anchor);
    for (int i = aindex + 1; i < index; ++i) path.push_back(clique_vertex(arm, i, 0));
    path.push_back(deep);
    return path;
}

}  // namespace detail
}  // namespace endegree
