#include <algorithm>

#include "../family_impl.hpp"

namespace endegree {
namespace detail {

namespace {

// Digit vectors of level-n vertices: first digit < k, later digits < k-1.
// Lexicographic order is the planar ring order.
std::vector<int> parse_digits(const VertexId& v, int k) {
    std::vector<int> digits;
    auto tokens = split_tokens(v);
    for (size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        for (char c : tok) {
            if (c < '0' || c > '9') throw AddressError("bad digit in " + v.addr);
        }
        if (tok.size() > 9 || (tok.size() > 1 && tok[0] == '0')) {
            throw AddressError("bad digit in " + v.addr);
        }
        int d = std::stoi(tok);
        int bound = i == 0 ? k : k - 1;
        if (d >= bound) throw AddressError("digit out of range in " + v.addr);
        digits.push_back(d);
    }
    return digits;
}

VertexId from_digits(const std::vector<int>& digits) {
    std::string a = "v";
    for (int d : digits) {
        a += '.';
        a += std::to_string(d);
    }
    return VertexId(std::move(a));
}

}  // namespace

LeveledTreeCycles::LeveledTreeCycles(FamilySpec s)
    : spec(std::move(s)), k(static_cast<int>(spec.get("k", 2))) {}

void LeveledTreeCycles::validate_address(const VertexId& v) const { parse_digits(v, k); }

VertexId LeveledTreeCycles::ring_step(const VertexId& v, int dir) const {
    std::vector<int> digits = parse_digits(v, k);
    if (digits.empty()) throw DomainError("root has no ring");
    int carry = dir;
    for (size_t i = digits.size(); i-- > 0 && carry != 0;) {
        int radix = i == 0 ? k : k - 1;
        int d = digits[i] + carry;
        carry = 0;
        if (d >= radix) {
            d -= radix;
            carry = 1;
        } else if (d < 0) {
            d += radix;
            carry = -1;
        }
        digits[i] = d;
    }
    return from_digits(digits);  // leftover carry wraps around the ring
}

VertexList LeveledTreeCycles::neighbors(const VertexId& v) const {
    std::vector<int> digits = parse_digits(v, k);
    VertexList out;
    int child_count = digits.empty() ? k : k - 1;
    for (int c = 0; c < child_count; ++c) out.emplace_back(v.addr + "." + std::to_string(c));
    if (!digits.empty()) {
        out.emplace_back(v.addr.substr(0, v.addr.rfind('.')));
        VertexId next = ring_step(v, 1);
        VertexId prev = ring_step(v, -1);
        if (next != v) out.push_back(next);
        if (prev != v && prev != next) out.push_back(prev);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int LeveledTreeCycles::height(const VertexId& v) const {
    return static_cast<int>(parse_digits(v, k).size());
}

int LeveledTreeCycles::layer_of(const VertexId& v) const { return height(v); }

VertexList LeveledTreeCycles::level_vertices(int level) const {
    VertexList out;
    std::vector<int> digits(static_cast<size_t>(level), 0);
    if (level == 0) return {root()};
    while (true) {
        out.push_back(from_digits(digits));
        if (out.size() > 2000000) throw BudgetError("level too large to enumerate");
        int carry = 1;
        for (size_t i = digits.size(); i-- > 0 && carry != 0;) {
            int radix = i == 0 ? k : k - 1;
            if (++digits[i] >= radix) {
                digits[i] = 0;
            } else {
                carry = 0;
            }
        }
        if (carry != 0) break;
    }
    return out;
}

VertexList LeveledTreeCycles::base_vertices(int max_layer) const {
    VertexList out;
    for (int l = 0; l <= max_layer; ++l) {
        VertexList level = level_vertices(l);
        out.insert(out.end(), level.begin(), level.end());
        if (out.size() > 2000000) throw BudgetError("separator too deep for this family");
    }
    return out;
}

VertexList LeveledTreeCycles::attachment_vertices(int layer) const {
    return level_vertices(layer);
}

VertexId LeveledTreeCycles::attachment_anchor(const VertexId& deep, int layer) const {
    std::vector<int> digits = parse_digits(deep, k);
    if (static_cast<int>(digits.size()) <= layer) {
        throw DomainError("anchor requested for a base vertex");
    }
    digits.resize(static_cast<size_t>(layer));
    return from_digits(digits);
}

VertexList LeveledTreeCycles::attachment_path(const VertexId& anchor, const VertexId& deep) const {
    if (!dotted_prefix(anchor, deep)) throw DomainError("attachment_path: not an ancestor");
    VertexList path;
    path.push_back(anchor);
    size_t pos = anchor.addr.size();
    while (pos < deep.addr.size()) {
        size_t dot = deep.addr.find('.', pos + 1);
        if (dot == std::string::npos) dot = deep.addr.size();
        path.emplace_back(deep.addr.substr(0, dot));
        pos = dot;
    }
    return path;
}

}  // namespace detail
}  // namespace endegree
