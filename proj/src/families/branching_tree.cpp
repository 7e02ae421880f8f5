#include <algorithm>

#include "../family_impl.hpp"

namespace endegree {
namespace detail {

namespace {

int parse_index(const std::string& tok, int bound, const VertexId& v) {
    for (char c : tok) {
        if (c < '0' || c > '9') throw AddressError("bad child index in " + v.addr);
    }
    if (tok.size() > 9 || (tok.size() > 1 && tok[0] == '0')) {
        throw AddressError("bad child index in " + v.addr);
    }
    int idx = std::stoi(tok);
    if (idx < 0 || idx >= bound) throw AddressError("child index out of range in " + v.addr);
    return idx;
}

}  // namespace

BranchingTree::BranchingTree(FamilySpec s)
    : spec(std::move(s)), k(static_cast<int>(spec.get("k", 1))) {}

void BranchingTree::validate_address(const VertexId& v) const {
    for (const std::string& tok : split_tokens(v)) parse_index(tok, k, v);
}

VertexList BranchingTree::neighbors(const VertexId& v) const {
    validate_address(v);
    VertexList out;
    if (v.addr != "v") {
        out.emplace_back(v.addr.substr(0, v.addr.rfind('.')));
    }
    for (int c = 0; c < k; ++c) out.emplace_back(v.addr + "." + std::to_string(c));
    std::sort(out.begin(), out.end());
    return out;
}

int BranchingTree::height(const VertexId& v) const {
    return static_cast<int>(split_tokens(v).size());
}

VertexList BranchingTree::cone_path(const VertexId& a, const VertexId& b) const {
    if (!dotted_prefix(a, b)) throw DomainError("cone_path: not a cone member");
    VertexList path;
    path.push_back(a);
    size_t pos = a.addr.size();
    while (pos < b.addr.size()) {
        size_t dot = b.addr.find('.', pos + 1);
        if (dot == std::string::npos) dot = b.addr.size();
        path.emplace_back(b.addr.substr(0, dot));
        pos = dot;
    }
    return path;
}

}  // namespace detail
}  // namespace endegree
