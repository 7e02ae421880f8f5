#include <algorithm>

#include "../family_impl.hpp"

namespace endegree {
namespace detail {

std::vector<std::string> split_tokens(const VertexId& v) {
    const std::string& a = v.addr;
    if (a.empty() || a[0] != 'v' || (a.size() > 1 && a[1] != '.')) {
        throw AddressError("address must start with 'v': " + a);
    }
    std::vector<std::string> tokens;
    size_t pos = 1;
    while (pos < a.size()) {
        size_t dot = a.find('.', pos + 1);
        if (dot == std::string::npos) dot = a.size();
        std::string tok = a.substr(pos + 1, dot - pos - 1);
        if (tok.empty()) throw AddressError("empty token in address: " + a);
        tokens.push_back(std::move(tok));
        pos = dot;
    }
    return tokens;
}

bool dotted_prefix(const VertexId& a, const VertexId& b) {
    if (a.addr.size() > b.addr.size()) return false;
    if (b.addr.compare(0, a.addr.size(), a.addr) != 0) return false;
    return b.addr.size() == a.addr.size() || b.addr[a.addr.size()] == '.';
}

VertexList dotted_prefixes(const VertexId& v) {
    VertexList out;
    out.emplace_back("v");
    for (size_t i = 1; i < v.addr.size(); ++i) {
        if (v.addr[i] == '.') out.emplace_back(v.addr.substr(0, i));
    }
    if (v.addr != "v") out.push_back(v);
    return out;
}

VertexId join_tokens(const std::vector<std::string>& tokens) {
    std::string a = "v";
    for (const auto& t : tokens) {
        a += '.';
        a += t;
    }
    return VertexId(std::move(a));
}

}  // namespace detail
}  // namespace endegree
