#include <algorithm>

#include "../family_impl.hpp"

namespace endegree {
namespace detail {

namespace {

struct Token {
    int a = 0;
    int b = -1;  // subdivider token when b >= 0
    bool subdividing() const { return b >= 0; }
};

int parse_int(const std::string& s, const VertexId& v) {
    if (s.empty() || s.size() > 9 || (s.size() > 1 && s[0] == '0')) {
        throw AddressError("bad token in " + v.addr);
    }
    for (char c : s) {
        if (c < '0' || c > '9') throw AddressError("bad token in " + v.addr);
    }
    return std::stoi(s);
}

Token parse_token(const std::string& tok, int k, const VertexId& v) {
    Token t;
    auto tilde = tok.find('~');
    if (tilde == std::string::npos) {
        t.a = parse_int(tok, v);
        if (t.a > k) throw AddressError("successor index out of range in " + v.addr);
    } else {
        t.a = parse_int(tok.substr(0, tilde), v);
        t.b = parse_int(tok.substr(tilde + 1), v);
        if (t.a >= t.b || t.b > k) throw AddressError("bad subdivider token in " + v.addr);
    }
    return t;
}

std::vector<Token> parse_tokens(const VertexId& v, int k) {
    std::vector<Token> out;
    for (const std::string& tok : split_tokens(v)) out.push_back(parse_token(tok, k, v));
    return out;
}

std::string subdivider_token(int a, int b) {
    return std::to_string(std::min(a, b)) + "~" + std::to_string(std::max(a, b));
}

}  // namespace

Theorem3::Theorem3(FamilySpec s) : spec(std::move(s)), k(static_cast<int>(spec.get("k", 1))) {}

void Theorem3::validate_address(const VertexId& v) const { parse_tokens(v, k); }

bool Theorem3::is_subdividing(const VertexId& v) const {
    auto tokens = parse_tokens(v, k);
    return !tokens.empty() && tokens.back().subdividing();
}

VertexList Theorem3::neighbors(const VertexId& v) const {
    auto tokens = parse_tokens(v, k);
    VertexList out;
    std::string parent = v.addr == "v" ? std::string() : v.addr.substr(0, v.addr.rfind('.'));

    // k+1 successors; for a subdividing vertex these are the successors of
    // the root of the copy attached above it.
    for (int c = 0; c <= k; ++c) out.emplace_back(v.addr + "." + std::to_string(c));

    if (!tokens.empty()) {
        const Token last = tokens.back();
        if (last.subdividing()) {
            // the two tree-vertices whose horizontal edge it subdivides
            out.emplace_back(parent + "." + std::to_string(last.a));
            out.emplace_back(parent + "." + std::to_string(last.b));
        } else {
            out.emplace_back(parent);  // predecessor, vertical
            for (int j = 0; j <= k; ++j) {
                if (j == last.a) continue;
                out.emplace_back(parent + "." + subdivider_token(last.a, j));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Theorem3::height(const VertexId& v) const {
    int h = 0;
    for (const Token& t : parse_tokens(v, k)) h += t.subdividing() ? 2 : 1;
    return h;
}

VertexList Theorem3::cone_path(const VertexId& a, const VertexId& b) const {
    if (!dotted_prefix(a, b)) throw DomainError("cone_path: not a cone member");
    VertexList path;
    path.push_back(a);
    std::string cur = a.addr;
    size_t pos = a.addr.size();
    while (pos < b.addr.size()) {
        size_t dot = b.addr.find('.', pos + 1);
        if (dot == std::string::npos) dot = b.addr.size();
        std::string tok = b.addr.substr(pos + 1, dot - pos - 1);
        auto tilde = tok.find('~');
        if (tilde != std::string::npos) {
            // not adjacent to the subdivider directly; go through a tree mate
            path.emplace_back(cur + "." + tok.substr(0, tilde));
        }
        cur = b.addr.substr(0, dot);
        path.emplace_back(cur);
        pos = dot;
    }
    return path;
}

}  // namespace detail
}  // namespace endegree
