#include "endegree/ends.hpp"

#include <algorithm>

namespace endegree {

GoodnessMode GoodnessMode::min_degree(int k, bool connected_complement) {
    GoodnessMode m;
    m.kind = Kind::MinDegree;
    m.k = k;
    m.connected_complement = connected_complement;
    if (k < 1) throw DomainError("goodness threshold k must be >= 1");
    return m;
}

GoodnessMode GoodnessMode::avg_degree(const Rational& q, bool connected_complement, VertexSet s0) {
    GoodnessMode m;
    m.kind = Kind::AvgDegree;
    m.q = q;
    m.s0 = std::move(s0);
    m.connected_complement = connected_complement;
    return m;
}

std::string GoodnessMode::describe() const {
    std::string s = kind == Kind::MinDegree ? "min_degree>=" + std::to_string(k)
                                            : "avg_degree>" + to_string(q);
    if (connected_complement) s += "+connected_complement";
    return s;
}

bool region_meets_degree(const Graph& g, const Region& r, const GoodnessMode& mode) {
    if (mode.kind == GoodnessMode::Kind::MinDegree) {
        auto d = min_out_degree(g, r);
        return !d.has_value() || *d >= mode.k;  // empty boundary counts as infinite
    }
    VertexList boundary = vertex_boundary(g, r);
    if (boundary.empty()) return true;
    return avg_out_degree(g, r) > mode.q;
}

bool region_good(const Graph& g, const Region& r, const GoodnessMode& mode) {
    if (!region_meets_degree(g, r, mode)) return false;
    if (mode.connected_complement && complement_connected(g, r) != Tri::Yes) return false;
    return true;
}

Tri lives_in(const Graph& g, const EndOracle& oracle, const EndId& end, const Region& r,
             std::uint64_t budget) {
    if (r.separator.empty()) return Tri::Yes;  // whole-graph region
    int max_sep_height = 0;
    for (const VertexId& s : r.separator) {
        max_sep_height = std::max(max_sep_height, g.family().height(s));
    }
    // Heights strictly increase along canonical rays, so the first ray vertex
    // above every separator vertex starts a tail that never meets S again;
    // that tail lies in one component of G - S, decided by its first vertex.
    for (std::uint64_t i = 0; i <= budget; ++i) {
        VertexId v = oracle.ray(end, i);
        if (g.family().height(v) <= max_sep_height) continue;
        if (r.separator.count(v)) continue;
        return in_region(g, r, v, budget);
    }
    return Tri::Unknown;
}

Region good_region_for(const Graph& g, const EndOracle& oracle, const EndId& end,
                       const VertexSet& avoid, const GoodnessMode& mode, std::uint64_t budget) {
    DefiningSequence seq = oracle.sequence(end);
    for (std::uint64_t n = 0; n < budget; ++n) {
        Region r = seq.nth(n);
        bool hits_avoid = false;
        for (const VertexId& a : avoid) {
            if (r.separator.count(a)) continue;
            if (in_region(g, r, a) == Tri::Yes) {
                hits_avoid = true;
                break;
            }
        }
        if (hits_avoid) continue;
        if (region_good(g, r, mode)) return r;
    }
    auto reason = oracle.certified_failure ? oracle.certified_failure(mode) : std::nullopt;
    if (reason) {
        throw OracleExhausted("no canonical region qualifies for " + mode.describe() + ": " + *reason,
                              true);
    }
    throw OracleExhausted("no qualifying region within budget for " + mode.describe(), false);
}

std::vector<std::pair<std::optional<int>, Rational>> limit_degree_profile(
    const Graph& g, const DefiningSequence& seq, int depth) {
    std::vector<std::pair<std::optional<int>, Rational>> out;
    for (int n = 0; n < depth; ++n) {
        Region r = seq.nth(static_cast<std::size_t>(n));
        out.emplace_back(min_out_degree(g, r), avg_out_degree(g, r));
    }
    return out;
}

}  // namespace endegree
