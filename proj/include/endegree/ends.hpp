#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "endegree/graph.hpp"
#include "endegree/ids.hpp"
#include "endegree/rational.hpp"
#include "endegree/region.hpp"

namespace endegree {

// Goodness of a region: minimum out-degree at least k, or average
// out-degree above q, optionally with connected complement.
struct GoodnessMode {
    enum class Kind { MinDegree, AvgDegree };
    Kind kind = Kind::MinDegree;
    int k = 1;
    Rational q{0};
    VertexSet s0;  // AvgDegree extraction starts from this set
    bool connected_complement = false;

    static GoodnessMode min_degree(int k, bool connected_complement);
    static GoodnessMode avg_degree(const Rational& q, bool connected_complement,
                                   VertexSet s0 = {});
    std::string describe() const;
};

// Is the region good for the mode? (connected-complement checked separately
// when the mode requires it.)
bool region_meets_degree(const Graph& g, const Region& r, const GoodnessMode& mode);
bool region_good(const Graph& g, const Region& r, const GoodnessMode& mode);

// Lazy stream of strictly decreasing regions with empty intersection, each
// containing a tail of the end's canonical ray.
struct DefiningSequence {
    std::function<Region(std::size_t)> nth;
};

struct EndOracle {
    // Enumeration with possible repetition; nullopt past a finite stream.
    std::function<std::optional<EndId>(std::size_t)> enumerate;
    std::function<DefiningSequence(const EndId&)> sequence;
    // i-th vertex of the end's canonical ray (heights strictly increase).
    std::function<VertexId(const EndId&, std::size_t)> ray;
    // Family-level knowledge: a reason no canonical region can ever meet the
    // mode, when the family certifies that.
    std::function<std::optional<std::string>(const GoodnessMode&)> certified_failure;
    // All ends for finite-ended families; a representative sample otherwise.
    std::vector<EndId> known_ends;
    bool ends_complete = false;  // known_ends lists every end of the graph
};

// Does the end's canonical ray eventually stay in the region?
Tri lives_in(const Graph& g, const EndOracle& oracle, const EndId& end,
             const Region& r, std::uint64_t budget);

// First canonical region for the end that avoids `avoid` and meets the mode,
// recomputed through the regions module. Throws OracleExhausted.
Region good_region_for(const Graph& g, const EndOracle& oracle, const EndId& end,
                       const VertexSet& avoid, const GoodnessMode& mode,
                       std::uint64_t budget);

// (min out-degree, avg out-degree) over a finite prefix; no limit claims.
std::vector<std::pair<std::optional<int>, Rational>> limit_degree_profile(
    const Graph& g, const DefiningSequence& seq, int depth);

// Lazy stream of pairwise nested regions plus certificate provenance.
struct NestedFamily {
    std::function<std::optional<Region>(std::size_t)> nth;
    std::string certificate;  // "generator" | "corollary5" | "checked"
};

}  // namespace endegree
