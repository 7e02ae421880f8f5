#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "endegree/component_model.hpp"
#include "endegree/graph.hpp"
#include "endegree/ids.hpp"
#include "endegree/rational.hpp"
#include "endegree/window.hpp"

namespace endegree {

enum class Tri { Yes, No, Unknown };

enum class MembershipOracle { Exact, Budgeted };

// The component C of G - separator containing seed.
struct Region {
    VertexSet separator;
    VertexId seed;
    MembershipOracle oracle = MembershipOracle::Exact;
};

// Throws DomainError unless seed lies outside the separator.
Region make_region(VertexSet separator, VertexId seed,
                   MembershipOracle oracle = MembershipOracle::Exact);

// Is x in the region's component? Exact oracle always decides; the budgeted
// default may return Unknown.
Tri in_region(const Graph& g, const Region& r, const VertexId& x,
              std::uint64_t budget = 0);

// V+(C) = the vertices of C with a neighbor outside C. Throws
// IndeterminateError when budgeted membership stays Unknown.
VertexList vertex_boundary(const Graph& g, const Region& r, std::uint64_t budget = 0);

// The finite induced window on S united with V+(C).
Window out_graph(const Graph& g, const Region& r, std::uint64_t budget = 0);

// Minimum out-degree: min over V+(C) of the window degree in out_graph.
// nullopt is the infinity sentinel for an empty boundary.
std::optional<int> min_out_degree(const Graph& g, const Region& r, std::uint64_t budget = 0);

// Average out-degree over V+(C); DomainError when the boundary is empty.
Rational avg_out_degree(const Graph& g, const Region& r, std::uint64_t budget = 0);

struct ComponentAnswer {
    enum class Kind { Same, Different, Unknown };
    Kind kind = Kind::Unknown;
    VertexList witness_path;  // for Same: u..v avoiding S
    std::uint64_t spent = 0;
};

ComponentAnswer same_component(const Graph& g, const VertexSet& separator,
                               const VertexId& u, const VertexId& v,
                               std::uint64_t budget,
                               MembershipOracle oracle = MembershipOracle::Budgeted);

struct FiniteComponentResult {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    VertexList vertices;  // full enumeration when Finite
    std::uint64_t spent = 0;
};

FiniteComponentResult finite_component_check(const Graph& g, const VertexSet& separator,
                                             const VertexId& seed, std::uint64_t budget,
                                             MembershipOracle oracle = MembershipOracle::Budgeted);

// Is G - C connected?
Tri complement_connected(const Graph& g, const Region& r, std::uint64_t budget = 0);

// Number of components of G - C (exact oracle only).
int complement_component_count(const Graph& g, const Region& r);

enum class Nestedness { Disjoint, Subset, Superset, Equal, Crossing, Unknown };

struct NestednessAnswer {
    Nestedness rel = Nestedness::Unknown;
    // For Crossing: witnesses in C1&C2, C1-C2, C2-C1.
    std::optional<VertexId> in_both, only_first, only_second;
};

NestednessAnswer nestedness(const Graph& g, const Region& r1, const Region& r2,
                            std::uint64_t budget = 0);

const char* to_string(Tri t);
const char* to_string(Nestedness n);

}  // namespace endegree
