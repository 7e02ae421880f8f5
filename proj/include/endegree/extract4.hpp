#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "endegree/ends.hpp"
#include "endegree/graph.hpp"
#include "endegree/region.hpp"
#include "endegree/window.hpp"

namespace endegree {

struct CoverBudgets {
    std::uint64_t explored = 20000;      // frontier vertices absorbed before giving up
    std::uint64_t stream_prefix = 256;   // family regions inspected per frontier vertex
};

// Frontier search from v: absorb vertices until every escape direction is
// sealed by an adopted family region that misses v, is disjoint from the
// explored set and the other adopted regions, and meets the mode. Throws
// BudgetError carrying the rejected candidates when the family cannot seal.
std::vector<Region> cover_ends(const Graph& g, const NestedFamily& family,
                               const VertexId& v, const GoodnessMode& mode,
                               const CoverBudgets& budgets);

// Keep only the maximal regions of a nested collection.
std::vector<Region> disjointify(const Graph& g, const std::vector<Region>& regions);

// X: every vertex in no chosen region, discovered by search from v.
Window residual(const Graph& g, const std::vector<Region>& regions, const VertexId& v,
                std::uint64_t budget);

// H spanned by X and the vertex boundaries of the regions (cross edges between
// region boundaries are induced automatically).
Window assemble_h(const Graph& g, const Window& x, const std::vector<Region>& regions);

// Nested family built from per-end defining sequences along an end stream in
// which every end occurs infinitely often. Regions avoid the union of the
// neighborhoods of all previously chosen regions.
NestedFamily corollary5_nest(const Graph& g,
                             std::function<DefiningSequence(const EndId&)> per_end,
                             std::function<std::optional<EndId>(std::size_t)> end_stream,
                             std::uint64_t prefix_budget);

}  // namespace endegree
