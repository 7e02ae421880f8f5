#pragma once

#include <vector>

#include "endegree/extract2.hpp"
#include "endegree/graph.hpp"
#include "endegree/rational.hpp"
#include "endegree/window.hpp"

namespace endegree {

// Unique maximal sub-window of minimum window degree >= k, by iterated
// peeling (minimum degree first, ties by vertex order).
Window k_core(const Window& w, int k);

// Indices peeled, in order.
std::vector<int> k_core_peel_trace(const Window& w, int k);

// Exhaustive subset oracle; DomainError above 12 vertices.
bool brute_min_degree(const Window& w, int k);

struct DensestResult {
    Window sub;                // the unique maximal densest sub-window
    Rational average_degree;   // 2|E|/|V| of sub
};

// Exact maximizer of average window degree over nonempty sub-windows, by
// parametric max-flow. DomainError above 2000 vertices.
DensestResult densest_subgraph(const Window& w);

// For theorem3 windows: some vertex of maximal construction height has
// window degree <= 2. DomainError for other families.
bool highest_vertex_check(const Graph& g, const Window& sub);

// Recomputes H and all its degrees from the oracle and re-evaluates the
// mode's conclusion; trusts nothing stored in the report.
bool check_certificate(const Graph& g, const ExtractionReport& report);

// Re-checks the four step invariants over the recorded history.
bool check_history(const Graph& g, const ExtractionReport& report, const EndOracle& oracle);

}  // namespace endegree
