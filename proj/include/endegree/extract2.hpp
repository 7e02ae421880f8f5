#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "endegree/ends.hpp"
#include "endegree/families.hpp"
#include "endegree/graph.hpp"
#include "endegree/region.hpp"
#include "endegree/window.hpp"

namespace endegree {

struct Budgets {
    std::uint64_t oracle = 64;        // regions tried per good_region_for call
    std::uint64_t iterations = 20;    // extraction steps
    std::uint64_t path_search = 200000;  // connectification / membership BFS queries
};

struct StepRecord {
    int step = 0;
    EndId end;
    bool already_good = false;
    std::optional<Region> adopted;
    std::vector<VertexList> connect_paths;  // paths added to make S' connected
    std::vector<VertexList> absorbed;       // finite components folded into S
    VertexList separator_after;
};

struct GoodComponentRecord {
    EndId end;
    Region component;
};

struct ExtractState {
    VertexSet separator;
    std::vector<GoodComponentRecord> assigned;
    int iteration = 0;
    std::vector<StepRecord> history;
    std::size_t next_end = 0;  // position in the enumeration stream
};

struct ExtractionReport {
    FamilySpec family;
    GoodnessMode mode;
    std::string status;  // ok | budget_exhausted | oracle_exhausted
    bool oracle_failure_certified = false;
    ExtractState state;
    Window subgraph;  // H = G[S u N(S)] when status == ok
    std::vector<int> subgraph_degrees;  // recomputed degrees of H, by vertex index
    std::uint64_t oracle_queries = 0;

    nlohmann::json to_json() const;
};

// S0 with G[S0] connected and every component of G - S0 infinite. MinDegree
// starts from the root; AvgDegree starts from the mode's s0 and closes up.
VertexSet init_s0(const Graph& g, const GoodnessMode& mode, std::uint64_t budget);

// One step: serve the next end, adopt a good region if its component is bad,
// connectify, absorb finite components. Maintains the four step invariants.
void extract_step(const Graph& g, ExtractState& state, const EndOracle& oracle,
                  const GoodnessMode& mode, const Budgets& budgets);

// True when every component of G - S meets the mode (the termination test).
bool all_components_good(const Graph& g, const VertexSet& separator,
                         const GoodnessMode& mode);

ExtractionReport extract(const Graph& g, const EndOracle& oracle,
                         const GoodnessMode& mode, const Budgets& budgets);

// The introductory search: either a separator whose components are all good,
// or a strictly nested chain of bad regions with badness witnesses.
struct IntroResult {
    bool all_good = false;
    VertexSet separator;
    std::optional<Window> subgraph;  // H for the all-good outcome
    struct ChainStep {
        Region region;
        VertexId witness;        // boundary vertex of small out-degree
        int witness_out_degree = 0;
    };
    std::vector<ChainStep> chain;
    std::string status;  // all_good | budget_exhausted | no_bad_descent

    nlohmann::json to_json() const;
};

IntroResult intro_search(const Graph& g, int k, std::uint64_t max_depth);

}  // namespace endegree
