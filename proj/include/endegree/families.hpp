#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "endegree/ends.hpp"
#include "endegree/graph.hpp"
#include "endegree/window.hpp"

namespace endegree {

// Descriptor for a built-in graph family. Address grammars are documented
// in docs/families.md.
//
//   branching_tree       parameters: k
//   leveled_tree_cycles  parameters: k (>= 2)
//   theorem3             parameters: k
//   clique_ray           parameters: k, arms (default 1), stalk (0/1),
//                        cross (0/1, needs arms >= 2)
//
// depth and seed are desk-scale certification knobs shared by all families.
struct FamilySpec {
    std::string family;
    std::map<std::string, long long> params;

    long long get(const std::string& key, long long def) const;
    void validate() const;

    nlohmann::json to_json() const;
    static FamilySpec from_json(const nlohmann::json& j);
};

Graph make_graph(const FamilySpec& spec);

// Finite test double: wraps a window as a graph handle.
Graph make_finite_graph(const Window& w);

const FamilySpec& graph_spec(const Graph& g);  // DomainError for test doubles

// Serves the family's documented defining sequences with certified values.
EndOracle canonical_end_oracle(const Graph& g);

// Pairwise nested regions in which every end has a defining subsequence.
// DomainError for theorem3 (its canonical regions cross).
NestedFamily canonical_nested_family(const Graph& g);

// Canonical region helpers, used by the CLI and tests.
Region branching_tree_canonical_region(const Graph& g, const VertexId& t);
Region theorem3_region_at(const Graph& g, const VertexId& subdividing_vertex);
Region clique_ray_tail(const Graph& g, int arm, int clique_index);
Region leveled_tail(const Graph& g, int level);

}  // namespace endegree
