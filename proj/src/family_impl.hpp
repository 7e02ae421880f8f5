#pragma once

// Concrete graph families. Address grammars are documented in
// docs/families.md; the core never inspects addresses beyond order.

#include <string>
#include <vector>

#include "endegree/families.hpp"
#include "endegree/graph.hpp"
#include "endegree/window.hpp"

namespace endegree {
namespace detail {

std::vector<std::string> split_tokens(const VertexId& v);  // "v.a.b" -> {"a","b"}
bool dotted_prefix(const VertexId& a, const VertexId& b);
VertexList dotted_prefixes(const VertexId& v);
VertexId join_tokens(const std::vector<std::string>& tokens);

// Dotted-address families with prefix-cone structure.
class DottedFamily : public Family {
public:
    EngineKind engine() const override { return EngineKind::PrefixCone; }
    bool cone_contains(const VertexId& a, const VertexId& b) const override {
        return dotted_prefix(a, b);
    }
    VertexList cone_prefixes(const VertexId& v) const override { return dotted_prefixes(v); }
};

// The infinite k-branching tree: the root has k successors, every other
// vertex has its predecessor plus k successors.
class BranchingTree : public DottedFamily {
public:
    explicit BranchingTree(FamilySpec spec);
    std::string name() const override { return "branching_tree"; }
    VertexId root() const override { return VertexId("v"); }
    VertexList neighbors(const VertexId& v) const override;
    void validate_address(const VertexId& v) const override;
    int height(const VertexId& v) const override;
    VertexList cone_path(const VertexId& a, const VertexId& b) const override;
    const FamilySpec spec;
    const int k;
};

// Rooted tree in which every vertex has k+1 successors; the successor set
// of each vertex is turned into a complete graph whose edges are each
// subdivided once, and every subdividing vertex is the root of a fresh copy.
class Theorem3 : public DottedFamily {
public:
    explicit Theorem3(FamilySpec spec);
    std::string name() const override { return "theorem3"; }
    VertexId root() const override { return VertexId("v"); }
    VertexList neighbors(const VertexId& v) const override;
    void validate_address(const VertexId& v) const override;
    int height(const VertexId& v) const override;
    VertexList cone_path(const VertexId& a, const VertexId& b) const override;

    bool is_subdividing(const VertexId& v) const;
    const FamilySpec spec;
    const int k;
};

// k-regular tree drawn in the plane with every level joined into a cycle.
class LeveledTreeCycles : public Family {
public:
    explicit LeveledTreeCycles(FamilySpec spec);
    std::string name() const override { return "leveled_tree_cycles"; }
    VertexId root() const override { return VertexId("v"); }
    VertexList neighbors(const VertexId& v) const override;
    void validate_address(const VertexId& v) const override;
    int height(const VertexId& v) const override;
    EngineKind engine() const override { return EngineKind::Layered; }
    int layer_of(const VertexId& v) const override;
    VertexList base_vertices(int max_layer) const override;
    VertexList attachment_vertices(int layer) const override;
    VertexId attachment_anchor(const VertexId& deep, int layer) const override;
    VertexList attachment_path(const VertexId& anchor, const VertexId& deep) const override;

    VertexList level_vertices(int level) const;
    VertexId ring_step(const VertexId& v, int dir) const;
    const FamilySpec spec;
    const int k;
};

// Cliques Q0, Q1, ... of size k with consecutive cliques completely joined.
// Options: arms >= 2 glues that many rays at a shared Q0; stalk prepends a
// root with k pairwise nonadjacent children each joined to all of Q0; cross
// adds a position-matched matching between the first cliques of consecutive
// arms.
class CliqueRay : public Family {
public:
    explicit CliqueRay(FamilySpec spec);
    std::string name() const override { return "clique_ray"; }
    VertexId root() const override;
    VertexList neighbors(const VertexId& v) const override;
    void validate_address(const VertexId& v) const override;
    int height(const VertexId& v) const override;
    EngineKind engine() const override { return EngineKind::Layered; }
    int layer_of(const VertexId& v) const override;
    VertexList base_vertices(int max_layer) const override;
    VertexList attachment_vertices(int layer) const override;
    VertexId attachment_anchor(const VertexId& deep, int layer) const override;
    VertexList attachment_path(const VertexId& anchor, const VertexId& deep) const override;

    VertexId clique_vertex(int arm, int index, int pos) const;
    // arm, clique index, position; arm is 0 for the shared clique.
    void parse(const VertexId& v, int& arm, int& index, int& pos) const;
    bool is_stalk(const VertexId& v) const;
    VertexList clique(int arm, int index) const;

    const FamilySpec spec;
    const int k;
    const int arms;
    const bool stalk;
    const bool cross;
};

// Finite test double over a window.
class FiniteWindowFamily : public Family {
public:
    explicit FiniteWindowFamily(Window w);
    std::string name() const override { return "finite_window"; }
    VertexId root() const override;
    VertexList neighbors(const VertexId& v) const override;
    void validate_address(const VertexId& v) const override;
    int height(const VertexId& v) const override { validate_address(v); return 0; }
    EngineKind engine() const override { return EngineKind::Finite; }
    VertexList base_vertices(int) const override { return window.vertices(); }
    const Window window;
};

}  // namespace detail
}  // namespace endegree
