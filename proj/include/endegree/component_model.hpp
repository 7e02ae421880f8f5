#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "endegree/graph.hpp"
#include "endegree/ids.hpp"

namespace endegree {

// Exact, finite model of the components of G - S for a finite separator S.
//
// The kernel is a finite vertex set K \ S rich enough that (a) every
// component of G - S meets it, (b) two kernel vertices lie in the same
// component of G - S iff they are connected within the kernel, and (c) a
// kernel vertex flagged `infinite` has an S-free infinite attachment whose
// only contact with the rest of the graph goes through flagged vertices of
// its own component. Vertices outside the kernel resolve to the kernel
// vertex whose attachment contains them.
class ComponentModel {
public:
    bool same_component(const VertexId& a, const VertexId& b) const;
    bool infinite(const VertexId& seed) const;
    // Full enumeration when the component is finite.
    std::optional<VertexList> finite_vertices(const VertexId& seed) const;
    // A concrete path from a to b avoiding S. Requires same_component(a, b).
    VertexList path(const VertexId& a, const VertexId& b) const;

    int component_count() const { return comp_count_; }
    int component_of(const VertexId& x) const;  // component id; throws for x in S
    bool component_infinite(int c) const { return comp_infinite_[static_cast<size_t>(c)]; }
    // Lexicographically least kernel member of each component.
    const VertexList& component_anchors() const { return anchors_; }

    const VertexSet& separator() const { return separator_; }
    const VertexList& kernel() const { return verts_; }
    int kernel_index(const VertexId& v) const;
    int kernel_component(int idx) const { return comp_[static_cast<size_t>(idx)]; }

private:
    friend ComponentModel build_component_model(const Graph& g, const VertexSet& S);

    int resolve(const VertexId& x) const;  // kernel index whose component holds x
    VertexList kernel_path(int from, int to) const;

    std::shared_ptr<const Family> family_;
    VertexSet separator_;
    VertexList verts_;  // kernel = K - S, sorted
    std::vector<std::vector<int>> adj_;
    std::vector<char> inf_flag_;
    std::vector<int> comp_;
    std::vector<char> comp_infinite_;
    VertexList anchors_;
    int comp_count_ = 0;
};

ComponentModel build_component_model(const Graph& g, const VertexSet& S);

}  // namespace endegree
