#pragma once

#include <string>
#include <utility>
#include <vector>

#include "endegree/graph.hpp"
#include "endegree/ids.hpp"
#include "endegree/rational.hpp"

namespace endegree {

// A finite induced-subgraph snapshot. Edges are exactly the induced edges
// among the vertex set; true degrees are taken in G (never from the window).
class Window {
public:
    Window() = default;

    // Induced window on an explicit vertex set, degrees via the oracle.
    static Window build(const Graph& g, const VertexSet& verts);
    // Standalone finite graph (tests, DOT import). True degrees default to
    // window degrees when not given.
    static Window from_edges(VertexList verts, std::vector<std::pair<int, int>> edges,
                             std::vector<int> true_degrees = {});

    int size() const { return static_cast<int>(verts_.size()); }
    bool empty() const { return verts_.empty(); }
    long long edge_count() const { return edge_count_; }

    const VertexList& vertices() const { return verts_; }
    const VertexId& vertex(int i) const { return verts_[static_cast<size_t>(i)]; }
    const std::vector<int>& adj(int i) const { return adj_[static_cast<size_t>(i)]; }

    int window_degree(int i) const { return static_cast<int>(adj_[static_cast<size_t>(i)].size()); }
    int true_degree(int i) const { return true_deg_[static_cast<size_t>(i)]; }
    bool boundary(int i) const { return true_degree(i) > window_degree(i); }

    int index_of(const VertexId& v) const;
    bool contains(const VertexId& v) const { return index_of(v) >= 0; }

    // Sub-window on a subset of indices; true degrees are preserved.
    Window induced(const std::vector<int>& keep) const;

    Rational average_window_degree() const;  // 2|E|/|V|; DomainError when empty

    bool same_as(const Window& other) const;

    std::string to_dot() const;
    static Window from_dot(const std::string& text);

private:
    VertexList verts_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> true_deg_;
    long long edge_count_ = 0;
};

Window ball(const Graph& g, const VertexId& center, int radius);
// First max_vertices vertices in (BFS distance, address) order.
Window truncation(const Graph& g, const VertexId& center, int max_vertices);

Window induced_window(const Graph& g, const VertexSet& verts);

// d_G(U): exact average of true degrees over a finite nonempty set.
Rational avg_set_degree(const Graph& g, const VertexSet& u);

}  // namespace endegree
