#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endegree/families.hpp"
#include "endegree/window.hpp"

using namespace endegree;

namespace {

FamilySpec spec(const std::string& family, long long k) {
    FamilySpec s;
    s.family = family;
    s.params["k"] = k;
    return s;
}

VertexList addrs(const std::vector<std::string>& names) {
    VertexList out;
    for (const auto& n : names) out.emplace_back(n);
    return out;
}

}  // namespace

TEST_CASE("branching tree neighbors") {
    Graph g = make_graph(spec("branching_tree", 3));
    CHECK(g.neighbors(VertexId("v")) == addrs({"v.0", "v.1", "v.2"}));
    CHECK(g.neighbors(VertexId("v.1")) == addrs({"v", "v.1.0", "v.1.1", "v.1.2"}));
    CHECK(g.degree(g.root()) == 3);
    CHECK(g.degree(VertexId("v.0.2")) == 4);
    CHECK_THROWS_AS(g.neighbors(VertexId("v.3")), AddressError);
    CHECK_THROWS_AS(g.neighbors(VertexId("x")), AddressError);
}

TEST_CASE("theorem3 neighbors around a subdividing vertex") {
    Graph g = make_graph(spec("theorem3", 3));
    // hand expansion one level above the subdivided edge between the root's
    // successors 0 and 1
    CHECK(g.neighbors(VertexId("v.0~1")) ==
          addrs({"v.0", "v.0~1.0", "v.0~1.1", "v.0~1.2", "v.0~1.3", "v.1"}));
    CHECK(g.degree(VertexId("v.0~1")) == 6);
    // tree-vertex with predecessor: 1 + (k+1) successors + k subdividers
    CHECK(g.degree(VertexId("v.2")) == 8);
    CHECK(g.degree(g.root()) == 4);

    // every neighbor list respects the minimum-degree floor
    for (const char* name : {"v", "v.0", "v.0~1", "v.0~1.2", "v.3.1~3"}) {
        CHECK(g.degree(VertexId(name)) >= 3);
    }
}

TEST_CASE("neighbor symmetry on sampled vertices") {
    for (auto fam : {spec("branching_tree", 2), spec("theorem3", 2), spec("leveled_tree_cycles", 3),
                     spec("clique_ray", 3)}) {
        Graph g = make_graph(fam);
        VertexList sample{g.root()};
        for (const VertexId& nb : g.neighbors(g.root())) sample.push_back(nb);
        VertexList second;
        for (const VertexId& v : sample) {
            for (const VertexId& nb : g.neighbors(v)) second.push_back(nb);
        }
        sample.insert(sample.end(), second.begin(), second.end());
        for (const VertexId& v : sample) {
            for (const VertexId& nb : g.neighbors(v)) {
                const VertexList& back = g.neighbors(nb);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
        }
    }
}

TEST_CASE("balls in branching trees") {
    Graph g2 = make_graph(spec("branching_tree", 2));
    Window b0 = ball(g2, g2.root(), 0);
    CHECK(b0.size() == 1);
    CHECK(b0.true_degree(0) == 2);
    CHECK(b0.boundary(0));

    Window b1 = ball(g2, g2.root(), 1);
    CHECK(b1.size() == 3);
    CHECK(b1.edge_count() == 2);

    Graph g3 = make_graph(spec("branching_tree", 3));
    CHECK(ball(g3, g3.root(), 2).size() == 13);  // 1 + 3 + 9
}

TEST_CASE("ball vertices grow monotonically") {
    Graph g = make_graph(spec("theorem3", 2));
    Window smaller = ball(g, g.root(), 1);
    Window larger = ball(g, g.root(), 2);
    for (const VertexId& v : smaller.vertices()) CHECK(larger.contains(v));
    CHECK(larger.edge_count() >= smaller.edge_count());
}

TEST_CASE("induced window equals its ball") {
    Graph g = make_graph(spec("branching_tree", 3));
    Window b = ball(g, g.root(), 2);
    Window w = induced_window(g, VertexSet(b.vertices().begin(), b.vertices().end()));
    CHECK(w.same_as(b));
}

TEST_CASE("window true degrees come from the oracle") {
    Graph g = make_graph(spec("branching_tree", 3));
    Window b = ball(g, g.root(), 2);
    for (int i = 0; i < b.size(); ++i) {
        CHECK(b.true_degree(i) == g.degree(b.vertex(i)));
        CHECK(b.true_degree(i) >= b.window_degree(i));
        CHECK(b.boundary(i) == (b.true_degree(i) > b.window_degree(i)));
    }
}

TEST_CASE("average set degree") {
    Graph g = make_graph(spec("branching_tree", 3));
    CHECK(avg_set_degree(g, {VertexId("v.0.1")}) == Rational(4));
    CHECK(avg_set_degree(g, {g.root(), VertexId("v.0")}) == Rational(7, 2));
    CHECK_THROWS_AS(avg_set_degree(g, {}), DomainError);

    // constant on regular windows
    VertexList cycle = addrs({"c0", "c1", "c2", "c3", "c4"});
    Window w = Window::from_edges(cycle, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Graph fg = make_finite_graph(w);
    CHECK(avg_set_degree(fg, {VertexId("c0"), VertexId("c2"), VertexId("c3")}) == Rational(2));
}

TEST_CASE("truncation takes a breadth-lex prefix") {
    Graph g = make_graph(spec("theorem3", 3));
    Window t = truncation(g, g.root(), 1000);
    CHECK(t.size() == 1000);
    CHECK(t.contains(g.root()));
    int interior = 0;
    for (int i = 0; i < t.size(); ++i) {
        if (!t.boundary(i)) {
            ++interior;
            CHECK(t.true_degree(i) >= 3);
        }
    }
    CHECK(interior > 0);
}

TEST_CASE("dot export round-trips") {
    Graph g = make_graph(spec("branching_tree", 2));
    Window b = ball(g, g.root(), 2);
    Window back = Window::from_dot(b.to_dot());
    CHECK(back.same_as(b));
    for (int i = 0; i < b.size(); ++i) {
        CHECK(back.true_degree(i) == b.true_degree(i));
    }
}

TEST_CASE("memoization is invisible and counted") {
    Graph g = make_graph(spec("branching_tree", 2));
    auto q0 = g.query_count();
    VertexList first = g.neighbors(VertexId("v.0"));
    VertexList second = g.neighbors(VertexId("v.0"));
    CHECK(first == second);
    CHECK(g.query_count() == q0 + 2);
}
