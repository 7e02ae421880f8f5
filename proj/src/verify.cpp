#include "endegree/verify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace endegree {

namespace {

std::vector<int> peel_order(const Window& w, int k) {
    const int n = w.size();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> alive(static_cast<size_t>(n), 1);
    for (int i = 0; i < n; ++i) deg[static_cast<size_t>(i)] = w.window_degree(i);
    std::vector<int> order;
    while (true) {
        int pick = -1;
        for (int i = 0; i < n; ++i) {
            if (!alive[static_cast<size_t>(i)] || deg[static_cast<size_t>(i)] >= k) continue;
            if (pick < 0 || deg[static_cast<size_t>(i)] < deg[static_cast<size_t>(pick)]) pick = i;
        }
        if (pick < 0) break;
        alive[static_cast<size_t>(pick)] = 0;
        order.push_back(pick);
        for (int nb : w.adj(pick)) {
            if (alive[static_cast<size_t>(nb)]) --deg[static_cast<size_t>(nb)];
        }
    }
    return order;
}

}  // namespace

Window k_core(const Window& w, int k) {
    std::vector<char> alive(static_cast<size_t>(w.size()), 1);
    for (int i : peel_order(w, k)) alive[static_cast<size_t>(i)] = 0;
    std::vector<int> keep;
    for (int i = 0; i < w.size(); ++i) {
        if (alive[static_cast<size_t>(i)]) keep.push_back(i);
    }
    return w.induced(keep);
}

std::vector<int> k_core_peel_trace(const Window& w, int k) { return peel_order(w, k); }

bool brute_min_degree(const Window& w, int k) {
    const int n = w.size();
    if (n > 12) throw DomainError("brute subset oracle is limited to 12 vertices");
    std::vector<unsigned> bits(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int nb : w.adj(i)) bits[static_cast<size_t>(i)] |= 1u << nb;
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if ((mask >> i) & 1u) {
                ok = __builtin_popcount(bits[static_cast<size_t>(i)] & mask) >= k;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

// Dinic max flow on the density test network.
struct FlowNet {
    struct Edge {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Edge>> adj;
    std::vector<int> level, iter;

    explicit FlowNet(int n) : adj(static_cast<size_t>(n)) {}

    void add(int a, int b, long long cap_ab, long long cap_ba = 0) {
        adj[static_cast<size_t>(a)].push_back({b, cap_ab, static_cast<int>(adj[static_cast<size_t>(b)].size())});
        adj[static_cast<size_t>(b)].push_back({a, cap_ba, static_cast<int>(adj[static_cast<size_t>(a)].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(adj.size(), -1);
        std::deque<int> queue{s};
        level[static_cast<size_t>(s)] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const Edge& e : adj[static_cast<size_t>(x)]) {
                if (e.cap > 0 && level[static_cast<size_t>(e.to)] < 0) {
                    level[static_cast<size_t>(e.to)] = level[static_cast<size_t>(x)] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        return level[static_cast<size_t>(t)] >= 0;
    }

    long long dfs(int x, int t, long long f) {
        if (x == t) return f;
        for (int& i = iter[static_cast<size_t>(x)]; i < static_cast<int>(adj[static_cast<size_t>(x)].size()); ++i) {
            Edge& e = adj[static_cast<size_t>(x)][static_cast<size_t>(i)];
            if (e.cap > 0 && level[static_cast<size_t>(e.to)] == level[static_cast<size_t>(x)] + 1) {
                long long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    adj[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter.assign(adj.size(), 0);
            long long f;
            while ((f = dfs(s, t, LLONG_MAX)) > 0) flow += f;
        }
        return flow;
    }

    // Vertices that cannot reach t in the residual graph: the maximal
    // min-cut source side.
    std::vector<char> max_source_side(int t) {
        std::vector<char> reaches_t(adj.size(), 0);
        std::deque<int> queue{t};
        reaches_t[static_cast<size_t>(t)] = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const Edge& e : adj[static_cast<size_t>(x)]) {
                // an incoming residual edge into x exists iff the reverse
                // edge (x -> e.to stored here) has residual capacity left
                const Edge& back = adj[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)];
                if (back.cap > 0 && !reaches_t[static_cast<size_t>(e.to)]) {
                    reaches_t[static_cast<size_t>(e.to)] = 1;
                    queue.push_back(e.to);
                }
            }
        }
        for (auto& flag : reaches_t) flag = flag ? 0 : 1;
        return reaches_t;
    }
};

// Min cut of the test network equals n*m*q - 2*q*max_U (m(U) - g|U|) for
// g = p/q, so a cut below n*m*q witnesses a set denser than g.
struct DensityTest {
    std::vector<char> source_side;  // over window indices
    bool improved = false;
};

DensityTest run_density_test(const Window& w, long long p, long long q, bool maximal) {
    const int n = w.size();
    const long long m = w.edge_count();
    FlowNet net(n + 2);
    const int s = n;
    const int t = n + 1;
    for (int i = 0; i < n; ++i) {
        net.add(s, i, m * q);
        net.add(i, t, m * q + 2 * p - static_cast<long long>(w.window_degree(i)) * q);
        for (int nb : w.adj(i)) {
            if (nb > i) net.add(i, nb, q, q);
        }
    }
    long long flow = net.max_flow(s, t);
    DensityTest result;
    result.improved = flow < static_cast<long long>(n) * m * q;
    std::vector<char> side;
    if (maximal) {
        side = net.max_source_side(t);
    } else {
        side.assign(static_cast<size_t>(n + 2), 0);
        std::deque<int> queue{s};
        side[static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& e : net.adj[static_cast<size_t>(x)]) {
                if (e.cap > 0 && !side[static_cast<size_t>(e.to)]) {
                    side[static_cast<size_t>(e.to)] = 1;
                    queue.push_back(e.to);
                }
            }
        }
    }
    result.source_side.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) result.source_side[static_cast<size_t>(i)] = side[static_cast<size_t>(i)];
    return result;
}

Rational subset_density(const Window& w, const std::vector<char>& pick) {
    long long verts = 0;
    long long edges = 0;
    for (int i = 0; i < w.size(); ++i) {
        if (!pick[static_cast<size_t>(i)]) continue;
        ++verts;
        for (int nb : w.adj(i)) {
            if (nb > i && pick[static_cast<size_t>(nb)]) ++edges;
        }
    }
    return Rational(edges, verts);
}

}  // namespace

DensestResult densest_subgraph(const Window& w) {
    if (w.empty()) throw DomainError("densest subgraph of an empty window");
    if (w.size() > 2000) throw DomainError("window too large for the exact densest search");
    DensestResult out;
    if (w.edge_count() == 0) {
        out.sub = w;
        out.average_degree = Rational(0);
        return out;
    }
    Rational g(w.edge_count(), static_cast<long long>(w.size()));
    while (true) {
        DensityTest test = run_density_test(w, g.numerator(), g.denominator(), false);
        if (!test.improved) break;
        g = subset_density(w, test.source_side);
    }
    DensityTest final_test = run_density_test(w, g.numerator(), g.denominator(), true);
    std::vector<int> keep;
    for (int i = 0; i < w.size(); ++i) {
        if (final_test.source_side[static_cast<size_t>(i)]) keep.push_back(i);
    }
    out.sub = w.induced(keep);
    out.average_degree = out.sub.average_window_degree();
    return out;
}

bool highest_vertex_check(const Graph& g, const Window& sub) {
    if (g.family().name() != "theorem3") {
        throw DomainError("highest-vertex check applies to theorem3 windows only");
    }
    if (sub.empty()) return true;
    int top = -1;
    for (int i = 0; i < sub.size(); ++i) {
        top = std::max(top, g.family().height(sub.vertex(i)));
    }
    for (int i = 0; i < sub.size(); ++i) {
        if (g.family().height(sub.vertex(i)) == top && sub.window_degree(i) <= 2) return true;
    }
    return false;
}

bool check_certificate(const Graph& g, const ExtractionReport& report) {
    if (report.status != "ok") return false;
    VertexSet expected = report.state.separator;
    for (const VertexId& s : report.state.separator) {
        for (const VertexId& nb : g.neighbors(s)) expected.insert(nb);
    }
    Window h = Window::build(g, expected);
    if (!h.same_as(report.subgraph)) return false;
    if (static_cast<int>(report.subgraph_degrees.size()) != h.size()) return false;
    for (int i = 0; i < h.size(); ++i) {
        if (report.subgraph_degrees[static_cast<size_t>(i)] != h.window_degree(i)) return false;
    }
    if (h.empty()) return false;
    if (report.mode.kind == GoodnessMode::Kind::MinDegree) {
        for (int i = 0; i < h.size(); ++i) {
            if (h.window_degree(i) < report.mode.k) return false;
        }
        return true;
    }
    return h.average_window_degree() > report.mode.q;
}

namespace {

bool window_connected(const Graph& g, const VertexSet& verts) {
    if (verts.empty()) return true;
    Window w = Window::build(g, verts);
    std::vector<char> seen(static_cast<size_t>(w.size()), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int nb : w.adj(x)) {
            if (!seen[static_cast<size_t>(nb)]) {
                seen[static_cast<size_t>(nb)] = 1;
                ++count;
                queue.push_back(nb);
            }
        }
    }
    return count == w.size();
}

}  // namespace

bool check_history(const Graph& g, const ExtractionReport& report, const EndOracle& oracle) {
    VertexSet previous;
    for (const StepRecord& step : report.state.history) {
        VertexSet current(step.separator_after.begin(), step.separator_after.end());
        for (const VertexId& v : previous) {
            if (!current.count(v)) return false;  // separators must grow
        }
        if (!window_connected(g, current)) return false;  // (2)
        auto model = g.component_model(current);
        for (int c = 0; c < model->component_count(); ++c) {
            if (!model->component_infinite(c)) return false;  // (3)
        }
        previous = std::move(current);
    }
    // (1) every processed end lives in its recorded good component, and
    // (4) recorded components survive every later separator untouched.
    for (const GoodComponentRecord& rec : report.state.assigned) {
        if (lives_in(g, oracle, rec.end, rec.component, 64) != Tri::Yes) return false;
        for (const StepRecord& step : report.state.history) {
            for (const VertexId& v : step.separator_after) {
                if (rec.component.separator.count(v)) continue;
                if (in_region(g, rec.component, v) == Tri::Yes) return false;
            }
        }
    }
    return true;
}

}  // namespace endegree
