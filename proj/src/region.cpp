#include "endegree/region.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace endegree {

Region make_region(VertexSet separator, VertexId seed, MembershipOracle oracle) {
    if (separator.count(seed)) throw DomainError("region seed lies in its separator");
    return Region{std::move(separator), std::move(seed), oracle};
}

namespace {

struct BfsOutcome {
    enum class Kind { Found, Exhausted, Budget };
    Kind kind = Kind::Budget;
    VertexSet visited;
    std::map<VertexId, VertexId> parent;
    std::uint64_t spent = 0;
};

// Lexicographic BFS from seed over G - separator, spending one query per
// expanded vertex. Stops early when target is reached.
BfsOutcome budgeted_bfs(const Graph& g, const VertexSet& separator, const VertexId& seed,
                        const VertexId* target, std::uint64_t budget) {
    BfsOutcome out;
    BudgetMeter meter(budget);
    std::deque<VertexId> queue{seed};
    out.visited.insert(seed);
    if (target && seed == *target) {
        out.kind = BfsOutcome::Kind::Found;
        out.spent = 0;
        return out;
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        const VertexList* nbrs = g.neighbors(x, meter);
        if (!nbrs) {
            out.kind = BfsOutcome::Kind::Budget;
            out.spent = meter.spent();
            return out;
        }
        for (const VertexId& nb : *nbrs) {
            if (separator.count(nb) || out.visited.count(nb)) continue;
            out.visited.insert(nb);
            out.parent.emplace(nb, x);
            if (target && nb == *target) {
                out.kind = BfsOutcome::Kind::Found;
                out.spent = meter.spent();
                return out;
            }
            queue.push_back(nb);
        }
    }
    out.kind = BfsOutcome::Kind::Exhausted;
    out.spent = meter.spent();
    return out;
}

VertexList reconstruct(const BfsOutcome& out, const VertexId& seed, const VertexId& target) {
    VertexList path{target};
    VertexId cur = target;
    while (cur != seed) {
        cur = out.parent.at(cur);
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

Tri in_region(const Graph& g, const Region& r, const VertexId& x, std::uint64_t budget) {
    if (r.separator.count(x)) return Tri::No;
    if (x == r.seed) return Tri::Yes;
    if (r.oracle == MembershipOracle::Exact) {
        auto model = g.component_model(r.separator);
        return model->same_component(r.seed, x) ? Tri::Yes : Tri::No;
    }
    BfsOutcome out = budgeted_bfs(g, r.separator, r.seed, &x, budget);
    switch (out.kind) {
        case BfsOutcome::Kind::Found:
            return Tri::Yes;
        case BfsOutcome::Kind::Exhausted:
            return Tri::No;
        case BfsOutcome::Kind::Budget:
            return Tri::Unknown;
    }
    return Tri::Unknown;
}

VertexList vertex_boundary(const Graph& g, const Region& r, std::uint64_t budget) {
    VertexSet boundary;
    VertexList undecided;
    for (const VertexId& s : r.separator) {
        for (const VertexId& nb : g.neighbors(s)) {
            if (r.separator.count(nb) || boundary.count(nb)) continue;
            Tri member = in_region(g, r, nb, budget);
            if (member == Tri::Yes) {
                boundary.insert(nb);
            } else if (member == Tri::Unknown) {
                undecided.push_back(nb);
            }
        }
    }
    if (!undecided.empty()) {
        std::sort(undecided.begin(), undecided.end());
        undecided.erase(std::unique(undecided.begin(), undecided.end()), undecided.end());
        throw IndeterminateError("membership undecided on the separator neighborhood",
                                 std::move(undecided));
    }
    return VertexList(boundary.begin(), boundary.end());
}

Window out_graph(const Graph& g, const Region& r, std::uint64_t budget) {
    VertexSet verts = r.separator;
    for (const VertexId& w : vertex_boundary(g, r, budget)) verts.insert(w);
    return Window::build(g, verts);
}

std::optional<int> min_out_degree(const Graph& g, const Region& r, std::uint64_t budget) {
    VertexList boundary = vertex_boundary(g, r, budget);
    if (boundary.empty()) return std::nullopt;
    Window w = out_graph(g, r, budget);
    int best = -1;
    for (const VertexId& v : boundary) {
        int d = w.window_degree(w.index_of(v));
        if (best < 0 || d < best) best = d;
    }
    return best;
}

Rational avg_out_degree(const Graph& g, const Region& r, std::uint64_t budget) {
    VertexList boundary = vertex_boundary(g, r, budget);
    if (boundary.empty()) throw DomainError("average out-degree of a boundaryless region");
    Window w = out_graph(g, r, budget);
    long long sum = 0;
    for (const VertexId& v : boundary) sum += w.window_degree(w.index_of(v));
    return Rational(sum, static_cast<long long>(boundary.size()));
}

ComponentAnswer same_component(const Graph& g, const VertexSet& separator, const VertexId& u,
                               const VertexId& v, std::uint64_t budget, MembershipOracle oracle) {
    if (separator.count(u) || separator.count(v)) {
        throw DomainError("same_component endpoints must avoid the separator");
    }
    ComponentAnswer ans;
    if (u == v) {
        ans.kind = ComponentAnswer::Kind::Same;
        ans.witness_path = {u};
        return ans;
    }
    if (oracle == MembershipOracle::Exact) {
        auto model = g.component_model(separator);
        if (model->same_component(u, v)) {
            ans.kind = ComponentAnswer::Kind::Same;
            ans.witness_path = model->path(u, v);
        } else {
            ans.kind = ComponentAnswer::Kind::Different;
        }
        return ans;
    }
    BfsOutcome out = budgeted_bfs(g, separator, u, &v, budget);
    ans.spent = out.spent;
    switch (out.kind) {
        case BfsOutcome::Kind::Found:
            ans.kind = ComponentAnswer::Kind::Same;
            ans.witness_path = reconstruct(out, u, v);
            break;
        case BfsOutcome::Kind::Exhausted:
            ans.kind = ComponentAnswer::Kind::Different;
            break;
        case BfsOutcome::Kind::Budget:
            ans.kind = ComponentAnswer::Kind::Unknown;
            break;
    }
    return ans;
}

FiniteComponentResult finite_component_check(const Graph& g, const VertexSet& separator,
                                             const VertexId& seed, std::uint64_t budget,
                                             MembershipOracle oracle) {
    if (separator.count(seed)) throw DomainError("seed lies in the separator");
    FiniteComponentResult res;
    if (oracle == MembershipOracle::Exact) {
        auto model = g.component_model(separator);
        auto verts = model->finite_vertices(seed);
        if (verts) {
            res.kind = FiniteComponentResult::Kind::Finite;
            res.vertices = std::move(*verts);
        } else {
            res.kind = FiniteComponentResult::Kind::Infinite;
        }
        return res;
    }
    BfsOutcome out = budgeted_bfs(g, separator, seed, nullptr, budget);
    res.spent = out.spent;
    if (out.kind == BfsOutcome::Kind::Exhausted) {
        res.kind = FiniteComponentResult::Kind::Finite;
        res.vertices.assign(out.visited.begin(), out.visited.end());
    } else {
        res.kind = FiniteComponentResult::Kind::Unknown;
    }
    return res;
}

namespace {

// Components of G - C for a region C: the separator's vertices together with
// the other components of G - S, glued along adjacency.
struct ContactGraph {
    std::vector<int> labels;  // union-find over |S| + component_count nodes
    int find(int x) {
        while (labels[static_cast<size_t>(x)] != x) {
            labels[static_cast<size_t>(x)] = labels[static_cast<size_t>(labels[static_cast<size_t>(x)])];
            x = labels[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { labels[static_cast<size_t>(find(a))] = find(b); }
};

int complement_pieces(const Graph& g, const Region& r) {
    auto model = g.component_model(r.separator);
    int region_comp = model->component_of(r.seed);
    VertexList seps(r.separator.begin(), r.separator.end());
    std::map<VertexId, int> sep_index;
    for (int i = 0; i < static_cast<int>(seps.size()); ++i) sep_index[seps[static_cast<size_t>(i)]] = i;

    int n_comps = model->component_count();
    ContactGraph contact;
    contact.labels.resize(seps.size() + static_cast<size_t>(n_comps));
    for (int i = 0; i < static_cast<int>(contact.labels.size()); ++i) contact.labels[static_cast<size_t>(i)] = i;

    for (int i = 0; i < static_cast<int>(seps.size()); ++i) {
        for (const VertexId& nb : g.neighbors(seps[static_cast<size_t>(i)])) {
            auto it = sep_index.find(nb);
            if (it != sep_index.end()) {
                contact.unite(i, it->second);
                continue;
            }
            int c = model->component_of(nb);
            if (c != region_comp) contact.unite(i, static_cast<int>(seps.size()) + c);
        }
    }
    // count live nodes: separator vertices plus non-region components
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(seps.size()); ++i) roots.insert(contact.find(i));
    for (int c = 0; c < n_comps; ++c) {
        if (c == region_comp) continue;
        roots.insert(contact.find(static_cast<int>(seps.size()) + c));
    }
    return static_cast<int>(roots.size());
}

}  // namespace

Tri complement_connected(const Graph& g, const Region& r, std::uint64_t /*budget*/) {
    if (r.separator.empty()) return Tri::Yes;  // G - C is empty, vacuously connected
    if (r.oracle != MembershipOracle::Exact) return Tri::Unknown;
    return complement_pieces(g, r) <= 1 ? Tri::Yes : Tri::No;
}

int complement_component_count(const Graph& g, const Region& r) {
    if (r.separator.empty()) return 0;
    return complement_pieces(g, r);
}

NestednessAnswer nestedness(const Graph& g, const Region& r1, const Region& r2,
                            std::uint64_t /*budget*/) {
    NestednessAnswer ans;
    if (r1.oracle != MembershipOracle::Exact || r2.oracle != MembershipOracle::Exact) {
        if (r1.separator == r2.separator && r1.seed == r2.seed) {
            ans.rel = Nestedness::Equal;
        }
        return ans;
    }
    VertexSet joint = r1.separator;
    for (const VertexId& s : r2.separator) joint.insert(s);
    auto model = g.component_model(joint);
    auto model1 = g.component_model(r1.separator);
    auto model2 = g.component_model(r2.separator);
    int c1 = model1->component_of(r1.seed);
    int c2 = model2->component_of(r2.seed);
    auto in1 = [&](const VertexId& x) {
        return !r1.separator.count(x) && model1->component_of(x) == c1;
    };
    auto in2 = [&](const VertexId& x) {
        return !r2.separator.count(x) && model2->component_of(x) == c2;
    };

    // Every piece of G - (S1 u S2) lies wholly in or out of each region, so
    // anchors plus the separator vertices witness all three difference sets.
    for (const VertexId& a : model->component_anchors()) {
        bool m1 = in1(a);
        bool m2 = in2(a);
        if (m1 && m2 && !ans.in_both) ans.in_both = a;
        if (m1 && !m2 && !ans.only_first) ans.only_first = a;
        if (!m1 && m2 && !ans.only_second) ans.only_second = a;
    }
    for (const VertexId& s : r2.separator) {
        if (!r1.separator.count(s) && !ans.only_first && in1(s)) ans.only_first = s;
    }
    for (const VertexId& s : r1.separator) {
        if (!r2.separator.count(s) && !ans.only_second && in2(s)) ans.only_second = s;
    }

    if (!ans.in_both) {
        ans.rel = Nestedness::Disjoint;
    } else if (ans.only_first && ans.only_second) {
        ans.rel = Nestedness::Crossing;
    } else if (ans.only_first) {
        ans.rel = Nestedness::Superset;
    } else if (ans.only_second) {
        ans.rel = Nestedness::Subset;
    } else {
        ans.rel = Nestedness::Equal;
    }
    return ans;
}

const char* to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(Nestedness n) {
    switch (n) {
        case Nestedness::Disjoint: return "disjoint";
        case Nestedness::Subset: return "subset";
        case Nestedness::Superset: return "superset";
        case Nestedness::Equal: return "equal";
        case Nestedness::Crossing: return "crossing";
        case Nestedness::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace endegree
