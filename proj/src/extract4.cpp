#include "endegree/extract4.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

namespace endegree {

namespace {

bool region_holds(const Graph& g, const Region& r, const VertexId& x) {
    return !r.separator.count(x) && in_region(g, r, x) == Tri::Yes;
}

}  // namespace

std::vector<Region> cover_ends(const Graph& g, const NestedFamily& family, const VertexId& v,
                               const GoodnessMode& mode, const CoverBudgets& budgets) {
    g.family().validate_address(v);
    VertexSet explored{v};
    std::vector<Region> chosen;
    std::ostringstream rejections;

    auto covered = [&](const VertexId& x) {
        for (const Region& r : chosen) {
            if (region_holds(g, r, x)) return true;
        }
        return false;
    };

    while (true) {
        // lex-least frontier vertex not sealed by a chosen region
        std::optional<VertexId> next;
        for (const VertexId& e : explored) {
            for (const VertexId& nb : g.neighbors(e)) {
                if (explored.count(nb) || covered(nb)) continue;
                if (!next || nb < *next) next = nb;
            }
        }
        if (!next) break;

        bool adopted = false;
        for (std::uint64_t idx = 0; idx < budgets.stream_prefix && !adopted; ++idx) {
            auto r = family.nth(idx);
            if (!r) break;
            if (!region_holds(g, *r, *next)) continue;
            if (region_holds(g, *r, v)) continue;
            bool overlap = false;
            for (const VertexId& e : explored) {
                if (region_holds(g, *r, e)) {
                    overlap = true;
                    break;
                }
            }
            for (const Region& c : chosen) {
                if (overlap) break;
                overlap = nestedness(g, *r, c).rel != Nestedness::Disjoint;
            }
            if (overlap) continue;
            if (!region_good(g, *r, mode)) {
                auto d = min_out_degree(g, *r);
                rejections << "region " << idx << " at " << next->addr << " fails "
                           << mode.describe() << " (min out-degree "
                           << (d ? std::to_string(*d) : "inf") << "); ";
                continue;
            }
            chosen.push_back(*r);
            adopted = true;
        }
        if (!adopted) {
            explored.insert(*next);
            if (explored.size() > budgets.explored) {
                throw BudgetError("frontier search could not be sealed from " + v.addr + ": " +
                                  rejections.str());
            }
        }
    }
    return chosen;
}

std::vector<Region> disjointify(const Graph& g, const std::vector<Region>& regions) {
    std::vector<Region> keep;
    for (size_t i = 0; i < regions.size(); ++i) {
        bool contained = false;
        for (size_t j = 0; j < regions.size() && !contained; ++j) {
            if (i == j) continue;
            Nestedness rel = nestedness(g, regions[i], regions[j]).rel;
            if (rel == Nestedness::Crossing) {
                throw DomainError("disjointify requires a nested family");
            }
            contained = rel == Nestedness::Subset || (rel == Nestedness::Equal && j < i);
        }
        if (!contained) keep.push_back(regions[i]);
    }
    return keep;
}

Window residual(const Graph& g, const std::vector<Region>& regions, const VertexId& v,
                std::uint64_t budget) {
    for (const Region& r : regions) {
        if (region_holds(g, r, v)) throw DomainError("residual seed lies inside a region");
    }
    BudgetMeter meter(budget);
    VertexSet x{v};
    VertexList queue{v};
    while (!queue.empty()) {
        VertexId cur = queue.back();
        queue.pop_back();
        const VertexList* nbrs = g.neighbors(cur, meter);
        if (!nbrs) throw BudgetError("residual search exhausted its budget", meter.spent());
        for (const VertexId& nb : *nbrs) {
            if (x.count(nb)) continue;
            bool inside = false;
            for (const Region& r : regions) {
                if (region_holds(g, r, nb)) {
                    inside = true;
                    break;
                }
            }
            if (inside) continue;
            x.insert(nb);
            queue.push_back(nb);
        }
    }
    return Window::build(g, x);
}

Window assemble_h(const Graph& g, const Window& x, const std::vector<Region>& regions) {
    VertexSet verts(x.vertices().begin(), x.vertices().end());
    for (const Region& r : regions) {
        for (const VertexId& w : vertex_boundary(g, r)) verts.insert(w);
    }
    return Window::build(g, verts);
}

namespace {

struct Corollary5State {
    Graph g;
    std::function<DefiningSequence(const EndId&)> per_end;
    std::function<std::optional<EndId>(std::size_t)> stream;
    std::uint64_t budget;
    std::vector<Region> emitted;
    VertexSet avoid;  // union of the recomputed neighborhoods N(C_i)
    std::map<EndId, std::set<std::size_t>> taken;
    std::size_t stream_pos = 0;

    void emit_next() {
        auto end = stream(stream_pos++);
        if (!end) throw DomainError("end stream exhausted");
        DefiningSequence seq = per_end(*end);
        for (std::uint64_t idx = 0; idx < budget; ++idx) {
            if (taken[*end].count(idx)) continue;
            Region r = seq.nth(idx);
            bool duplicate = false;
            for (const Region& prev : emitted) {
                if (prev.separator == r.separator && prev.seed == r.seed) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) continue;
            bool clear = true;
            for (const VertexId& a : avoid) {
                if (region_holds(g, r, a)) {
                    clear = false;
                    break;
                }
            }
            if (!clear) continue;
            taken[*end].insert(idx);
            for (const VertexId& s : r.separator) {
                for (const VertexId& nb : g.neighbors(s)) {
                    if (region_holds(g, r, nb)) {
                        avoid.insert(s);
                        break;
                    }
                }
            }
            emitted.push_back(std::move(r));
            return;
        }
        throw BudgetError("defining sequence for " + end->name +
                          " ran out of regions clearing the avoid set");
    }
};

}  // namespace

NestedFamily corollary5_nest(const Graph& g, std::function<DefiningSequence(const EndId&)> per_end,
                             std::function<std::optional<EndId>(std::size_t)> end_stream,
                             std::uint64_t prefix_budget) {
    auto state = std::make_shared<Corollary5State>(
        Corollary5State{g, std::move(per_end), std::move(end_stream), prefix_budget, {}, {}, {}, 0});
    NestedFamily out;
    out.certificate = "corollary5";
    out.nth = [state](std::size_t i) -> std::optional<Region> {
        while (state->emitted.size() <= i) state->emit_next();
        return state->emitted[i];
    };
    return out;
}

}  // namespace endegree
