#include "endegree/extract2.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "endegree/report.hpp"

namespace endegree {

namespace {

bool set_connected(const Graph& g, const VertexSet& verts) {
    if (verts.size() <= 1) return true;
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

// Pieces of G[B] as index sets over the sorted B list.
std::vector<int> piece_labels(const Graph& g, const VertexList& b) {
    Window w = Window::build(g, VertexSet(b.begin(), b.end()));
    std::vector<int> label(static_cast<size_t>(w.size()), -1);
    int next = 0;
    for (int i = 0; i < w.size(); ++i) {
        if (label[static_cast<size_t>(i)] >= 0) continue;
        std::deque<int> queue{i};
        label[static_cast<size_t>(i)] = next;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int nb : w.adj(x)) {
                if (label[static_cast<size_t>(nb)] < 0) {
                    label[static_cast<size_t>(nb)] = next;
                    queue.push_back(nb);
                }
            }
        }
        ++next;
    }
    return label;
}

// Shortest path inside `allowed` from the piece holding b.front()'s label to
// any vertex of a different piece; lexicographic tie-breaking.
VertexList connect_pieces(const Graph& g, const VertexList& b, const std::vector<int>& labels,
                          const std::function<bool(const VertexId&)>& allowed, BudgetMeter& meter) {
    std::map<VertexId, int> piece_of;
    for (size_t i = 0; i < b.size(); ++i) piece_of[b[i]] = labels[i];
    const int home = labels[0];

    std::map<VertexId, VertexId> parent;
    std::deque<VertexId> queue;
    for (size_t i = 0; i < b.size(); ++i) {
        if (labels[i] == home) {
            queue.push_back(b[i]);
            parent.emplace(b[i], b[i]);
        }
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        const VertexList* nbrs = g.neighbors(x, meter);
        if (!nbrs) throw BudgetError("connectification path search exhausted its budget", meter.spent());
        for (const VertexId& nb : *nbrs) {
            if (parent.count(nb)) continue;
            auto piece = piece_of.find(nb);
            if (piece != piece_of.end()) {
                if (piece->second == home) continue;
                VertexList path{nb};
                VertexId cur = x;
                while (parent.at(cur) != cur) {
                    path.push_back(cur);
                    cur = parent.at(cur);
                }
                path.push_back(cur);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (!allowed(nb)) continue;
            parent.emplace(nb, x);
            queue.push_back(nb);
        }
    }
    throw BudgetError("no connecting path exists in the working subgraph", meter.spent());
}

// Seal a component of G - S as a region whose separator is exactly N(C).
Region sealed_component(const Graph& g, const VertexSet& s, const VertexId& seed) {
    auto model = g.component_model(s);
    int comp = model->component_of(seed);
    VertexSet sealed;
    for (const VertexId& sep : s) {
        for (const VertexId& nb : g.neighbors(sep)) {
            if (s.count(nb)) continue;
            if (model->component_of(nb) == comp) {
                sealed.insert(sep);
                break;
            }
        }
    }
    return make_region(std::move(sealed), seed);
}

VertexId component_seed_for_end(const Graph& g, const EndOracle& oracle, const EndId& end,
                                const VertexSet& s, std::uint64_t budget) {
    int max_height = 0;
    for (const VertexId& v : s) max_height = std::max(max_height, g.family().height(v));
    for (std::uint64_t i = 0; i <= budget; ++i) {
        VertexId v = oracle.ray(end, i);
        if (g.family().height(v) > max_height && !s.count(v)) return v;
    }
    throw BudgetError("canonical ray did not clear the separator within budget", budget);
}

}  // namespace

VertexSet init_s0(const Graph& g, const GoodnessMode& mode, std::uint64_t budget) {
    VertexSet s;
    if (mode.kind == GoodnessMode::Kind::AvgDegree && !mode.s0.empty()) {
        for (const VertexId& v : mode.s0) g.family().validate_address(v);
        s = mode.s0;
    } else {
        s.insert(g.root());
    }
    BudgetMeter meter(budget);
    for (int round = 0; round < 100; ++round) {
        bool changed = false;
        // fold in all finite components
        auto model = g.component_model(s);
        for (const VertexId& anchor : model->component_anchors()) {
            auto verts = model->finite_vertices(anchor);
            if (verts) {
                for (const VertexId& v : *verts) s.insert(v);
                changed = true;
            }
        }
        if (!set_connected(g, s)) {
            VertexList b(s.begin(), s.end());
            VertexList path = connect_pieces(g, b, piece_labels(g, b),
                                             [](const VertexId&) { return true; }, meter);
            for (const VertexId& v : path) s.insert(v);
            changed = true;
        }
        if (!changed) return s;
    }
    throw BudgetError("initial separator closure did not stabilize");
}

bool all_components_good(const Graph& g, const VertexSet& separator, const GoodnessMode& mode) {
    auto model = g.component_model(separator);
    for (const VertexId& anchor : model->component_anchors()) {
        if (!region_good(g, make_region(separator, anchor), mode)) return false;
    }
    return true;
}

void extract_step(const Graph& g, ExtractState& state, const EndOracle& oracle,
                  const GoodnessMode& mode, const Budgets& budgets) {
    auto end = oracle.enumerate(state.next_end++);
    if (!end) throw DomainError("end enumeration exhausted");

    StepRecord record;
    record.step = ++state.iteration;
    record.end = *end;

    VertexId seed = component_seed_for_end(g, oracle, *end, state.separator, budgets.path_search);
    Region component = make_region(state.separator, seed);

    if (region_good(g, component, mode)) {
        Region sealed = sealed_component(g, state.separator, seed);
        record.already_good = true;
        record.separator_after.assign(state.separator.begin(), state.separator.end());
        state.assigned.push_back({*end, sealed});
        state.history.push_back(std::move(record));
        return;
    }

    Region adopted = good_region_for(g, oracle, *end, state.separator, mode, budgets.oracle);

    // S' grows from S u N(C') inside G[S u C] - C', then swallows any finite
    // components it cut off.
    auto model = g.component_model(state.separator);
    int comp_id = model->component_of(seed);
    auto in_working = [&](const VertexId& x) {
        if (state.separator.count(x)) return true;
        if (model->component_of(x) != comp_id) return false;
        return in_region(g, adopted, x) != Tri::Yes;
    };

    VertexSet grown = state.separator;
    for (const VertexId& v : adopted.separator) grown.insert(v);
    BudgetMeter meter(budgets.path_search);
    while (true) {
        VertexList b(grown.begin(), grown.end());
        std::vector<int> labels = piece_labels(g, b);
        if (*std::max_element(labels.begin(), labels.end()) == 0) break;
        VertexList path = connect_pieces(g, b, labels, in_working, meter);
        record.connect_paths.push_back(path);
        for (const VertexId& v : path) grown.insert(v);
    }

    auto grown_model = g.component_model(grown);
    for (const VertexId& anchor : grown_model->component_anchors()) {
        auto verts = grown_model->finite_vertices(anchor);
        if (verts) {
            record.absorbed.push_back(*verts);
            for (const VertexId& v : *verts) grown.insert(v);
        }
    }

    state.separator = std::move(grown);
    record.adopted = adopted;
    record.separator_after.assign(state.separator.begin(), state.separator.end());
    state.assigned.push_back({*end, adopted});
    state.history.push_back(std::move(record));
}

ExtractionReport extract(const Graph& g, const EndOracle& oracle, const GoodnessMode& mode,
                         const Budgets& budgets) {
    ExtractionReport report;
    report.family = graph_spec(g);
    report.mode = mode;
    report.mode.connected_complement = true;  // the step machinery needs G - C' connected
    std::uint64_t q0 = g.query_count();

    report.state.separator = init_s0(g, report.mode, budgets.path_search);
    report.status = "budget_exhausted";

    std::set<EndId> processed;
    for (std::uint64_t iter = 0; iter < budgets.iterations; ++iter) {
        bool ends_done = true;
        if (oracle.ends_complete) {
            for (const EndId& e : oracle.known_ends) ends_done = ends_done && processed.count(e);
        }
        if (ends_done && all_components_good(g, report.state.separator, report.mode)) {
            report.status = "ok";
            break;
        }
        auto next = oracle.enumerate(report.state.next_end);
        if (!next) {
            if (all_components_good(g, report.state.separator, report.mode)) report.status = "ok";
            break;
        }
        try {
            extract_step(g, report.state, oracle, report.mode, budgets);
            processed.insert(*next);
        } catch (const OracleExhausted& e) {
            report.status = "oracle_exhausted";
            report.oracle_failure_certified = e.certified;
            break;
        }
    }

    if (report.status == "ok") {
        VertexSet h_verts = report.state.separator;
        for (const VertexId& s : report.state.separator) {
            for (const VertexId& nb : g.neighbors(s)) h_verts.insert(nb);
        }
        report.subgraph = Window::build(g, h_verts);
        for (int i = 0; i < report.subgraph.size(); ++i) {
            report.subgraph_degrees.push_back(report.subgraph.window_degree(i));
        }
    }
    report.oracle_queries = g.query_count() - q0;
    return report;
}

nlohmann::json ExtractionReport::to_json() const {
    nlohmann::json steps = nlohmann::json::array();
    for (const StepRecord& s : state.history) {
        nlohmann::json j{{"step", s.step},
                         {"end", s.end.name},
                         {"already_good", s.already_good}};
        j["adopted"] = s.adopted ? region_to_json(*s.adopted) : nlohmann::json();
        nlohmann::json paths = nlohmann::json::array();
        for (const VertexList& p : s.connect_paths) {
            nlohmann::json one = nlohmann::json::array();
            for (const VertexId& v : p) one.push_back(v.addr);
            paths.push_back(one);
        }
        j["connect_paths"] = paths;
        nlohmann::json absorbed = nlohmann::json::array();
        for (const VertexList& a : s.absorbed) {
            nlohmann::json one = nlohmann::json::array();
            for (const VertexId& v : a) one.push_back(v.addr);
            absorbed.push_back(one);
        }
        j["absorbed"] = absorbed;
        nlohmann::json sep = nlohmann::json::array();
        for (const VertexId& v : s.separator_after) sep.push_back(v.addr);
        j["separator_after"] = sep;
        steps.push_back(j);
    }
    nlohmann::json assigned = nlohmann::json::array();
    for (const GoodComponentRecord& rec : state.assigned) {
        assigned.push_back(
            nlohmann::json{{"end", rec.end.name}, {"component", region_to_json(rec.component)}});
    }
    nlohmann::json sep = nlohmann::json::array();
    for (const VertexId& v : state.separator) sep.push_back(v.addr);
    nlohmann::json j{{"kind", "extract2"},
                     {"family", family.to_json()},
                     {"mode", mode_to_json(mode)},
                     {"status", status},
                     {"oracle_failure_certified", oracle_failure_certified},
                     {"iterations", state.iteration},
                     {"history", steps},
                     {"assigned", assigned},
                     {"final_separator", sep},
                     {"oracle_queries", oracle_queries}};
    if (status == "ok") {
        j["subgraph"] = window_to_json(subgraph);
        nlohmann::json degs = nlohmann::json::array();
        for (int d : subgraph_degrees) degs.push_back(d);
        j["subgraph_degrees"] = degs;
        int min_deg = subgraph.empty() ? 0 : *std::min_element(subgraph_degrees.begin(),
                                                               subgraph_degrees.end());
        j["certificate"] = nlohmann::json{
            {"min_degree", min_deg},
            {"average_degree", rational_to_json(subgraph.average_window_degree())}};
    }
    return j;
}

IntroResult intro_search(const Graph& g, int k, std::uint64_t max_depth) {
    GoodnessMode mode = GoodnessMode::min_degree(k, false);
    IntroResult result;
    result.separator = init_s0(g, mode, 1u << 20);
    result.status = "budget_exhausted";
    std::optional<Region> last_bad;

    for (std::uint64_t depth = 0; depth <= max_depth; ++depth) {
        auto model = g.component_model(result.separator);
        struct Bad {
            VertexId anchor;
            VertexId witness;
            int degree;
        };
        std::vector<Bad> bad;
        for (const VertexId& anchor : model->component_anchors()) {
            Region r = make_region(result.separator, anchor);
            Window out = out_graph(g, r);
            VertexId witness;
            int witness_deg = -1;
            for (const VertexId& w : vertex_boundary(g, r)) {
                int d = out.window_degree(out.index_of(w));
                if (d < k && (witness_deg < 0 || d < witness_deg ||
                              (d == witness_deg && w < witness))) {
                    witness = w;
                    witness_deg = d;
                }
            }
            if (witness_deg >= 0) bad.push_back({anchor, witness, witness_deg});
        }
        if (bad.empty()) {
            result.all_good = true;
            result.status = "all_good";
            VertexSet h_verts = result.separator;
            for (const VertexId& s : result.separator) {
                for (const VertexId& nb : g.neighbors(s)) h_verts.insert(nb);
            }
            result.subgraph = Window::build(g, h_verts);
            return result;
        }
        const Bad* chosen = nullptr;
        for (const Bad& b : bad) {
            if (last_bad && in_region(g, *last_bad, b.anchor) != Tri::Yes) continue;
            if (!chosen || b.anchor < chosen->anchor) chosen = &b;
        }
        if (!chosen) {
            result.status = "no_bad_descent";
            return result;
        }
        Region sealed = sealed_component(g, result.separator, chosen->anchor);
        result.chain.push_back({sealed, chosen->witness, chosen->degree});
        last_bad = sealed;

        // descend: absorb the frontier into the chosen bad component only
        VertexSet frontier;
        auto chosen_comp = model->component_of(chosen->anchor);
        for (const VertexId& s : result.separator) {
            for (const VertexId& nb : g.neighbors(s)) {
                if (result.separator.count(nb)) continue;
                if (model->component_of(nb) == chosen_comp) frontier.insert(nb);
            }
        }
        for (const VertexId& v : frontier) result.separator.insert(v);
    }
    return result;
}

nlohmann::json IntroResult::to_json() const {
    nlohmann::json sep = nlohmann::json::array();
    for (const VertexId& v : separator) sep.push_back(v.addr);
    nlohmann::json j{{"kind", "intro"}, {"status", status}, {"separator", sep}};
    if (all_good && subgraph) {
        j["subgraph"] = window_to_json(*subgraph);
    }
    nlohmann::json steps = nlohmann::json::array();
    for (const ChainStep& s : chain) {
        steps.push_back(nlohmann::json{{"region", region_to_json(s.region)},
                                       {"witness", s.witness.addr},
                                       {"witness_out_degree", s.witness_out_degree}});
    }
    j["chain"] = steps;
    return j;
}

}  // namespace endegree
