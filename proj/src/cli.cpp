#include "endegree/cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "endegree/extract2.hpp"
#include "endegree/extract4.hpp"
#include "endegree/families.hpp"
#include "endegree/report.hpp"
#include "endegree/verify.hpp"

namespace endegree {

namespace {

struct CommonOpts {
    std::string family;
    std::string descriptor_file;
    long long k = 0;
    long long arms = 1;
    long long stalk = 0;
    long long cross = 0;
    long long depth = 8;
    long long seed = 1;
    std::string out;
};

void add_family_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--family", opts.family, "graph family name");
    cmd->add_option("--descriptor", opts.descriptor_file, "family descriptor file (json)");
    cmd->add_option("--k", opts.k, "family parameter k");
    cmd->add_option("--arms", opts.arms, "clique_ray: number of glued rays");
    cmd->add_option("--stalk", opts.stalk, "clique_ray: prepend the sparse stalk gadget");
    cmd->add_option("--cross", opts.cross, "clique_ray: matching between first arm cliques");
    cmd->add_option("--depth", opts.depth, "desk-scale certification depth");
    cmd->add_option("--seed", opts.seed, "sampling seed");
    cmd->add_option("--out", opts.out, "write the report to this file as well");
}

FamilySpec spec_from(const CommonOpts& opts) {
    if (!opts.descriptor_file.empty()) {
        std::ifstream in(opts.descriptor_file);
        if (!in) throw DomainError("cannot read descriptor " + opts.descriptor_file);
        nlohmann::json j;
        in >> j;
        return FamilySpec::from_json(j);
    }
    if (opts.family.empty()) throw DomainError("--family or --descriptor is required");
    FamilySpec spec;
    spec.family = opts.family;
    spec.params["k"] = opts.k;
    spec.params["depth"] = opts.depth;
    spec.params["seed"] = opts.seed;
    if (opts.family == "clique_ray") {
        if (opts.arms != 1) spec.params["arms"] = opts.arms;
        if (opts.stalk) spec.params["stalk"] = opts.stalk;
        if (opts.cross) spec.params["cross"] = opts.cross;
    }
    spec.validate();
    return spec;
}

void emit(const std::string& text, const CommonOpts& opts, std::ostream& out) {
    out << text;
    if (!opts.out.empty()) {
        std::ofstream f(opts.out, std::ios::binary);
        f << text;
    }
}

// region specs: s=<addr> | t=<addr> | tail=<arm>,<i> | tail=<i> | level=<n>
//             | sep=a;b;c|seed=<addr>
Region parse_region_spec(const Graph& g, const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) throw DomainError("bad region spec: " + spec);
    std::string kind = spec.substr(0, eq);
    std::string value = spec.substr(eq + 1);
    if (kind == "s") return theorem3_region_at(g, VertexId(value));
    if (kind == "t") return branching_tree_canonical_region(g, VertexId(value));
    if (kind == "level") return leveled_tail(g, std::stoi(value));
    if (kind == "tail") {
        auto comma = value.find(',');
        if (comma == std::string::npos) return clique_ray_tail(g, 0, std::stoi(value));
        return clique_ray_tail(g, std::stoi(value.substr(0, comma)),
                               std::stoi(value.substr(comma + 1)));
    }
    if (kind == "sep") {
        auto bar = value.find("|seed=");
        if (bar == std::string::npos) throw DomainError("generic region spec needs |seed=");
        VertexSet sep;
        std::istringstream items(value.substr(0, bar));
        std::string item;
        while (std::getline(items, item, ';')) {
            if (!item.empty()) sep.insert(VertexId(item));
        }
        return make_region(std::move(sep), VertexId(value.substr(bar + 6)));
    }
    throw DomainError("unknown region spec kind: " + kind);
}

Window window_from_source(const Graph* g, const std::string& dot_file, const std::string& ball_spec) {
    if (!dot_file.empty()) {
        std::ifstream in(dot_file);
        if (!in) throw DomainError("cannot read dot file " + dot_file);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return Window::from_dot(buffer.str());
    }
    if (!g || ball_spec.empty()) throw DomainError("window source required: --dot or --ball");
    auto comma = ball_spec.rfind(',');
    if (comma == std::string::npos) throw DomainError("--ball takes <vertex>,<radius>");
    VertexId center(ball_spec.substr(0, comma));
    if (center.addr == "root") center = g->root();
    return ball(*g, center, std::stoi(ball_spec.substr(comma + 1)));
}

GoodnessMode mode_from(const CommonOpts& opts, const std::string& q_text,
                       const std::string& s0_text, bool connected) {
    if (!q_text.empty()) {
        VertexSet s0;
        std::istringstream items(s0_text);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (!item.empty()) s0.insert(VertexId(item));
        }
        return GoodnessMode::avg_degree(parse_rational(q_text), connected, std::move(s0));
    }
    if (opts.k < 1) throw DomainError("--k or --q is required");
    return GoodnessMode::min_degree(static_cast<int>(opts.k), connected);
}

int status_code(const std::string& status) {
    if (status == "ok" || status == "all_good") return 0;
    if (status == "oracle_exhausted") return 3;
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"end-degree toolkit for locally finite infinite graphs"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string region_spec, q_text, s0_text, vertex, ball_spec, dot_file, report_file, end_name;
    long long budget_oracle = 64, budget_iter = 20, prefix = 10, radius = 1, samples = 20;

    auto* gen = app.add_subcommand("gen", "emit a validated family descriptor");
    add_family_flags(gen, opts);

    auto* inspect = app.add_subcommand("inspect", "neighbors and balls around a vertex");
    add_family_flags(inspect, opts);
    inspect->add_option("--vertex", vertex, "vertex address (root = family root)");
    inspect->add_option("--radius", radius, "ball radius");

    auto* degrees = app.add_subcommand("degrees", "boundary and out-degrees of a region");
    add_family_flags(degrees, opts);
    degrees->add_option("--region", region_spec, "region spec (s=|t=|tail=|level=|sep=..|seed=)")
        ->required();

    auto* extract2_cmd = app.add_subcommand("extract2", "separator-growing extraction");
    add_family_flags(extract2_cmd, opts);
    extract2_cmd->add_option("--q", q_text, "average-degree threshold (rational)");
    extract2_cmd->add_option("--s0", s0_text, "comma-separated start set for --q mode");
    extract2_cmd->add_option("--budget-oracle", budget_oracle, "regions tried per oracle query");
    extract2_cmd->add_option("--budget-iter", budget_iter, "extraction steps");

    auto* extract4_cmd = app.add_subcommand("extract4", "nested-family cover extraction");
    add_family_flags(extract4_cmd, opts);
    extract4_cmd->add_option("--v", vertex, "base vertex excluded from all regions");
    extract4_cmd->add_option("--q", q_text, "average-degree threshold (rational)");
    extract4_cmd->add_option("--budget-iter", budget_iter, "frontier exploration budget");

    auto* nest = app.add_subcommand("nest", "nested family from per-end defining sequences");
    add_family_flags(nest, opts);
    nest->add_option("--prefix", prefix, "number of regions to emit");

    auto* intro = app.add_subcommand("intro", "all-good separator search / bad-chain descent");
    add_family_flags(intro, opts);
    intro->add_option("--budget-iter", budget_iter, "maximum descent depth");

    auto* verify_cmd = app.add_subcommand("verify", "independent validation oracles");
    verify_cmd->require_subcommand(1);
    auto* v_kcore = verify_cmd->add_subcommand("kcore", "iterated peeling below k");
    auto* v_densest = verify_cmd->add_subcommand("densest", "exact densest sub-window");
    auto* v_brute = verify_cmd->add_subcommand("brute", "exhaustive subset oracle (<=12)");
    auto* v_highest = verify_cmd->add_subcommand("highest", "highest-vertex degree check");
    auto* v_cert = verify_cmd->add_subcommand("certificate", "revalidate an extraction report");
    for (CLI::App* sub : {v_kcore, v_densest, v_brute, v_highest}) {
        add_family_flags(sub, opts);
        sub->add_option("--ball", ball_spec, "window source: <vertex>,<radius>");
        sub->add_option("--dot", dot_file, "window source: dot file");
    }
    v_highest->add_option("--samples", samples, "random sub-windows to check");
    add_family_flags(v_cert, opts);
    v_cert->add_option("--report", report_file, "extract2 report to revalidate")->required();

    auto* dot = app.add_subcommand("dot", "export a ball as annotated dot");
    add_family_flags(dot, opts);
    dot->add_option("--vertex", vertex, "ball center (root = family root)");
    dot->add_option("--radius", radius, "ball radius");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 4;
    }

    try {
        if (gen->parsed()) {
            FamilySpec spec = spec_from(opts);
            Graph g = make_graph(spec);
            nlohmann::json j{{"kind", "descriptor"},
                             {"descriptor", spec.to_json()},
                             {"root", g.root().addr},
                             {"root_degree", g.degree(g.root())}};
            emit(render_report(j), opts, out);
            return 0;
        }
        if (inspect->parsed()) {
            Graph g = make_graph(spec_from(opts));
            VertexId v = vertex.empty() || vertex == "root" ? g.root() : VertexId(vertex);
            Window b = ball(g, v, static_cast<int>(radius));
            nlohmann::json nbrs = nlohmann::json::array();
            for (const VertexId& nb : g.neighbors(v)) nbrs.push_back(nb.addr);
            nlohmann::json j{{"kind", "inspect"},
                             {"vertex", v.addr},
                             {"degree", g.degree(v)},
                             {"height", g.family().height(v)},
                             {"neighbors", nbrs},
                             {"ball", nlohmann::json{{"radius", radius},
                                                     {"vertices", b.size()},
                                                     {"edges", b.edge_count()}}}};
            emit(render_report(j), opts, out);
            return 0;
        }
        if (degrees->parsed()) {
            Graph g = make_graph(spec_from(opts));
            Region r = parse_region_spec(g, region_spec);
            VertexList boundary = vertex_boundary(g, r);
            nlohmann::json bj = nlohmann::json::array();
            for (const VertexId& w : boundary) bj.push_back(w.addr);
            auto min_deg = min_out_degree(g, r);
            nlohmann::json j{{"kind", "degrees"},
                             {"region", region_to_json(r)},
                             {"boundary", bj},
                             {"min_out_degree", min_deg ? nlohmann::json(*min_deg) : nlohmann::json("inf")},
                             {"complement_connected", to_string(complement_connected(g, r))},
                             {"complement_components", complement_component_count(g, r)}};
            if (!boundary.empty()) j["avg_out_degree"] = rational_to_json(avg_out_degree(g, r));
            emit(render_report(j), opts, out);
            return 0;
        }
        if (extract2_cmd->parsed()) {
            Graph g = make_graph(spec_from(opts));
            GoodnessMode mode = mode_from(opts, q_text, s0_text, true);
            Budgets budgets;
            budgets.oracle = static_cast<std::uint64_t>(budget_oracle);
            budgets.iterations = static_cast<std::uint64_t>(budget_iter);
            ExtractionReport report = extract(g, canonical_end_oracle(g), mode, budgets);
            emit(render_report(report.to_json()), opts, out);
            return status_code(report.status);
        }
        if (extract4_cmd->parsed()) {
            Graph g = make_graph(spec_from(opts));
            GoodnessMode mode = mode_from(opts, q_text, "", false);
            VertexId v = vertex.empty() || vertex == "root" ? g.root() : VertexId(vertex);
            CoverBudgets budgets;
            budgets.explored = static_cast<std::uint64_t>(budget_iter) * 1000;
            std::vector<Region> cover = cover_ends(g, canonical_nested_family(g), v, mode, budgets);
            std::vector<Region> antichain = disjointify(g, cover);
            Window x = residual(g, antichain, v, 1u << 22);
            Window h = assemble_h(g, x, antichain);
            EndOracle oracle = canonical_end_oracle(g);
            nlohmann::json regions = nlohmann::json::array();
            for (const Region& r : antichain) regions.push_back(region_to_json(r));
            nlohmann::json lives = nlohmann::json::object();
            for (const EndId& e : oracle.known_ends) {
                int count = 0;
                for (const Region& r : antichain) {
                    if (lives_in(g, oracle, e, r, 64) == Tri::Yes) ++count;
                }
                lives[e.name] = count;
            }
            int min_deg = h.size() ? h.window_degree(0) : 0;
            for (int i = 0; i < h.size(); ++i) min_deg = std::min(min_deg, h.window_degree(i));
            nlohmann::json j{{"kind", "extract4"},
                             {"base_vertex", v.addr},
                             {"regions", regions},
                             {"residual", window_to_json(x)},
                             {"subgraph", window_to_json(h)},
                             {"subgraph_min_degree", min_deg},
                             {"subgraph_average_degree", rational_to_json(h.average_window_degree())},
                             {"ends_in_one_region", lives}};
            emit(render_report(j), opts, out);
            return 0;
        }
        if (nest->parsed()) {
            Graph g = make_graph(spec_from(opts));
            EndOracle oracle = canonical_end_oracle(g);
            NestedFamily fam = corollary5_nest(
                g, oracle.sequence, oracle.enumerate, 4096);
            std::vector<Region> emitted;
            for (long long i = 0; i < prefix; ++i) emitted.push_back(*fam.nth(static_cast<std::size_t>(i)));
            bool nested = true;
            for (size_t i = 0; i < emitted.size() && nested; ++i) {
                for (size_t j = i + 1; j < emitted.size() && nested; ++j) {
                    Nestedness rel = nestedness(g, emitted[i], emitted[j]).rel;
                    nested = rel != Nestedness::Crossing && rel != Nestedness::Unknown;
                }
            }
            nlohmann::json regions = nlohmann::json::array();
            for (const Region& r : emitted) regions.push_back(region_to_json(r));
            nlohmann::json j{{"kind", "nest"},
                             {"certificate", fam.certificate},
                             {"regions", regions},
                             {"pairwise_nested", nested}};
            emit(render_report(j), opts, out);
            return 0;
        }
        if (intro->parsed()) {
            Graph g = make_graph(spec_from(opts));
            if (opts.k < 1) throw DomainError("--k is required");
            IntroResult result =
                intro_search(g, static_cast<int>(opts.k), static_cast<std::uint64_t>(budget_iter));
            emit(render_report(result.to_json()), opts, out);
            return result.status == "all_good" ? 0 : status_code(result.status);
        }
        if (verify_cmd->parsed()) {
            std::optional<Graph> g;
            if (!opts.family.empty() || !opts.descriptor_file.empty()) g = make_graph(spec_from(opts));
            if (v_cert->parsed()) {
                std::ifstream in(report_file);
                if (!in) throw DomainError("cannot read report " + report_file);
                nlohmann::json j;
                in >> j;
                ExtractionReport report;
                report.family = FamilySpec::from_json(j.at("family"));
                report.mode = mode_from_json(j.at("mode"));
                report.status = j.at("status").get<std::string>();
                VertexSet sep;
                for (const auto& v : j.at("final_separator")) sep.insert(VertexId(v.get<std::string>()));
                report.state.separator = std::move(sep);
                if (j.contains("subgraph")) report.subgraph = window_from_json(j.at("subgraph"));
                if (j.contains("subgraph_degrees")) {
                    for (const auto& d : j.at("subgraph_degrees")) {
                        report.subgraph_degrees.push_back(d.get<int>());
                    }
                }
                Graph gg = make_graph(report.family);
                bool valid = check_certificate(gg, report);
                emit(render_report(nlohmann::json{{"kind", "certificate"}, {"valid", valid}}), opts, out);
                return valid ? 0 : 1;
            }
            Window w = window_from_source(g ? &*g : nullptr, dot_file, ball_spec);
            if (v_kcore->parsed()) {
                if (opts.k < 1) throw DomainError("--k is required");
                Window core = k_core(w, static_cast<int>(opts.k));
                nlohmann::json j{{"kind", "kcore"},
                                 {"k", opts.k},
                                 {"window_vertices", w.size()},
                                 {"core_vertices", core.size()},
                                 {"empty", core.empty()}};
                emit(render_report(j), opts, out);
                return 0;
            }
            if (v_densest->parsed()) {
                DensestResult d = densest_subgraph(w);
                nlohmann::json j{{"kind", "densest"},
                                 {"window_vertices", w.size()},
                                 {"densest_vertices", d.sub.size()},
                                 {"average_degree", rational_to_json(d.average_degree)}};
                emit(render_report(j), opts, out);
                return 0;
            }
            if (v_brute->parsed()) {
                if (opts.k < 1) throw DomainError("--k is required");
                bool exists = brute_min_degree(w, static_cast<int>(opts.k));
                emit(render_report(nlohmann::json{{"kind", "brute"}, {"exists", exists}}), opts, out);
                return 0;
            }
            if (v_highest->parsed()) {
                if (!g) throw DomainError("--family theorem3 is required");
                std::mt19937_64 rng(static_cast<std::uint64_t>(opts.seed));
                bool all_ok = highest_vertex_check(*g, w);
                for (long long s = 0; s < samples && all_ok; ++s) {
                    std::vector<int> keep;
                    for (int i = 0; i < w.size(); ++i) {
                        if (rng() % 2) keep.push_back(i);
                    }
                    if (keep.empty()) continue;
                    all_ok = highest_vertex_check(*g, w.induced(keep));
                }
                emit(render_report(nlohmann::json{{"kind", "highest"}, {"holds", all_ok}}), opts, out);
                return all_ok ? 0 : 1;
            }
        }
        if (dot->parsed()) {
            Graph g = make_graph(spec_from(opts));
            VertexId v = vertex.empty() || vertex == "root" ? g.root() : VertexId(vertex);
            emit(ball(g, v, static_cast<int>(radius)).to_dot(), opts, out);
            return 0;
        }
    } catch (const OracleExhausted& e) {
        err << "premise failure: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const AddressError& e) {
        err << "bad address: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        err << "usage: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command executed\n";
    return 4;
}

}  // namespace endegree
