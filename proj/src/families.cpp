#include "endegree/families.hpp"

#include <algorithm>
#include <functional>

#include "endegree/region.hpp"
#include "family_impl.hpp"

namespace endegree {

using detail::BranchingTree;
using detail::CliqueRay;
using detail::FiniteWindowFamily;
using detail::LeveledTreeCycles;
using detail::Theorem3;

long long FamilySpec::get(const std::string& key, long long def) const {
    auto it = params.find(key);
    return it == params.end() ? def : it->second;
}

void FamilySpec::validate() const {
    long long k = get("k", 0);
    if (family == "branching_tree" || family == "theorem3" || family == "clique_ray") {
        if (k < 1) throw DomainError(family + " needs k >= 1");
    } else if (family == "leveled_tree_cycles") {
        if (k < 2) throw DomainError("leveled_tree_cycles needs k >= 2");
    } else {
        throw DomainError("unknown family: " + family);
    }
    if (get("depth", 1) < 1) throw DomainError("depth must be >= 1");
    long long arms = get("arms", 1);
    if (arms < 1) throw DomainError("arms must be >= 1");
    if (get("cross", 0) != 0 && arms < 2) throw DomainError("cross needs arms >= 2");
    if (family != "clique_ray" && (arms != 1 || get("cross", 0) != 0 || get("stalk", 0) != 0)) {
        throw DomainError("arms/cross/stalk apply to clique_ray only");
    }
}

nlohmann::json FamilySpec::to_json() const {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [key, value] : params) p[key] = value;
    return nlohmann::json{{"family", family}, {"params", p}};
}

FamilySpec FamilySpec::from_json(const nlohmann::json& j) {
    FamilySpec spec;
    spec.family = j.at("family").get<std::string>();
    if (j.contains("params")) {
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it) {
            spec.params[it.key()] = it.value().get<long long>();
        }
    }
    spec.validate();
    return spec;
}

Graph make_graph(const FamilySpec& spec) {
    spec.validate();
    if (spec.family == "branching_tree") return Graph(std::make_shared<BranchingTree>(spec));
    if (spec.family == "theorem3") return Graph(std::make_shared<Theorem3>(spec));
    if (spec.family == "leveled_tree_cycles") return Graph(std::make_shared<LeveledTreeCycles>(spec));
    return Graph(std::make_shared<CliqueRay>(spec));
}

Graph make_finite_graph(const Window& w) {
    return Graph(std::make_shared<FiniteWindowFamily>(w));
}

const FamilySpec& graph_spec(const Graph& g) {
    const Family& fam = g.family();
    if (auto* f = dynamic_cast<const BranchingTree*>(&fam)) return f->spec;
    if (auto* f = dynamic_cast<const Theorem3*>(&fam)) return f->spec;
    if (auto* f = dynamic_cast<const LeveledTreeCycles*>(&fam)) return f->spec;
    if (auto* f = dynamic_cast<const CliqueRay*>(&fam)) return f->spec;
    throw DomainError("graph has no family descriptor");
}

namespace {

// Separator of the component described by a membership predicate: the
// outside neighbors of the boundary candidates. Candidates must cover V+(C).
Region sealed_region(const Graph& g, const VertexList& boundary_candidates,
                     const std::function<bool(const VertexId&)>& in_c, const VertexId& seed) {
    VertexSet separator;
    for (const VertexId& w : boundary_candidates) {
        for (const VertexId& nb : g.neighbors(w)) {
            if (!in_c(nb)) separator.insert(nb);
        }
    }
    return make_region(std::move(separator), seed);
}

VertexId parent_of(const VertexId& v) {
    return VertexId(v.addr.substr(0, v.addr.rfind('.')));
}

std::vector<std::string> split_star(const EndId& end) {
    auto star = end.name.find('*');
    if (star == std::string::npos) throw DomainError("bad end encoding: " + end.name);
    return {end.name.substr(0, star), end.name.substr(star + 1)};
}

std::vector<std::string> dotted_pieces(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t dot = s.find('.', pos);
        if (dot == std::string::npos) dot = s.size();
        out.push_back(s.substr(pos, dot - pos));
        pos = dot + 1;
    }
    return out;
}

// Branch digits of a tree end "p1.p2*c": the prefix then c forever.
std::string branch_digit(const EndId& end, size_t i) {
    auto parts = split_star(end);
    std::vector<std::string> prefix =
        parts[0].empty() ? std::vector<std::string>{} : dotted_pieces(parts[0]);
    if (parts[1].empty() || parts[1].find('.') != std::string::npos) {
        throw DomainError("bad end encoding: " + end.name);
    }
    return i < prefix.size() ? prefix[i] : parts[1];
}

VertexId branch_vertex(const EndId& end, size_t depth) {
    std::string addr = "v";
    for (size_t i = 0; i < depth; ++i) {
        addr += '.';
        addr += branch_digit(end, i);
    }
    return VertexId(std::move(addr));
}

EndOracle branching_tree_oracle(const Graph& g, int k) {
    EndOracle oracle;
    oracle.enumerate = [k](std::size_t idx) -> std::optional<EndId> {
        // all (prefix, constant) pairs, ordered by prefix length then lex;
        // prefixes ending in the constant are skipped as non-canonical
        std::size_t seen = 0;
        for (int len = 0; len < 24; ++len) {
            long long count = 1;
            for (int i = 0; i < len; ++i) {
                count *= k;
                if (count > 2000000) throw BudgetError("end enumeration too deep");
            }
            for (long long p = 0; p < count; ++p) {
                std::vector<int> digits(static_cast<size_t>(len));
                long long rest = p;
                for (int i = len - 1; i >= 0; --i) {
                    digits[static_cast<size_t>(i)] = static_cast<int>(rest % k);
                    rest /= k;
                }
                for (int c = 0; c < k; ++c) {
                    if (len > 0 && digits.back() == c) continue;
                    if (seen++ == idx) {
                        std::string name;
                        for (size_t i = 0; i < digits.size(); ++i) {
                            if (i) name += '.';
                            name += std::to_string(digits[i]);
                        }
                        name += '*';
                        name += std::to_string(c);
                        return EndId(name);
                    }
                }
            }
        }
        throw BudgetError("end enumeration too deep");
    };
    oracle.ray = [](const EndId& end, std::size_t i) { return branch_vertex(end, i); };
    oracle.sequence = [g](const EndId& end) {
        DefiningSequence seq;
        seq.nth = [g, end](std::size_t n) {
            VertexId below = branch_vertex(end, n + 1);
            VertexId t = branch_vertex(end, n + 2);
            VertexSet separator;
            for (const VertexId& nb : g.neighbors(below)) {
                if (nb != t) separator.insert(nb);
            }
            return make_region(std::move(separator), below);
        };
        return seq;
    };
    oracle.certified_failure = [k](const GoodnessMode& mode) -> std::optional<std::string> {
        if (mode.connected_complement && k >= 2) {
            return "every canonical branching_tree region has a disconnected complement";
        }
        if (mode.kind == GoodnessMode::Kind::MinDegree && mode.k > k) {
            return "canonical regions have min out-degree exactly " + std::to_string(k);
        }
        if (mode.kind == GoodnessMode::Kind::AvgDegree && mode.q >= Rational(k)) {
            return "canonical regions have avg out-degree exactly " + std::to_string(k);
        }
        return std::nullopt;
    };
    for (int c = 0; c < std::min(k, 2); ++c) oracle.known_ends.emplace_back("*" + std::to_string(c));
    oracle.ends_complete = false;
    return oracle;
}

// Infinite token stream of a theorem3 end "prefix*block".
std::string theorem3_token(const EndId& end, size_t i) {
    auto parts = split_star(end);
    std::vector<std::string> prefix =
        parts[0].empty() ? std::vector<std::string>{} : dotted_pieces(parts[0]);
    std::vector<std::string> block = dotted_pieces(parts[1]);
    if (block.empty() || block[0].empty()) throw DomainError("bad end encoding: " + end.name);
    if (i < prefix.size()) return prefix[i];
    return block[(i - prefix.size()) % block.size()];
}

VertexId theorem3_token_vertex(const EndId& end, size_t tokens) {
    std::string addr = "v";
    for (size_t i = 0; i < tokens; ++i) {
        addr += '.';
        addr += theorem3_token(end, i);
    }
    return VertexId(std::move(addr));
}

EndOracle theorem3_oracle(const Graph& g, int k) {
    EndOracle oracle;
    oracle.enumerate = [k](std::size_t idx) -> std::optional<EndId> {
        // upward tree-token paths: prefix over [0..k] then a constant
        std::size_t seen = 0;
        for (int len = 0; len < 20; ++len) {
            long long count = 1;
            for (int i = 0; i < len; ++i) {
                count *= k + 1;
                if (count > 2000000) throw BudgetError("end enumeration too deep");
            }
            for (long long p = 0; p < count; ++p) {
                std::vector<int> digits(static_cast<size_t>(len));
                long long rest = p;
                for (int i = len - 1; i >= 0; --i) {
                    digits[static_cast<size_t>(i)] = static_cast<int>(rest % (k + 1));
                    rest /= (k + 1);
                }
                for (int c = 0; c <= k; ++c) {
                    if (len > 0 && digits.back() == c) continue;
                    if (seen++ == idx) {
                        std::string name;
                        for (size_t i = 0; i < digits.size(); ++i) {
                            if (i) name += '.';
                            name += std::to_string(digits[i]);
                        }
                        name += '*';
                        name += std::to_string(c);
                        return EndId(name);
                    }
                }
            }
        }
        throw BudgetError("end enumeration too deep");
    };
    oracle.ray = [g](const EndId& end, std::size_t i) {
        // expand subdivider tokens into their two-edge walk
        VertexId cur = g.root();
        std::size_t produced = 0;
        for (size_t tok = 0; produced < i; ++tok) {
            std::string t = theorem3_token(end, tok);
            if (t.find('~') != std::string::npos) {
                VertexId mate(cur.addr + "." + t.substr(0, t.find('~')));
                if (++produced == i) return mate;
                cur = VertexId(cur.addr + "." + t);
                ++produced;
            } else {
                cur = VertexId(cur.addr + "." + t);
                ++produced;
            }
        }
        return cur;
    };
    oracle.sequence = [g](const EndId& end) {
        DefiningSequence seq;
        seq.nth = [g, end](std::size_t n) {
            VertexId p = theorem3_token_vertex(end, n + 1);
            const auto* fam = dynamic_cast<const Theorem3*>(&g.family());
            if (fam->is_subdividing(p)) return theorem3_region_at(g, p);
            std::string last = p.addr.substr(p.addr.rfind('.') + 1);
            int c = std::stoi(last);
            int mate = c == 0 ? 1 : 0;
            std::string tok = std::to_string(std::min(c, mate)) + "~" + std::to_string(std::max(c, mate));
            return theorem3_region_at(g, VertexId(parent_of(p).addr + "." + tok));
        };
        return seq;
    };
    oracle.certified_failure = [k](const GoodnessMode& mode) -> std::optional<std::string> {
        if (mode.kind == GoodnessMode::Kind::MinDegree && mode.k > k) {
            return "canonical regions have min out-degree exactly " + std::to_string(k);
        }
        if (mode.kind == GoodnessMode::Kind::AvgDegree && mode.q >= Rational(k)) {
            return "canonical regions have avg out-degree exactly " + std::to_string(k);
        }
        return std::nullopt;
    };
    oracle.known_ends = {EndId("*0"), EndId("*" + std::to_string(k))};
    oracle.ends_complete = false;
    return oracle;
}

EndOracle clique_ray_oracle(const Graph& g, const CliqueRay& fam) {
    EndOracle oracle;
    int arms = fam.arms;
    oracle.enumerate = [arms](std::size_t idx) -> std::optional<EndId> {
        return EndId("arm" + std::to_string(idx % static_cast<std::size_t>(arms)));
    };
    auto arm_of = [arms](const EndId& end) {
        if (end.name.rfind("arm", 0) != 0) throw DomainError("bad end encoding: " + end.name);
        int a = std::stoi(end.name.substr(3));
        if (a < 0 || a >= arms) throw DomainError("no such end: " + end.name);
        return a;
    };
    oracle.ray = [g, arm_of](const EndId& end, std::size_t i) {
        const auto* fam = dynamic_cast<const CliqueRay*>(&g.family());
        int arm = arm_of(end);
        VertexList walk;
        if (fam->stalk) {
            walk.emplace_back("r");
            walk.emplace_back("r.0");
        }
        std::size_t offset = walk.size();
        if (i < offset) return walk[i];
        int index = static_cast<int>(i - offset);
        return fam->clique_vertex(index == 0 ? 0 : arm, index, 0);
    };
    oracle.sequence = [g, arm_of](const EndId& end) {
        int arm = arm_of(end);
        DefiningSequence seq;
        seq.nth = [g, arm](std::size_t n) {
            return clique_ray_tail(g, arm, static_cast<int>(n) + 1);
        };
        return seq;
    };
    int k = fam.k;
    oracle.certified_failure = [k](const GoodnessMode& mode) -> std::optional<std::string> {
        if (mode.kind == GoodnessMode::Kind::MinDegree && mode.k > 2 * k) {
            return "canonical tails have min out-degree at most " + std::to_string(2 * k);
        }
        if (mode.kind == GoodnessMode::Kind::AvgDegree && mode.q >= Rational(2 * k)) {
            return "canonical tails have avg out-degree at most " + std::to_string(2 * k);
        }
        return std::nullopt;
    };
    for (int a = 0; a < arms; ++a) oracle.known_ends.emplace_back("arm" + std::to_string(a));
    oracle.ends_complete = true;
    return oracle;
}

EndOracle leveled_oracle(const Graph& g, int k) {
    EndOracle oracle;
    oracle.enumerate = [](std::size_t) -> std::optional<EndId> { return EndId("end0"); };
    oracle.ray = [](const EndId& end, std::size_t i) {
        if (end.name != "end0") throw DomainError("no such end: " + end.name);
        std::string addr = "v";
        for (std::size_t d = 0; d < i; ++d) addr += ".0";
        return VertexId(std::move(addr));
    };
    oracle.sequence = [g](const EndId& end) {
        if (end.name != "end0") throw DomainError("no such end: " + end.name);
        DefiningSequence seq;
        seq.nth = [g](std::size_t n) { return leveled_tail(g, static_cast<int>(n) + 1); };
        return seq;
    };
    int out_deg = k >= 3 ? 3 : 2;
    oracle.certified_failure = [out_deg](const GoodnessMode& mode) -> std::optional<std::string> {
        if (mode.kind == GoodnessMode::Kind::MinDegree && mode.k > out_deg) {
            return "canonical tails have min out-degree exactly " + std::to_string(out_deg);
        }
        if (mode.kind == GoodnessMode::Kind::AvgDegree && mode.q >= Rational(out_deg)) {
            return "canonical tails have avg out-degree exactly " + std::to_string(out_deg);
        }
        return std::nullopt;
    };
    oracle.known_ends = {EndId("end0")};
    oracle.ends_complete = true;
    return oracle;
}

}  // namespace

Region branching_tree_canonical_region(const Graph& g, const VertexId& t) {
    const auto* fam = dynamic_cast<const BranchingTree*>(&g.family());
    if (!fam) throw DomainError("not a branching_tree graph");
    if (fam->height(t) < 2) throw DomainError("canonical region needs a vertex of depth >= 2");
    VertexId below = parent_of(t);
    VertexSet separator;
    for (const VertexId& nb : g.neighbors(below)) {
        if (nb != t) separator.insert(nb);
    }
    return make_region(std::move(separator), below);
}

Region theorem3_region_at(const Graph& g, const VertexId& s) {
    const auto* fam = dynamic_cast<const Theorem3*>(&g.family());
    if (!fam) throw DomainError("not a theorem3 graph");
    if (!fam->is_subdividing(s)) {
        throw DomainError("region anchor must be a subdividing vertex: " + s.addr);
    }
    std::string tok = s.addr.substr(s.addr.rfind('.') + 1);
    auto tilde = tok.find('~');
    VertexId base = parent_of(s);
    VertexId t(base.addr + "." + tok.substr(0, tilde));
    VertexId t2(base.addr + "." + tok.substr(tilde + 1));
    auto in_c = [&](const VertexId& x) {
        return fam->cone_contains(t, x) || fam->cone_contains(s, x) || fam->cone_contains(t2, x);
    };
    return sealed_region(g, {t, t2}, in_c, s);
}

Region clique_ray_tail(const Graph& g, int arm, int index) {
    const auto* fam = dynamic_cast<const CliqueRay*>(&g.family());
    if (!fam) throw DomainError("not a clique_ray graph");
    if (index < 1 || arm < 0 || arm >= fam->arms) throw DomainError("bad tail coordinates");
    auto in_c = [fam, arm, index](const VertexId& x) {
        if (fam->is_stalk(x)) return false;
        int a, i, p;
        fam->parse(x, a, i, p);
        return i >= index && (i == 0 || a == arm);
    };
    return sealed_region(g, fam->clique(arm, index), in_c, fam->clique_vertex(arm, index, 0));
}

Region leveled_tail(const Graph& g, int level) {
    const auto* fam = dynamic_cast<const LeveledTreeCycles*>(&g.family());
    if (!fam) throw DomainError("not a leveled_tree_cycles graph");
    if (level < 1) throw DomainError("tail level must be >= 1");
    auto in_c = [fam, level](const VertexId& x) { return fam->layer_of(x) >= level; };
    VertexList boundary = fam->level_vertices(level);
    return sealed_region(g, boundary, in_c, boundary.front());
}

EndOracle canonical_end_oracle(const Graph& g) {
    const Family& fam = g.family();
    if (auto* f = dynamic_cast<const BranchingTree*>(&fam)) return branching_tree_oracle(g, f->k);
    if (auto* f = dynamic_cast<const Theorem3*>(&fam)) return theorem3_oracle(g, f->k);
    if (auto* f = dynamic_cast<const CliqueRay*>(&fam)) return clique_ray_oracle(g, *f);
    if (auto* f = dynamic_cast<const LeveledTreeCycles*>(&fam)) return leveled_oracle(g, f->k);
    throw DomainError("family serves no end oracle");
}

NestedFamily canonical_nested_family(const Graph& g) {
    const Family& fam = g.family();
    NestedFamily out;
    out.certificate = "generator";
    if (auto* f = dynamic_cast<const BranchingTree*>(&fam)) {
        int k = f->k;
        Graph graph = g;
        out.nth = [graph, k](std::size_t idx) -> std::optional<Region> {
            // single-vertex up-closures in (depth, lex) order
            std::size_t left = idx;
            for (int depth = 1; depth < 40; ++depth) {
                std::size_t count = 1;
                for (int i = 0; i < depth; ++i) {
                    count *= static_cast<std::size_t>(k);
                    if (count > 4000000) throw BudgetError("nested family index too deep");
                }
                if (left >= count) {
                    left -= count;
                    continue;
                }
                std::string addr = "v";
                std::vector<int> digits(static_cast<size_t>(depth));
                std::size_t rest = left;
                for (int i = depth - 1; i >= 0; --i) {
                    digits[static_cast<size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(k));
                    rest /= static_cast<std::size_t>(k);
                }
                for (int d : digits) addr += "." + std::to_string(d);
                VertexId u(addr);
                return make_region(VertexSet{parent_of(u)}, u);
            }
            throw BudgetError("nested family index too deep");
        };
        return out;
    }
    if (auto* f = dynamic_cast<const CliqueRay*>(&fam)) {
        int arms = f->arms;
        Graph graph = g;
        out.nth = [graph, arms](std::size_t idx) -> std::optional<Region> {
            int arm = static_cast<int>(idx % static_cast<std::size_t>(arms));
            int index = static_cast<int>(idx / static_cast<std::size_t>(arms)) + 1;
            return clique_ray_tail(graph, arm, index);
        };
        return out;
    }
    if (dynamic_cast<const LeveledTreeCycles*>(&fam)) {
        Graph graph = g;
        out.nth = [graph](std::size_t idx) -> std::optional<Region> {
            return leveled_tail(graph, static_cast<int>(idx) + 1);
        };
        return out;
    }
    throw DomainError("family " + fam.name() + " offers no nested region family");
}

}  // namespace endegree
