#include "endegree/report.hpp"

namespace endegree {

nlohmann::json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const nlohmann::json& j) {
    return parse_rational(j.get<std::string>());
}

nlohmann::json window_to_json(const Window& w) {
    nlohmann::json verts = nlohmann::json::array();
    nlohmann::json degrees = nlohmann::json::array();
    nlohmann::json boundary = nlohmann::json::array();
    for (int i = 0; i < w.size(); ++i) {
        verts.push_back(w.vertex(i).addr);
        degrees.push_back(w.true_degree(i));
        boundary.push_back(w.boundary(i));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (int i = 0; i < w.size(); ++i) {
        for (int nb : w.adj(i)) {
            if (nb > i) edges.push_back(nlohmann::json::array({i, nb}));
        }
    }
    return nlohmann::json{{"vertices", verts},
                          {"edges", edges},
                          {"true_degrees", degrees},
                          {"boundary", boundary}};
}

Window window_from_json(const nlohmann::json& j) {
    VertexList verts;
    for (const auto& v : j.at("vertices")) verts.emplace_back(v.get<std::string>());
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<int> degrees;
    if (j.contains("true_degrees")) {
        for (const auto& d : j.at("true_degrees")) degrees.push_back(d.get<int>());
    }
    return Window::from_edges(std::move(verts), std::move(edges), std::move(degrees));
}

nlohmann::json mode_to_json(const GoodnessMode& m) {
    nlohmann::json j;
    if (m.kind == GoodnessMode::Kind::MinDegree) {
        j["type"] = "min_degree";
        j["k"] = m.k;
    } else {
        j["type"] = "avg_degree";
        j["q"] = rational_to_json(m.q);
        nlohmann::json s0 = nlohmann::json::array();
        for (const VertexId& v : m.s0) s0.push_back(v.addr);
        j["s0"] = s0;
    }
    j["connected_complement"] = m.connected_complement;
    return j;
}

GoodnessMode mode_from_json(const nlohmann::json& j) {
    bool conn = j.value("connected_complement", false);
    if (j.at("type") == "min_degree") {
        return GoodnessMode::min_degree(j.at("k").get<int>(), conn);
    }
    VertexSet s0;
    if (j.contains("s0")) {
        for (const auto& v : j.at("s0")) s0.insert(VertexId(v.get<std::string>()));
    }
    return GoodnessMode::avg_degree(rational_from_json(j.at("q")), conn, std::move(s0));
}

nlohmann::json region_to_json(const Region& r) {
    nlohmann::json sep = nlohmann::json::array();
    for (const VertexId& v : r.separator) sep.push_back(v.addr);
    return nlohmann::json{{"separator", sep},
                          {"seed", r.seed.addr},
                          {"oracle", r.oracle == MembershipOracle::Exact ? "exact" : "budgeted"}};
}

Region region_from_json(const nlohmann::json& j) {
    VertexSet sep;
    for (const auto& v : j.at("separator")) sep.insert(VertexId(v.get<std::string>()));
    MembershipOracle oracle = j.value("oracle", "exact") == std::string("budgeted")
                                  ? MembershipOracle::Budgeted
                                  : MembershipOracle::Exact;
    return make_region(std::move(sep), VertexId(j.at("seed").get<std::string>()), oracle);
}

std::string render_report(const nlohmann::json& body) {
    nlohmann::json wrapped = body;
    wrapped["schema_version"] = kReportSchemaVersion;
    return wrapped.dump(2) + "\n";
}

}  // namespace endegree
