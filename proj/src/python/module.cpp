#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "endegree/cli.hpp"
#include "endegree/extract2.hpp"
#include "endegree/extract4.hpp"
#include "endegree/families.hpp"
#include "endegree/report.hpp"
#include "endegree/verify.hpp"

namespace py = pybind11;
using namespace endegree;

namespace {

Graph graph_from(const std::string& spec_json) {
    return make_graph(FamilySpec::from_json(nlohmann::json::parse(spec_json)));
}

std::string window_json(const Window& w) { return window_to_json(w).dump(); }

Window window_from(const std::string& json_text) {
    return window_from_json(nlohmann::json::parse(json_text));
}

}  // namespace

PYBIND11_MODULE(_endegree, m) {
    m.doc() = "end-degree toolkit for locally finite infinite graphs";

    m.def("neighbors", [](const std::string& spec, const std::string& vertex) {
        std::vector<std::string> out;
        for (const VertexId& nb : graph_from(spec).neighbors(VertexId(vertex))) {
            out.push_back(nb.addr);
        }
        return out;
    });
    m.def("degree", [](const std::string& spec, const std::string& vertex) {
        return graph_from(spec).degree(VertexId(vertex));
    });
    m.def("root", [](const std::string& spec) { return graph_from(spec).root().addr; });
    m.def("ball", [](const std::string& spec, const std::string& center, int radius) {
        Graph g = graph_from(spec);
        VertexId c = center == "root" ? g.root() : VertexId(center);
        return window_json(ball(g, c, radius));
    });
    m.def("avg_set_degree", [](const std::string& spec, const std::vector<std::string>& verts) {
        Graph g = graph_from(spec);
        VertexSet u;
        for (const std::string& v : verts) u.insert(VertexId(v));
        Rational r = avg_set_degree(g, u);
        return py::make_tuple(r.numerator(), r.denominator());
    });
    m.def("region_stats", [](const std::string& spec, const std::string& region_json) {
        Graph g = graph_from(spec);
        Region r = region_from_json(nlohmann::json::parse(region_json));
        nlohmann::json out;
        nlohmann::json boundary = nlohmann::json::array();
        VertexList vb = vertex_boundary(g, r);
        for (const VertexId& w : vb) boundary.push_back(w.addr);
        out["boundary"] = boundary;
        auto min_deg = min_out_degree(g, r);
        out["min_out_degree"] = min_deg ? nlohmann::json(*min_deg) : nlohmann::json("inf");
        if (!vb.empty()) out["avg_out_degree"] = rational_to_json(avg_out_degree(g, r));
        out["complement_connected"] = to_string(complement_connected(g, r));
        return out.dump();
    });
    m.def("extract2", [](const std::string& spec, int k) {
        Graph g = graph_from(spec);
        ExtractionReport report =
            extract(g, canonical_end_oracle(g), GoodnessMode::min_degree(k, true), Budgets{});
        return report.to_json().dump();
    });
    m.def("k_core", [](const std::string& window, int k) {
        return window_json(k_core(window_from(window), k));
    });
    m.def("densest_subgraph", [](const std::string& window) {
        DensestResult d = densest_subgraph(window_from(window));
        return py::make_tuple(window_json(d.sub), to_string(d.average_degree));
    });
    m.def("brute_min_degree", [](const std::string& window, int k) {
        return brute_min_degree(window_from(window), k);
    });
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
