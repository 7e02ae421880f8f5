#include "endegree/window.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace endegree {

Window Window::build(const Graph& g, const VertexSet& verts) {
    Window w;
    w.verts_.assign(verts.begin(), verts.end());
    std::map<VertexId, int> index;
    for (int i = 0; i < static_cast<int>(w.verts_.size()); ++i) index[w.verts_[static_cast<size_t>(i)]] = i;
    w.adj_.assign(w.verts_.size(), {});
    w.true_deg_.assign(w.verts_.size(), 0);
    for (size_t i = 0; i < w.verts_.size(); ++i) {
        const VertexList& nbrs = g.neighbors(w.verts_[i]);
        w.true_deg_[i] = static_cast<int>(nbrs.size());
        for (const VertexId& nb : nbrs) {
            auto it = index.find(nb);
            if (it != index.end()) {
                w.adj_[i].push_back(it->second);
                if (static_cast<size_t>(it->second) > i) ++w.edge_count_;
            }
        }
    }
    return w;
}

Window Window::from_edges(VertexList verts, std::vector<std::pair<int, int>> edges,
                          std::vector<int> true_degrees) {
    Window w;
    w.verts_ = std::move(verts);
    if (!std::is_sorted(w.verts_.begin(), w.verts_.end())) {
        throw DomainError("window vertices must be sorted");
    }
    w.adj_.assign(w.verts_.size(), {});
    for (auto [a, b] : edges) {
        if (a == b) throw DomainError("window edges must join distinct vertices");
        w.adj_[static_cast<size_t>(a)].push_back(b);
        w.adj_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& row : w.adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    w.edge_count_ = 0;
    for (size_t i = 0; i < w.adj_.size(); ++i) {
        for (int nb : w.adj_[i]) {
            if (static_cast<size_t>(nb) > i) ++w.edge_count_;
        }
    }
    if (true_degrees.empty()) {
        for (const auto& row : w.adj_) w.true_deg_.push_back(static_cast<int>(row.size()));
    } else {
        if (true_degrees.size() != w.verts_.size()) throw DomainError("true degree count mismatch");
        w.true_deg_ = std::move(true_degrees);
        for (size_t i = 0; i < w.verts_.size(); ++i) {
            if (w.true_deg_[i] < static_cast<int>(w.adj_[i].size())) {
                throw DomainError("true degree below window degree");
            }
        }
    }
    return w;
}

int Window::index_of(const VertexId& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it != verts_.end() && *it == v) return static_cast<int>(it - verts_.begin());
    return -1;
}

Window Window::induced(const std::vector<int>& keep) const {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> map_to(verts_.size(), -1);
    Window w;
    for (int old : sorted) {
        map_to[static_cast<size_t>(old)] = static_cast<int>(w.verts_.size());
        w.verts_.push_back(verts_[static_cast<size_t>(old)]);
        w.true_deg_.push_back(true_deg_[static_cast<size_t>(old)]);
    }
    w.adj_.assign(w.verts_.size(), {});
    for (int old : sorted) {
        int idx = map_to[static_cast<size_t>(old)];
        for (int nb : adj_[static_cast<size_t>(old)]) {
            if (map_to[static_cast<size_t>(nb)] >= 0) {
                w.adj_[static_cast<size_t>(idx)].push_back(map_to[static_cast<size_t>(nb)]);
                if (map_to[static_cast<size_t>(nb)] > idx) ++w.edge_count_;
            }
        }
    }
    return w;
}

Rational Window::average_window_degree() const {
    if (empty()) throw DomainError("average degree of an empty window");
    return Rational(2 * edge_count_, static_cast<long long>(verts_.size()));
}

bool Window::same_as(const Window& other) const {
    return verts_ == other.verts_ && adj_ == other.adj_;
}

std::string Window::to_dot() const {
    std::ostringstream out;
    out << "graph window {\n";
    for (size_t i = 0; i < verts_.size(); ++i) {
        out << "  \"" << verts_[i].addr << "\" [true_degree=" << true_deg_[i]
            << ", boundary=" << (boundary(static_cast<int>(i)) ? "true" : "false") << "];\n";
    }
    for (size_t i = 0; i < verts_.size(); ++i) {
        for (int nb : adj_[i]) {
            if (static_cast<size_t>(nb) > i) {
                out << "  \"" << verts_[i].addr << "\" -- \"" << verts_[static_cast<size_t>(nb)].addr
                    << "\";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

Window Window::from_dot(const std::string& text) {
    std::map<std::string, int> true_deg;
    VertexList verts;
    std::vector<std::pair<std::string, std::string>> edge_names;
    std::istringstream in(text);
    std::string line;
    auto quoted = [](const std::string& s, size_t from, std::string& out_str, size_t& end) {
        size_t open = s.find('"', from);
        if (open == std::string::npos) return false;
        size_t close = s.find('"', open + 1);
        if (close == std::string::npos) return false;
        out_str = s.substr(open + 1, close - open - 1);
        end = close + 1;
        return true;
    };
    while (std::getline(in, line)) {
        std::string first;
        size_t after = 0;
        if (!quoted(line, 0, first, after)) continue;
        size_t dash = line.find("--", after);
        if (dash != std::string::npos) {
            std::string second;
            size_t after2 = 0;
            if (!quoted(line, dash, second, after2)) throw DomainError("bad dot edge line: " + line);
            edge_names.emplace_back(first, second);
        } else {
            verts.emplace_back(first);
            size_t attr = line.find("true_degree=", after);
            if (attr != std::string::npos) {
                true_deg[first] = std::stoi(line.substr(attr + 12));
            }
        }
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::map<VertexId, int> index;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[static_cast<size_t>(i)]] = i;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : edge_names) {
        auto ia = index.find(VertexId(a));
        auto ib = index.find(VertexId(b));
        if (ia == index.end() || ib == index.end()) throw DomainError("dot edge over unknown vertex");
        edges.emplace_back(ia->second, ib->second);
    }
    std::vector<int> degrees;
    if (!true_deg.empty()) {
        for (const VertexId& v : verts) {
            auto it = true_deg.find(v.addr);
            degrees.push_back(it == true_deg.end() ? 0 : it->second);
        }
    }
    Window w = Window::from_edges(verts, edges, {});
    if (!degrees.empty()) {
        for (size_t i = 0; i < degrees.size(); ++i) {
            degrees[i] = std::max(degrees[i], w.window_degree(static_cast<int>(i)));
        }
        w = Window::from_edges(w.vertices(), std::move(edges), std::move(degrees));
    }
    return w;
}

Window ball(const Graph& g, const VertexId& center, int radius) {
    if (radius < 0) throw DomainError("ball radius must be nonnegative");
    VertexSet seen{center};
    VertexList frontier{center};
    for (int r = 0; r < radius; ++r) {
        VertexList next;
        for (const VertexId& v : frontier) {
            for (const VertexId& nb : g.neighbors(v)) {
                if (seen.insert(nb).second) next.push_back(nb);
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return Window::build(g, seen);
}

Window truncation(const Graph& g, const VertexId& center, int max_vertices) {
    if (max_vertices <= 0) throw DomainError("truncation needs a positive size");
    VertexSet picked;
    VertexSet seen{center};
    VertexList frontier{center};
    while (!frontier.empty() && static_cast<int>(picked.size()) < max_vertices) {
        std::sort(frontier.begin(), frontier.end());
        VertexList next;
        for (const VertexId& v : frontier) {
            if (static_cast<int>(picked.size()) >= max_vertices) break;
            picked.insert(v);
            for (const VertexId& nb : g.neighbors(v)) {
                if (seen.insert(nb).second) next.push_back(nb);
            }
        }
        frontier = std::move(next);
    }
    return Window::build(g, picked);
}

Window induced_window(const Graph& g, const VertexSet& verts) { return Window::build(g, verts); }

Rational avg_set_degree(const Graph& g, const VertexSet& u) {
    if (u.empty()) throw DomainError("average degree of the empty set");
    long long sum = 0;
    for (const VertexId& v : u) sum += g.degree(v);
    return Rational(sum, static_cast<long long>(u.size()));
}

}  // namespace endegree
