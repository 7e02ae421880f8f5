#include "endegree/component_model.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace endegree {

namespace {

// Kernel for prefix-cone families. P is the set of cone-prefixes of
// separator members; vertices outside P are cone roots whose cones miss S,
// so only their outside-cone neighbors matter.
VertexList prefix_cone_kernel(const Graph& g, const VertexSet& s, VertexSet& prefix_set) {
    const Family& fam = g.family();
    for (const VertexId& v : s) {
        for (const VertexId& p : fam.cone_prefixes(v)) prefix_set.insert(p);
    }
    VertexSet kernel;
    std::vector<VertexId> work;
    work.push_back(g.root());
    for (const VertexId& p : prefix_set) work.push_back(p);
    while (!work.empty()) {
        VertexId x = work.back();
        work.pop_back();
        if (kernel.count(x)) continue;
        kernel.insert(x);
        bool expand_all = prefix_set.count(x) > 0;
        for (const VertexId& nb : g.neighbors(x)) {
            if (kernel.count(nb)) continue;
            if (expand_all || !fam.cone_contains(x, nb)) work.push_back(nb);
        }
    }
    return VertexList(kernel.begin(), kernel.end());
}

}  // namespace

ComponentModel build_component_model(const Graph& g, const VertexSet& s) {
    const Family& fam = g.family();
    ComponentModel m;
    m.family_ = g.family_ptr();
    m.separator_ = s;

    VertexSet prefix_set;
    VertexList kernel_all;
    int cut_layer = 0;

    switch (fam.engine()) {
        case EngineKind::PrefixCone: {
            kernel_all = prefix_cone_kernel(g, s, prefix_set);
            break;
        }
        case EngineKind::Layered: {
            int max_layer = -1;
            for (const VertexId& v : s) max_layer = std::max(max_layer, fam.layer_of(v));
            cut_layer = max_layer + 1;
            kernel_all = fam.base_vertices(cut_layer);
            break;
        }
        case EngineKind::Finite: {
            kernel_all = fam.base_vertices(0);
            break;
        }
    }

    for (const VertexId& v : kernel_all) {
        if (!s.count(v)) m.verts_.push_back(v);
    }
    std::sort(m.verts_.begin(), m.verts_.end());

    std::map<VertexId, int> index;
    for (int i = 0; i < static_cast<int>(m.verts_.size()); ++i) index[m.verts_[static_cast<size_t>(i)]] = i;

    const size_t n = m.verts_.size();
    m.adj_.assign(n, {});
    m.inf_flag_.assign(n, 0);

    for (size_t i = 0; i < n; ++i) {
        for (const VertexId& nb : g.neighbors(m.verts_[i])) {
            auto it = index.find(nb);
            if (it != index.end()) m.adj_[i].push_back(it->second);
        }
    }

    switch (fam.engine()) {
        case EngineKind::PrefixCone:
            for (size_t i = 0; i < n; ++i) {
                if (!prefix_set.count(m.verts_[i])) m.inf_flag_[i] = 1;
            }
            break;
        case EngineKind::Layered:
            for (const VertexId& v : fam.attachment_vertices(cut_layer)) {
                auto it = index.find(v);
                if (it != index.end()) m.inf_flag_[static_cast<size_t>(it->second)] = 1;
            }
            break;
        case EngineKind::Finite:
            break;
    }

    // Component labels over the kernel.
    m.comp_.assign(n, -1);
    int next = 0;
    for (size_t start = 0; start < n; ++start) {
        if (m.comp_[start] >= 0) continue;
        int c = next++;
        std::deque<int> queue{static_cast<int>(start)};
        m.comp_[start] = c;
        bool inf = false;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (m.inf_flag_[static_cast<size_t>(x)]) inf = true;
            for (int nb : m.adj_[static_cast<size_t>(x)]) {
                if (m.comp_[static_cast<size_t>(nb)] < 0) {
                    m.comp_[static_cast<size_t>(nb)] = c;
                    queue.push_back(nb);
                }
            }
        }
        m.comp_infinite_.push_back(inf ? 1 : 0);
        m.anchors_.push_back(m.verts_[start]);  // verts_ sorted, so lex-least first
    }
    m.comp_count_ = next;
    return m;
}

int ComponentModel::kernel_index(const VertexId& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it != verts_.end() && *it == v) return static_cast<int>(it - verts_.begin());
    return -1;
}

int ComponentModel::resolve(const VertexId& x) const {
    if (separator_.count(x)) throw DomainError("resolve: vertex lies in the separator");
    int direct = kernel_index(x);
    if (direct >= 0) return direct;
    const Family& fam = *family_;
    switch (fam.engine()) {
        case EngineKind::PrefixCone: {
            VertexList prefixes = fam.cone_prefixes(x);
            for (auto it = prefixes.rbegin(); it != prefixes.rend(); ++it) {
                int idx = kernel_index(*it);
                if (idx >= 0) return idx;
            }
            throw AddressError("vertex resolves to no component: " + x.addr);
        }
        case EngineKind::Layered: {
            int max_layer = -1;
            for (const VertexId& v : separator_) max_layer = std::max(max_layer, fam.layer_of(v));
            int idx = kernel_index(fam.attachment_anchor(x, max_layer + 1));
            if (idx < 0) throw AddressError("vertex resolves to no component: " + x.addr);
            return idx;
        }
        case EngineKind::Finite:
            throw AddressError("no such vertex: " + x.addr);
    }
    throw AddressError("vertex resolves to no component: " + x.addr);
}

int ComponentModel::component_of(const VertexId& x) const {
    return comp_[static_cast<size_t>(resolve(x))];
}

bool ComponentModel::same_component(const VertexId& a, const VertexId& b) const {
    return component_of(a) == component_of(b);
}

bool ComponentModel::infinite(const VertexId& seed) const {
    return comp_infinite_[static_cast<size_t>(component_of(seed))];
}

std::optional<VertexList> ComponentModel::finite_vertices(const VertexId& seed) const {
    int c = component_of(seed);
    if (comp_infinite_[static_cast<size_t>(c)]) return std::nullopt;
    VertexList out;
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (comp_[i] == c) out.push_back(verts_[i]);
    }
    return out;
}

VertexList ComponentModel::kernel_path(int from, int to) const {
    std::vector<int> parent(verts_.size(), -2);
    std::deque<int> queue{from};
    parent[static_cast<size_t>(from)] = -1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == to) break;
        for (int nb : adj_[static_cast<size_t>(x)]) {
            if (parent[static_cast<size_t>(nb)] == -2) {
                parent[static_cast<size_t>(nb)] = x;
                queue.push_back(nb);
            }
        }
    }
    VertexList path;
    for (int x = to; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(verts_[static_cast<size_t>(x)]);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexList ComponentModel::path(const VertexId& a, const VertexId& b) const {
    int ia = resolve(a);
    int ib = resolve(b);
    if (comp_[static_cast<size_t>(ia)] != comp_[static_cast<size_t>(ib)]) {
        throw DomainError("path requested across components");
    }
    const Family& fam = *family_;
    auto attach = [&](int idx, const VertexId& deep) -> VertexList {
        const VertexId& anchor = verts_[static_cast<size_t>(idx)];
        if (anchor == deep) return {deep};
        switch (fam.engine()) {
            case EngineKind::PrefixCone:
                return fam.cone_path(anchor, deep);
            case EngineKind::Layered:
                return fam.attachment_path(anchor, deep);
            case EngineKind::Finite:
                throw AddressError("no such vertex: " + deep.addr);
        }
        return {};
    };
    VertexList seg_a = attach(ia, a);  // anchor .. a
    VertexList seg_b = attach(ib, b);  // anchor .. b
    VertexList mid = kernel_path(ia, ib);

    VertexList full(seg_a.rbegin(), seg_a.rend());  // a .. anchor(a)
    for (size_t i = 1; i < mid.size(); ++i) full.push_back(mid[i]);
    for (size_t i = 1; i < seg_b.size(); ++i) full.push_back(seg_b[i]);
    return full;
}

}  // namespace endegree
