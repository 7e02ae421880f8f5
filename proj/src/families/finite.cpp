#include "../family_impl.hpp"

namespace endegree {
namespace detail {

FiniteWindowFamily::FiniteWindowFamily(Window w) : window(std::move(w)) {
    if (window.empty()) throw DomainError("finite test double needs a nonempty window");
}

VertexId FiniteWindowFamily::root() const { return window.vertex(0); }

void FiniteWindowFamily::validate_address(const VertexId& v) const {
    if (window.index_of(v) < 0) throw AddressError("no such vertex: " + v.addr);
}

VertexList FiniteWindowFamily::neighbors(const VertexId& v) const {
    int idx = window.index_of(v);
    if (idx < 0) throw AddressError("no such vertex: " + v.addr);
    VertexList out;
    for (int nb : window.adj(idx)) out.push_back(window.vertex(nb));
    return out;  // window adjacency is sorted by index == sorted by address
}

}  // namespace detail
}  // namespace endegree
