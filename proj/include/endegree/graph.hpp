#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "endegree/ids.hpp"

namespace endegree {

class Graph;
class ComponentModel;

// Query budget, counted in logical neighbor-oracle calls. Memoization is
// invisible: a memoized hit still spends one query.
class BudgetMeter {
public:
    explicit BudgetMeter(std::uint64_t limit) : limit_(limit) {}

    bool try_spend(std::uint64_t n = 1) {
        if (spent_ + n > limit_) {
            spent_ = limit_;
            return false;
        }
        spent_ += n;
        return true;
    }

    std::uint64_t spent() const { return spent_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t spent_ = 0;
};

// How a family supports exact component reasoning.
enum class EngineKind {
    PrefixCone,  // address-prefix cones attach to the rest at their root only
    Layered,     // finite layers; everything past the cut layer is connected per class
    Finite,      // the whole graph is finite (test doubles)
};

// A locally finite infinite graph given by a pure neighbor oracle.
class Family {
public:
    virtual ~Family() = default;

    virtual std::string name() const = 0;
    virtual VertexId root() const = 0;

    // Sorted, finite, symmetric, deterministic. Throws AddressError.
    virtual VertexList neighbors(const VertexId& v) const = 0;
    virtual void validate_address(const VertexId& v) const = 0;

    // Construction-order level of a vertex (root = 0). Strictly increases
    // along canonical rays; used to certify tail membership.
    virtual int height(const VertexId& v) const = 0;

    virtual EngineKind engine() const = 0;

    // PrefixCone hooks.
    virtual bool cone_contains(const VertexId&, const VertexId&) const {
        throw DomainError("family has no cone structure");
    }
    // All cone roots above v, from the graph root down to v itself.
    virtual VertexList cone_prefixes(const VertexId&) const {
        throw DomainError("family has no cone structure");
    }
    // Path from cone root a to cone member b, staying inside the cone.
    virtual VertexList cone_path(const VertexId&, const VertexId&) const {
        throw DomainError("family has no cone structure");
    }

    // Layered hooks.
    virtual int layer_of(const VertexId&) const {
        throw DomainError("family has no layer structure");
    }
    // All vertices of layer <= max_layer plus any fixed finite gadget.
    virtual VertexList base_vertices(int /*max_layer*/) const {
        throw DomainError("family has no layer structure");
    }
    // Members of the cut layer that carry an infinite attachment.
    virtual VertexList attachment_vertices(int /*layer*/) const {
        throw DomainError("family has no layer structure");
    }
    // For a vertex beyond the cut layer: a cut-layer vertex in its component.
    virtual VertexId attachment_anchor(const VertexId&, int /*layer*/) const {
        throw DomainError("family has no layer structure");
    }
    // Path from the anchor to the deep vertex, staying beyond or at the cut layer.
    virtual VertexList attachment_path(const VertexId&, const VertexId&) const {
        throw DomainError("family has no layer structure");
    }
};

// Immutable, shareable handle. All operations are pure given the handle;
// internal memoization is synchronized.
class Graph {
public:
    explicit Graph(std::shared_ptr<const Family> family);

    const Family& family() const { return *state_->family; }
    std::shared_ptr<const Family> family_ptr() const { return state_->family; }
    VertexId root() const { return state_->family->root(); }

    const VertexList& neighbors(const VertexId& v) const;
    // Budgeted variant: returns nullptr when the meter is exhausted.
    const VertexList* neighbors(const VertexId& v, BudgetMeter& meter) const;

    int degree(const VertexId& v) const { return static_cast<int>(neighbors(v).size()); }

    std::uint64_t query_count() const { return state_->queries.load(); }

    // Exact component decomposition of G - separator, cached per separator.
    std::shared_ptr<const ComponentModel> component_model(const VertexSet& separator) const;

private:
    struct State {
        std::shared_ptr<const Family> family;
        mutable std::mutex mu;
        mutable std::map<VertexId, VertexList> memo;
        mutable std::map<VertexSet, std::shared_ptr<const ComponentModel>> models;
        mutable std::atomic<std::uint64_t> queries{0};
    };
    std::shared_ptr<State> state_;
};

}  // namespace endegree
