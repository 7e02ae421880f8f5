#include "endegree/graph.hpp"

#include "endegree/component_model.hpp"
#include "endegree/rational.hpp"

namespace endegree {

Graph::Graph(std::shared_ptr<const Family> family) : state_(std::make_shared<State>()) {
    state_->family = std::move(family);
}

const VertexList& Graph::neighbors(const VertexId& v) const {
    state_->queries.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(v);
    if (it != state_->memo.end()) return it->second;
    VertexList nbrs = state_->family->neighbors(v);
    return state_->memo.emplace(v, std::move(nbrs)).first->second;
}

const VertexList* Graph::neighbors(const VertexId& v, BudgetMeter& meter) const {
    if (!meter.try_spend(1)) return nullptr;
    return &neighbors(v);
}

std::shared_ptr<const ComponentModel> Graph::component_model(const VertexSet& separator) const {
    {
        std::lock_guard<std::mutex> lock(state_->mu);
        auto it = state_->models.find(separator);
        if (it != state_->models.end()) return it->second;
    }
    auto model = std::make_shared<const ComponentModel>(build_component_model(*this, separator));
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->models.size() > 512) state_->models.clear();
    return state_->models.emplace(separator, std::move(model)).first->second;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational: " + text);
    } catch (const std::out_of_range&) {
        throw DomainError("rational out of range: " + text);
    }
}

}  // namespace endegree
