#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace endegree {

// A vertex of a lazily represented graph. Addresses are family-specific
// path encodings; the core only relies on equality and total order.
struct VertexId {
    std::string addr;

    VertexId() = default;
    explicit VertexId(std::string a) : addr(std::move(a)) {}

    auto operator<=>(const VertexId&) const = default;
};

using VertexSet = std::set<VertexId>;
using VertexList = std::vector<VertexId>;

// Family-specific encoding of an end.
struct EndId {
    std::string name;

    EndId() = default;
    explicit EndId(std::string n) : name(std::move(n)) {}

    auto operator<=>(const EndId&) const = default;
};

struct AddressError : std::runtime_error {
    explicit AddressError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what, std::uint64_t spent_queries = 0)
        : std::runtime_error(what), spent(spent_queries) {}
    std::uint64_t spent;
};

// The generator's defining sequences ran out of qualifying regions.
// `certified` distinguishes "the family provably has none" from "budget too small".
struct OracleExhausted : std::runtime_error {
    OracleExhausted(const std::string& what, bool certified_failure)
        : std::runtime_error(what), certified(certified_failure) {}
    bool certified;
};

// A boundary computation hit membership answers that stayed Unknown.
struct IndeterminateError : std::runtime_error {
    IndeterminateError(const std::string& what, VertexList undecided_vertices)
        : std::runtime_error(what), undecided(std::move(undecided_vertices)) {}
    VertexList undecided;
};

}  // namespace endegree
