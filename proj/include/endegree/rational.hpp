#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace endegree {

// Exact rational arithmetic for all degree averages; thresholds q are rationals.
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "p", "p/q" or "-p/q".
Rational parse_rational(const std::string& text);

}  // namespace endegree
