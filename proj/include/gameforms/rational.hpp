#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace gf {

// Exact arbitrary-precision rational. All game values, costs, weights and
// LP arithmetic run on this type; floating point never decides anything.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_str(const Rat& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

// Parses "p" or "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rat> parse_rat(std::string_view s);

}  // namespace gf
