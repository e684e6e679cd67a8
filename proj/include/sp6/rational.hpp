#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sp6 {

// All arithmetic in this project is exact. Values are tiny (half-integers,
// small table entries) but nothing caps denominators or magnitudes.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// Parity is only defined for integers; a half-integer is neither odd nor even.
inline bool is_odd(const Rat& x) { return is_integer(x) && numerator(x) % 2 != 0; }
inline bool is_even(const Rat& x) { return is_integer(x) && numerator(x) % 2 == 0; }

inline std::string rat_str(const Rat& x) { return x.str(); }

// Accepts "p" or "p/q"; used by the fixture loader.
inline Rat rat_parse(std::string_view s) {
  try {
    return Rat(std::string(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  }
}

}  // namespace sp6
