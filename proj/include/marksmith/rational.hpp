#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace marksmith {

// All matrix arithmetic in the library is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

// Parses "p" or "p/q".
Rat rat_from_string(const std::string& s);

}  // namespace marksmith
