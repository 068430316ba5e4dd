#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polyfree {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Lowest-terms "p/q" form; the "/q" part is omitted when q == 1.
std::string ratToString(const Rat& r);

/// Parses "p" or "p/q" with optional leading '-'. Throws PfError on anything else.
Rat ratFromString(const std::string& s);

}  // namespace polyfree
