#pragma once
// Exact arithmetic substrate: arbitrary-precision integers and rationals, plus
// the integer point/vector helpers everything downstream shares.
//
// BigRational is always canonical: lowest terms, positive denominator. That is
// guaranteed by the cpp_rational backend; rational_from_string round-trips any
// "p/q" or "p" form through canonicalization.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mink {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// integer coordinate vector in Z^N
using LatticePoint = std::vector<BigInt>;
// rational coordinate vector in Q^N
using RationalVector = std::vector<BigRational>;
using RationalMatrix = std::vector<RationalVector>;

// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument on
// malformed input or zero denominator.
BigRational rational_from_string(const std::string& s);

// Emits "p/q", or just "p" when the value is integral. Inverse of the parser.
std::string rational_to_string(const BigRational& r);

inline bool is_integral(const BigRational& r) { return denominator(r) == 1; }

// floor(r) as an exact integer (works for negative values)
BigInt rational_floor(const BigRational& r);

// ---- small vector helpers -------------------------------------------------

LatticePoint add(const LatticePoint& a, const LatticePoint& b);
LatticePoint sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint scale(const LatticePoint& a, const BigInt& n);
bool is_zero(const LatticePoint& a);

// lexicographic order on coordinate vectors of equal length
bool lex_less(const LatticePoint& a, const LatticePoint& b);

std::string point_to_string(const LatticePoint& a);

}  // namespace mink
