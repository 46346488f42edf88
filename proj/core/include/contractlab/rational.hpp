#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "contractlab/errors.hpp"

namespace contractlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Kept in canonical form at all times:
/// denominator > 0 and gcd(|num|, den) = 1 (maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Builds p/q with any signs; throws ParameterError on q = 0.
Rational make_rational(const BigInt& p, const BigInt& q);
Rational make_rational(long long p, long long q);

/// Parses "p/q" or "p" with optional leading '-'. Exact; throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1) form; parse_rational round-trips it.
std::string rational_to_string(const Rational& r);

double to_double(const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// lcm of two positive integers.
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace contractlab
