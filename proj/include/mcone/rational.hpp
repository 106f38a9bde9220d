#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcone {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RVector = std::vector<Rational>;

/// Raised for malformed or contract-violating arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q", "-p/q" or an integer. Decimals and exponents are rejected.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list of rationals, e.g. "1/2,-1,0".
RVector parse_vector(std::string_view text, char separator = ',');

std::string to_string(const Rational& value);
std::string to_string(const RVector& v, std::string_view separator = ",");

double to_double(const Rational& value);

/// Exact n-th root of a nonnegative rational when it exists.
std::optional<Rational> exact_root(const Rational& value, unsigned n);

Rational pow(const Rational& base, unsigned exponent);

/// A closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval point(const Rational& v) { return {v, v}; }

  Rational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

}  // namespace mcone
