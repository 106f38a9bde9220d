#include "mcone/rational.hpp"

#include <gmp.h>

#include <cctype>

namespace mcone {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer integer_from(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) throw InputError("not a rational: '" + std::string(text) + "'");
    return Rational(integer_from(s));
  }
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw InputError("not a rational: '" + std::string(text) + "'");
  }
  const Integer d = integer_from(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(integer_from(num), d);
}

RVector parse_vector(std::string_view text, char separator) {
  RVector out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(separator, start);
    out.push_back(parse_rational(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const RVector& v, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += separator;
    out += v[i].str();
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::optional<Rational> exact_root(const Rational& value, unsigned n) {
  if (value < 0 || n == 0) return std::nullopt;
  if (n == 1) return value;
  Integer num = numerator(value);
  Integer den = denominator(value);
  Integer rn, rd;
  if (mpz_root(rn.backend().data(), num.backend().data(), n) == 0) return std::nullopt;
  if (mpz_root(rd.backend().data(), den.backend().data(), n) == 0) return std::nullopt;
  return Rational(rn, rd);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace mcone
