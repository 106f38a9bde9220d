#include "mcone/mc_norm.hpp"

#include <algorithm>

namespace mcone {

namespace {

unsigned small_unsigned(const Integer& v, const char* what) {
  if (v > 64) throw InputError(std::string(what) + ": exponent parts above 64 are not supported");
  return v.convert_to<unsigned>();
}

}  // namespace

McNormSpec McNormSpec::p_norm(const Rational& p) {
  if (p < 1) throw InputError("p-norm profile requires p >= 1");
  small_unsigned(numerator(p), "p-norm profile");
  small_unsigned(denominator(p), "p-norm profile");
  if (p == 1) return McNormSpec(Kind::PNorm, 1);
  return McNormSpec(Kind::PNorm, p);
}

std::string McNormSpec::name() const {
  switch (kind_) {
    case Kind::OneNorm: return "one";
    case Kind::MaxNorm: return "max";
    case Kind::PNorm: return "p=" + to_string(p_);
  }
  return "?";
}

RationalInterval root_interval(const Rational& value, unsigned n, const Rational& precision) {
  if (value < 0) throw InputError("root_interval: negative radicand");
  if (precision <= 0) throw InputError("root_interval: precision must be positive");
  if (auto r = exact_root(value, n)) return RationalInterval::point(*r);
  Rational lo = 0;
  Rational hi = value > 1 ? value : Rational(1);
  while (hi - lo > precision) {
    Rational mid = (lo + hi) / 2;
    if (pow(mid, n) <= value) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {lo, hi};
}

RationalInterval mc_profile(const McNormSpec& spec, const Rational& a, const Rational& b,
                            const Rational& precision) {
  if (a < 0 || b < 0) throw InputError("mc_profile: arguments must be nonnegative");
  if (precision <= 0) throw InputError("mc_profile: precision must be positive");
  switch (spec.kind()) {
    case McNormSpec::Kind::OneNorm: return RationalInterval::point(a + b);
    case McNormSpec::Kind::MaxNorm: return RationalInterval::point(std::max(a, b));
    case McNormSpec::Kind::PNorm: break;
  }
  if (a == 0 || b == 0) return RationalInterval::point(std::max(a, b));

  // P(a, b) = (a^(r/s) + b^(r/s))^(s/r) for p = r/s.
  const unsigned r = numerator(spec.p()).convert_to<unsigned>();
  const unsigned s = denominator(spec.p()).convert_to<unsigned>();
  const Rational ar = pow(a, r);
  const Rational br = pow(b, r);

  const auto ua = exact_root(ar, s);
  const auto ub = exact_root(br, s);
  if (ua && ub) {
    if (auto exact = exact_root(pow(*ua + *ub, s), r)) return RationalInterval::point(*exact);
  }

  Rational inner = precision / 4;
  while (true) {
    const RationalInterval u = root_interval(ar, s, inner);
    const RationalInterval v = root_interval(br, s, inner);
    const RationalInterval lo = root_interval(pow(u.lo + v.lo, s), r, inner);
    const RationalInterval hi = root_interval(pow(u.hi + v.hi, s), r, inner);
    RationalInterval out{lo.lo, hi.hi};
    if (out.width() <= precision) return out;
    inner /= 16;
  }
}

RationalInterval mc_norm(const PolyhedralCone& cone, const RVector& z, const McNormSpec& spec,
                         const Rational& precision) {
  const ChargeSplit split = charge_split(cone, z);
  return mc_profile(spec, split.e_plus, split.e_minus, precision);
}

}  // namespace mcone
