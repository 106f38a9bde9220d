#pragma once

#include "mcone/cone.hpp"
#include "mcone/rational.hpp"

#include <string>

namespace mcone {

/// A symmetric, strictly monotone profile P(a, b) on the charge split:
///   OneNorm  a + b
///   PNorm    (a^p + b^p)^(1/p), rational p >= 1
///   MaxNorm  max(a, b)
class McNormSpec {
 public:
  enum class Kind { OneNorm, PNorm, MaxNorm };

  static McNormSpec one_norm() { return McNormSpec(Kind::OneNorm, 1); }
  static McNormSpec max_norm() { return McNormSpec(Kind::MaxNorm, 1); }
  static McNormSpec p_norm(const Rational& p);

  Kind kind() const { return kind_; }
  const Rational& p() const { return p_; }
  std::string name() const;

 private:
  McNormSpec(Kind kind, Rational p) : kind_(kind), p_(std::move(p)) {}

  Kind kind_;
  Rational p_;
};

inline const Rational kDefaultPNormPrecision = Rational(1, 1000000000000LL);

/// P(a, b) for a, b >= 0, enclosed in an interval of width <= precision.
/// The interval is a single point whenever the value is rational and
/// recognized as such (always for OneNorm and MaxNorm).
RationalInterval mc_profile(const McNormSpec& spec, const Rational& a, const Rational& b,
                            const Rational& precision = kDefaultPNormPrecision);

/// P(e+(z), e-(z)).
RationalInterval mc_norm(const PolyhedralCone& cone, const RVector& z, const McNormSpec& spec,
                         const Rational& precision = kDefaultPNormPrecision);

/// Enclosure of value^(1/n) of width <= precision, exact when possible.
RationalInterval root_interval(const Rational& value, unsigned n, const Rational& precision);

}  // namespace mcone
