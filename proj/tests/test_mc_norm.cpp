#include "mcone/instances.hpp"
#include "mcone/mc_norm.hpp"

#include <doctest.h>

#include <cmath>

using namespace mcone;

TEST_CASE("spec construction") {
  CHECK(McNormSpec::one_norm().kind() == McNormSpec::Kind::OneNorm);
  CHECK(McNormSpec::p_norm(2).p() == 2);
  CHECK_THROWS_AS(McNormSpec::p_norm(Rational(1, 2)), InputError);
  CHECK_FALSE(McNormSpec::max_norm().name().empty());
}

TEST_CASE("profiles") {
  CHECK(mc_profile(McNormSpec::one_norm(), 3, 4).is_point());
  CHECK(mc_profile(McNormSpec::one_norm(), 3, 4).lo == 7);
  CHECK(mc_profile(McNormSpec::max_norm(), 3, 4).lo == 4);
  const auto p2 = mc_profile(McNormSpec::p_norm(2), 3, 4);
  CHECK(p2.is_point());
  CHECK(p2.lo == 5);
  const auto p1 = mc_profile(McNormSpec::p_norm(1), Rational(1, 3), Rational(1, 6));
  CHECK(p1.is_point());
  CHECK(p1.lo == Rational(1, 2));
}

TEST_CASE("square cone examples") {
  const auto sq = square_base_cone();
  const RVector z{1, 0, 0};
  CHECK(mc_norm(sq, z, McNormSpec::one_norm()).lo == one_norm(sq, z));
  const auto mx = mc_norm(sq, z, McNormSpec::max_norm());
  CHECK(mx.is_point());
  CHECK(mx.lo == Rational(1, 2));

  const Rational precision(1, 1000000000);
  const auto p2 = mc_norm(sq, z, McNormSpec::p_norm(2), precision);
  CHECK(p2.width() <= precision);
  CHECK(p2.width() > 0);
  // sqrt(2)/2 lies between these rationals: 0.7071067811^2 * 2 < 1 < 0.7071067812^2 * 2.
  CHECK(p2.lo <= Rational(7071067812LL, 10000000000LL));
  CHECK(p2.hi >= Rational(7071067811LL, 10000000000LL));
  CHECK(2 * p2.lo * p2.lo <= 1);
  CHECK(2 * p2.hi * p2.hi >= 1);
  CHECK(std::abs(to_double(p2.lo) - std::sqrt(0.5)) < 1e-9);
}

TEST_CASE("root_interval") {
  const auto r = root_interval(2, 2, Rational(1, 1000000));
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK(r.width() <= Rational(1, 1000000));
  CHECK(root_interval(Rational(8, 27), 3, Rational(1, 10)).is_point());
}

TEST_CASE("sandwich and strict monotonicity") {
  Sampler s(5);
  const std::vector<McNormSpec> specs{McNormSpec::one_norm(), McNormSpec::max_norm(),
                                      McNormSpec::p_norm(2), McNormSpec::p_norm(3),
                                      McNormSpec::p_norm(Rational(3, 2))};
  for (int trial = 0; trial < 40; ++trial) {
    const auto cone = random_cone(3, 4 + s.index(3), 300 + trial);
    const RVector z = s.vector(3);
    const auto split = charge_split(cone, z);
    const Rational e = cone.charge_of(z);
    const Rational abs_e = e < 0 ? Rational(-e) : e;
    for (const auto& spec : specs) {
      const auto v = mc_norm(cone, z, spec);
      CHECK(v.width() <= kDefaultPNormPrecision);
      CHECK(abs_e <= v.hi);
      CHECK(v.lo <= split.one_norm());
      const Rational d(1, 7);
      const auto bumped = mc_profile(spec, split.e_plus + d, split.e_minus + d);
      CHECK(bumped.lo > v.hi);
    }
  }
}
