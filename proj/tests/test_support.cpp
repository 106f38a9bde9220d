#include "mcone/instances.hpp"
#include "mcone/support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mcone;

TEST_CASE("classical support passes every axiom") {
  Sampler s(17);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + s.index(3);
    const auto cone = classical_cone(n);
    std::vector<RVector> probes;
    for (int j = 0; j < 3; ++j) probes.push_back(s.cone_element(cone));
    probes.push_back(s.vector(n));
    RVector unit(n, Rational(0));
    unit[0] = 1;
    probes.push_back(unit);
    const auto report = verify_support_family(
        cone, [n](const RVector& z) { return classical_support(n, z); }, probes);
    CHECK_MESSAGE(report.passed(), report.summary());
    CHECK(report.probes >= probes.size());
    CHECK(report.pairs > 0);
    CHECK_FALSE(report.note.empty());
  }
}

TEST_CASE("constant unit support fails minimality on the square cone") {
  const auto sq = square_base_cone();
  const auto report =
      verify_support_family(sq, [&](const RVector&) { return unit_effect(sq); }, {{1, 0, 0}});
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.axiom("minimal-carrier").passed());
  CHECK_FALSE(report.axiom("zero-iff-null").passed());
  CHECK(report.axiom("effect").passed());
}

TEST_CASE("non-effects are reported") {
  const auto orth = classical_cone(2);
  const auto report =
      verify_support_family(orth, [](const RVector&) { return Effect{{2, 0}}; }, {{1, 0}});
  CHECK_FALSE(report.axiom("effect").passed());
}

TEST_CASE("extreme carriers") {
  const auto sq = square_base_cone();
  const RVector w{1, 0, 1};  // z+ + z- for z = (1,0,0) at alpha = 0
  const auto bounds = extreme_carriers(sq, w);
  REQUIRE(bounds.size() == 4);
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    CHECK(is_effect(sq, bounds[i].carrier));
    CHECK(bounds[i].carrier(w) == sq.charge_of(w));
    CHECK(bounds[i].carrier(sq.generator(i)) == bounds[i].min_value);
  }
  // w spans the edge through r_0 and r_1, so every carrier equals e there.
  CHECK(bounds[0].min_value == 1);
  CHECK(bounds[1].min_value == 1);
}

TEST_CASE("classical supports join and faces") {
  Sampler s(23);
  const std::size_t n = 4;
  const auto cone = classical_cone(n);
  for (int trial = 0; trial < 40; ++trial) {
    const RVector x = s.cone_element(cone, true);
    const RVector y = s.cone_element(cone, true);
    const auto sx = classical_support(n, x);
    const auto sy = classical_support(n, y);
    const auto sxy = classical_support(n, x + y);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(sxy.functional[i] == std::max(sx.functional[i], sy.functional[i]));
    // Faces {r_i : s_{r_i} <= s} grow with s.
    if (effect_leq(cone, sx, sy)) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto si = classical_support(n, cone.generator(i));
        if (effect_leq(cone, si, sx)) CHECK(effect_leq(cone, si, sy));
      }
    }
  }
}
