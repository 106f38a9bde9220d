#include "mcone/cone.hpp"
#include "mcone/instances.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mcone;

namespace {

PolyhedralCone orthant2() { return classical_cone(2); }

RVector half(const RVector& v) { return Rational(1, 2) * v; }

}  // namespace

TEST_CASE("cone_validate") {
  CHECK(cone_validate(orthant2()).valid());
  CHECK(cone_validate(square_base_cone()).valid());

  const PolyhedralCone degenerate({{1, 0}, {0, 1}}, {1, 0});
  const auto report = cone_validate(degenerate);
  CHECK_FALSE(report.valid());
  CHECK(report.charge_on_generators == RVector{1, 0});

  const PolyhedralCone flat({{1, 0}, {2, 0}}, {1, 1});
  CHECK_FALSE(flat.is_valid());
  CHECK(flat.validation().rank == 1);

  CHECK_THROWS_AS(PolyhedralCone({{1, 0}, {0, 1, 2}}, {1, 1}), InputError);
  CHECK_THROWS_AS(charge_split(degenerate, {1, 1}), InputError);
}

TEST_CASE("cone_contains") {
  const auto orth = orthant2();
  CHECK(cone_contains(orth, {1, 2}));
  CHECK_FALSE(cone_contains(orth, {1, -1}));
  const auto sq = square_base_cone();
  CHECK_FALSE(cone_contains(sq, {1, 0, 0}));
  CHECK_FALSE(oracle::brute_force_contains(sq.generators(), {1, 0, 0}));
  CHECK(cone_contains(sq, {0, 0, 1}));
  CHECK(cone_contains(sq, {0, 0, 0}));
  CHECK_THROWS_AS(cone_contains(sq, {1, 0}), InputError);
}

TEST_CASE("charge_split examples") {
  const auto orth = orthant2();
  const auto s1 = charge_split(orth, {1, 2});
  CHECK(s1.e_plus == 3);
  CHECK(s1.e_minus == 0);

  const auto sq = square_base_cone();
  const RVector z{1, 0, 0};
  const auto brute = oracle::brute_force_charge_split(sq.generators(), sq.charge(), z);
  CHECK(brute.first == Rational(1, 2));  // frozen from the oracle
  CHECK(brute.second == Rational(1, 2));
  const auto s2 = charge_split(sq, z);
  CHECK(s2.e_plus == brute.first);
  CHECK(s2.e_minus == brute.second);

  const auto s3 = charge_split(orth, {3, -2});
  CHECK(s3.e_plus == 3);
  CHECK(s3.e_minus == 2);
}

TEST_CASE("one_norm examples") {
  const auto sq = square_base_cone();
  CHECK(one_norm(sq, {1, 0, 0}) == 1);
  CHECK(one_norm(sq, {0, 0, 0}) == 0);
  CHECK(one_norm(sq, {1, 1, 2}) == 2);
  CHECK(one_norm(orthant2(), {3, -2}) == 5);
}

TEST_CASE("minimal_decomposition examples") {
  const auto orth = orthant2();
  const auto d = minimal_decomposition(orth, {3, -2});
  CHECK(d.z_plus == RVector{3, 0});
  CHECK(d.z_minus == RVector{0, 2});

  const auto sq = square_base_cone();
  const auto ds = minimal_decomposition(sq, {1, 0, 0});
  CHECK(ds.difference() == RVector{1, 0, 0});
  CHECK(ds.z_plus[0] == Rational(1, 2));
  CHECK(ds.z_plus[2] == Rational(1, 2));
  CHECK(ds.z_minus[0] == Rational(-1, 2));
  CHECK(ds.z_minus[1] == ds.z_plus[1]);
  CHECK(abs(ds.z_plus[1] * 2) <= 1);

  const RVector inside{1, 2, 3};
  const auto di = minimal_decomposition(sq, inside);
  CHECK(di.z_plus == inside);
  CHECK(is_zero(di.z_minus));
}

TEST_CASE("all_minimal_decompositions examples") {
  const auto orth = orthant2();
  const auto o = all_minimal_decompositions(orth, {3, -2}, 16);
  CHECK(o.decompositions.size() == 1);
  CHECK_FALSE(o.non_unique);
  CHECK(o.one_norm == 5);

  const auto sq = square_base_cone();
  const auto s = all_minimal_decompositions(sq, {1, 0, 0}, 16);
  CHECK(s.non_unique);
  CHECK(s.decompositions.size() >= 2);
  CHECK(s.one_norm == 1);
  bool saw_plus = false, saw_minus = false;
  for (const auto& d : s.decompositions) {
    CHECK(is_minimal(sq, d, {1, 0, 0}));
    if (d.z_plus == half({1, 1, 1}) && d.z_minus == half({-1, 1, 1})) saw_plus = true;
    if (d.z_plus == half({1, -1, 1}) && d.z_minus == half({-1, -1, 1})) saw_minus = true;
  }
  CHECK(saw_plus);
  CHECK(saw_minus);

  const auto in = all_minimal_decompositions(sq, {0, 1, 2}, 16);
  REQUIRE(in.decompositions.size() == 1);
  CHECK(in.decompositions[0].z_plus == RVector{0, 1, 2});
  CHECK(is_zero(in.decompositions[0].z_minus));
}

TEST_CASE("is_minimal examples") {
  const auto orth = orthant2();
  CHECK(is_minimal(orth, {{3, 0}, {0, 2}}, {3, -2}));
  CHECK_FALSE(is_minimal(orth, {{4, 1}, {1, 3}}, {3, -2}));
  CHECK_THROWS_AS(is_minimal(orth, {{4, 1}, {1, 2}}, {3, -2}), InputError);
  CHECK_FALSE(is_minimal(orth, {{3, -1}, {0, 1}}, {3, -2}));

  const auto sq = square_base_cone();
  for (const Rational a : {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)})
    CHECK(is_minimal(sq, {half({1, a, 1}), half({-1, a, 1})}, {1, 0, 0}));
}

TEST_CASE("are_orthogonal and disjointness_witness examples") {
  const auto orth = orthant2();
  CHECK(are_orthogonal(orth, {1, 0}, {0, 1}));
  CHECK_FALSE(are_orthogonal(orth, {1, 1}, {0, 1}));
  const auto w = disjointness_witness(orth, {1, 0}, {0, 1});
  REQUIRE(w.has_value());
  CHECK(w->functional == RVector{1, 0});
  CHECK_FALSE(disjointness_witness(orth, {1, 1}, {0, 1}).has_value());

  const auto sq = square_base_cone();
  for (const Rational a : {Rational(-1), Rational(0), Rational(1)})
    CHECK(are_orthogonal(sq, {1, a, 1}, {-1, a, 1}));
  const RVector x{1, 0, 1}, y{-1, 0, 1};
  const auto ws = disjointness_witness(sq, x, y);
  REQUIRE(ws.has_value());
  CHECK(is_effect(sq, *ws));
  CHECK((*ws)(x) == 1);
  CHECK((*ws)(y) == 0);

  CHECK_THROWS_AS(are_orthogonal(orth, {1, -1}, {0, 1}), InputError);
  CHECK_THROWS_AS(are_orthogonal(orth, {0, 0}, {0, 1}), InputError);
  CHECK_THROWS_AS(disjointness_witness(orth, {1, -1}, {0, 1}), InputError);
}

TEST_CASE("effects") {
  const auto orth = orthant2();
  const Effect o = zero_effect(orth);
  const Effect e = unit_effect(orth);
  CHECK(effect_complement(orth, o) == e);
  const Effect h{{Rational(1, 2), Rational(1, 2)}};
  CHECK(effect_complement(orth, h) == h);
  CHECK(effect_complement(orth, Effect{{1, 0}}) == Effect{{0, 1}});
  CHECK(effect_complement(orth, effect_complement(orth, Effect{{Rational(1, 3), 1}})) ==
        Effect{{Rational(1, 3), 1}});
  CHECK_THROWS_AS(effect_complement(orth, Effect{{2, 0}}), InputError);

  CHECK(effects_weakly_orthogonal(orth, h, h));
  CHECK(effects_weakly_orthogonal(orth, Effect{{1, 0}}, effect_complement(orth, Effect{{1, 0}})));
  CHECK_FALSE(effects_weakly_orthogonal(orth, Effect{{1, 0}}, Effect{{1, 0}}));
  CHECK_THROWS_AS(effects_weakly_orthogonal(orth, Effect{{-1, 0}}, h), InputError);

  CHECK(effect_leq(orth, o, h));
  CHECK_FALSE(effect_leq(orth, e, h));
  CHECK(effects_disjoint(orth, Effect{{1, 0}}, Effect{{0, 1}}));
  CHECK_FALSE(effects_disjoint(orth, h, h));
}

TEST_CASE("random-cone invariants") {
  Sampler s(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + s.index(3);
    const std::size_t k = n + s.index(4);
    const auto cone = random_cone(n, k, 1000 + trial);
    REQUIRE(cone.is_valid());
    for (int j = 0; j < 4; ++j) {
      const RVector z = s.vector(n);
      const auto split = charge_split(cone, z);
      CHECK(split.e_plus - split.e_minus == cone.charge_of(z));
      CHECK(split.e_plus >= 0);
      CHECK(split.e_minus >= 0);
      CHECK(joint_decomposition_cost(cone, z) == split.one_norm());
      CHECK(cone_contains(cone, z) == (split.one_norm() == cone.charge_of(z)));
      CHECK(cone_contains(cone, z) == oracle::brute_force_contains(cone.generators(), z));
      CHECK((split.e_minus == 0) == cone_contains(cone, z));
      CHECK((split.e_plus == 0) == cone_contains(cone, -z));

      // Minimal iff orthogonal, both directions.
      const auto d = minimal_decomposition(cone, z);
      CHECK(d.difference() == z);
      CHECK(cone.charge_of(d.z_plus) == split.e_plus);
      CHECK(cone.charge_of(d.z_minus) == split.e_minus);
      CHECK(one_norm(cone, d.difference()) == one_norm(cone, d.sum()));
      CHECK(is_minimal(cone, d, z));
      const RVector t = s.cone_element(cone);
      const Decomposition inflated{d.z_plus + t, d.z_minus + t};
      CHECK(one_norm(cone, inflated.difference()) < one_norm(cone, inflated.sum()));
      CHECK_FALSE(is_minimal(cone, inflated, z));
    }
  }
}

TEST_CASE("orthogonality equals witness existence on random cones") {
  Sampler s(9);
  int orthogonal = 0, total = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + s.index(3);
    const std::size_t k = n + s.index(3);
    const auto cone = random_cone(n, k, 500 + trial);
    // Generator pairs hit the boundary; random combinations hit the interior.
    std::vector<RVector> pool = cone.generators();
    for (int j = 0; j < 3; ++j) pool.push_back(s.cone_element(cone));
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = 0; b < pool.size(); ++b) {
        const bool orth = are_orthogonal(cone, pool[a], pool[b]);
        const auto w = disjointness_witness(cone, pool[a], pool[b]);
        CHECK(orth == w.has_value());
        if (w) {
          CHECK(is_effect(cone, *w));
          CHECK((*w)(pool[a]) == cone.charge_of(pool[a]));
          CHECK((*w)(pool[b]) == 0);
        }
        orthogonal += orth;
        ++total;
      }
  }
  CHECK(orthogonal > 0);
  CHECK(orthogonal < total);
}

TEST_CASE("orthogonal pairs satisfy the norm identity on a grid") {
  const auto sq = square_base_cone();
  const auto orth = classical_cone(3);
  const std::vector<std::tuple<PolyhedralCone, RVector, RVector>> pairs{
      {sq, {1, 1, 1}, {-1, 1, 1}},
      {sq, {1, 0, 1}, {-1, 0, 1}},
      {sq, {1, 1, 1}, {-1, -1, 1}},
      {orth, {2, 0, 0}, {0, 1, 3}},
  };
  for (const auto& [cone, x, y] : pairs) {
    REQUIRE(are_orthogonal(cone, x, y));
    const RVector x0 = (1 / one_norm(cone, x)) * x;
    const RVector y0 = (1 / one_norm(cone, y)) * y;
    for (int i = 0; i <= 16; ++i)
      for (int j = 0; j <= 16; ++j) {
        const Rational a(i, 8), b(j, 8);
        CHECK(one_norm(cone, a * x0 - b * y0) == a + b);
        CHECK(one_norm(cone, a * x0 + b * y0) == a + b);
      }
  }
  // A non-orthogonal pair breaks the identity somewhere on the same grid.
  const RVector x{1, 1, 1}, y{0, 0, 1};
  CHECK_FALSE(are_orthogonal(sq, x, y));
  CHECK(one_norm(sq, x - y) < 2);
}

TEST_CASE("classical decompositions are the lattice parts and unique") {
  Sampler s(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + s.index(6);
    const auto cone = classical_cone(n);
    const RVector z = s.vector(n);
    RVector pos(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[i] = z[i] > 0 ? z[i] : Rational(0);
      neg[i] = z[i] < 0 ? Rational(-z[i]) : Rational(0);
    }
    const auto all = all_minimal_decompositions(cone, z, 16);
    REQUIRE(all.decompositions.size() == 1);
    CHECK_FALSE(all.non_unique);
    CHECK(all.decompositions[0].z_plus == pos);
    CHECK(all.decompositions[0].z_minus == neg);
  }
}

TEST_CASE("strict positivity on generator combinations") {
  Sampler s(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto cone = random_cone(3, 5, 77 + trial);
    const RVector z = s.cone_element(cone, true);
    CHECK((cone.charge_of(z) == 0) == is_zero(z));
  }
}
