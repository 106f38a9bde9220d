#pragma once

#include "mcone/cone.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace mcone {

/// The positive orthant of Q^n with the all-ones charge. Its order is a
/// vector lattice.
PolyhedralCone classical_cone(std::size_t n);

/// The cone over the square with vertices (+-1, +-1, 1), charge (0, 0, 1).
PolyhedralCone square_base_cone();

/// The cone over base points u_j in Q^(n-1): generators (u_j, 1), charge
/// the last coordinate.
PolyhedralCone cone_from_base_points(const std::vector<RVector>& base_points);

/// k random base points in Q^(n-1) lifted by cone_from_base_points;
/// resampled until the generators span Q^n. Deterministic per seed.
PolyhedralCone random_cone(std::size_t n, std::size_t k, std::uint64_t seed);

/// Indicator of the nonzero coordinates of z: the support of z on the
/// classical cone.
Effect classical_support(std::size_t n, const RVector& z);

/// Seeded source of small random rationals and cone elements.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform over { p/q : |p| <= max_abs_num, 1 <= q <= max_den }.
  Rational rational(int max_abs_num = 4, int max_den = 3);
  Rational nonnegative(int max_num = 4, int max_den = 3);
  std::size_t index(std::size_t bound);
  bool coin();

  RVector vector(std::size_t n, int max_abs_num = 4, int max_den = 3);

  /// Nonnegative combination of a random subset of generators (possibly zero
  /// when allow_zero is set).
  RVector cone_element(const PolyhedralCone& cone, bool allow_zero = false);

  /// A cone element of charge 1.
  RVector base_element(const PolyhedralCone& cone);

  /// Difference of two cone elements: an arbitrary vector of V.
  RVector space_element(const PolyhedralCone& cone);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mcone
