#include "mcone/instances.hpp"

namespace mcone {

PolyhedralCone classical_cone(std::size_t n) {
  if (n == 0) throw InputError("classical_cone: dimension must be positive");
  std::vector<RVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    RVector g = zeros(n);
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  return PolyhedralCone(std::move(gens), RVector(n, Rational(1)));
}

PolyhedralCone square_base_cone() {
  return cone_from_base_points({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
}

PolyhedralCone cone_from_base_points(const std::vector<RVector>& base_points) {
  if (base_points.empty()) throw InputError("cone_from_base_points: no points");
  const std::size_t n = base_points.front().size() + 1;
  std::vector<RVector> gens;
  for (const auto& u : base_points) {
    if (u.size() + 1 != n) throw InputError("cone_from_base_points: inconsistent point lengths");
    RVector g = u;
    g.push_back(1);
    gens.push_back(std::move(g));
  }
  RVector charge = zeros(n);
  charge.back() = 1;
  return PolyhedralCone(std::move(gens), std::move(charge));
}

PolyhedralCone random_cone(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw InputError("random_cone: dimension must be positive");
  if (k < n) throw InputError("random_cone: need at least as many generators as dimensions");
  Sampler sampler(seed);
  while (true) {
    std::vector<RVector> points;
    for (std::size_t j = 0; j < k; ++j) points.push_back(sampler.vector(n - 1, 3, 2));
    PolyhedralCone cone = cone_from_base_points(points);
    if (cone.is_valid()) return cone;
  }
}

Effect classical_support(std::size_t n, const RVector& z) {
  if (z.size() != n) throw InputError("classical_support: dimension mismatch");
  Effect s{zeros(n)};
  for (std::size_t i = 0; i < n; ++i)
    if (z[i] != 0) s.functional[i] = 1;
  return s;
}

Rational Sampler::rational(int max_abs_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, max_den);
  const int p = num(rng_);
  const int q = den(rng_);
  return Rational(p, q);
}

Rational Sampler::nonnegative(int max_num, int max_den) {
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  const int p = num(rng_);
  const int q = den(rng_);
  return Rational(p, q);
}

std::size_t Sampler::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

bool Sampler::coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

RVector Sampler::vector(std::size_t n, int max_abs_num, int max_den) {
  RVector v(n);
  for (auto& x : v) x = rational(max_abs_num, max_den);
  return v;
}

RVector Sampler::cone_element(const PolyhedralCone& cone, bool allow_zero) {
  while (true) {
    RVector v = zeros(cone.dimension());
    for (const auto& g : cone.generators()) {
      if (!coin()) continue;
      const Rational c = nonnegative();
      if (c != 0) v = v + c * g;
    }
    if (allow_zero || !is_zero(v)) return v;
  }
}

RVector Sampler::base_element(const PolyhedralCone& cone) {
  RVector v = cone_element(cone);
  return Rational(1) / cone.charge_of(v) * v;
}

RVector Sampler::space_element(const PolyhedralCone& cone) {
  return cone_element(cone, true) - cone_element(cone, true);
}

}  // namespace mcone
