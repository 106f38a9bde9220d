#include "mcone/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace mcone {

namespace {

// Builds min cost . (lambda, mu) s.t. R lambda - R mu = z over generator
// coefficients; p = R lambda and q = R mu are the decomposition parts.
lp::LinearProgram decomposition_program(const PolyhedralCone& cone, const RVector& z,
                                        bool charge_plus, bool charge_minus) {
  const std::size_t n = cone.dimension();
  const std::size_t k = cone.num_generators();
  lp::LinearProgram prog;
  prog.constraints = Matrix(n, 2 * k);
  prog.rhs = z;
  prog.objective = zeros(2 * k);
  const auto& charges = cone.validation().charge_on_generators;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      prog.constraints(r, i) = cone.generator(i)[r];
      prog.constraints(r, k + i) = -cone.generator(i)[r];
    }
    if (charge_plus) prog.objective[i] = charges[i];
    if (charge_minus) prog.objective[k + i] = charges[i];
  }
  return prog;
}

Decomposition decomposition_from_point(const PolyhedralCone& cone, const RVector& point) {
  const std::size_t k = cone.num_generators();
  const Matrix& R = cone.generator_matrix();
  RVector lambda(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(k));
  RVector mu(point.begin() + static_cast<std::ptrdiff_t>(k), point.end());
  return {R * lambda, R * mu};
}

lp::Solution solve_feasible(const lp::LinearProgram& prog, const char* what) {
  auto sol = lp::solve(prog);
  if (!sol.optimal())
    throw std::logic_error(std::string(what) + ": program unexpectedly " + lp::to_string(sol.status));
  return sol;
}

void require_cone_element(const PolyhedralCone& cone, const RVector& v, const char* what) {
  cone.require_dimension(v, what);
  if (!cone_contains(cone, v)) throw InputError(std::string(what) + ": vector is not in the cone");
}

void require_effect(const PolyhedralCone& cone, const Effect& a, const char* what) {
  cone.require_dimension(a.functional, what);
  if (!is_effect(cone, a)) throw InputError(std::string(what) + ": functional is not an effect");
}

}  // namespace

PolyhedralCone::PolyhedralCone(std::vector<RVector> generators, RVector charge)
    : generators_(std::move(generators)), charge_(std::move(charge)) {
  if (charge_.empty()) throw InputError("cone: dimension must be positive");
  if (generators_.empty()) throw InputError("cone: at least one generator is required");
  for (const auto& g : generators_) {
    if (g.size() != charge_.size())
      throw InputError("cone: generator length does not match charge length");
  }
  matrix_ = Matrix::from_columns(generators_);
  validation_ = cone_validate(*this);
}

Rational PolyhedralCone::charge_of(const RVector& z) const { return dot(charge_, z); }

void PolyhedralCone::require_valid() const {
  if (!is_valid()) throw InputError("cone is not a measure cone: " + validation_.failures.front());
}

void PolyhedralCone::require_dimension(const RVector& z, const char* what) const {
  if (z.size() != dimension())
    throw InputError(std::string(what) + ": expected a vector of length " +
                     std::to_string(dimension()) + ", got " + std::to_string(z.size()));
}

ConeValidation cone_validate(const PolyhedralCone& cone) {
  ConeValidation report;
  report.dimension = cone.dimension();
  report.rank = rank(cone.generator_matrix());
  if (report.rank != report.dimension) {
    report.failures.push_back("generators have rank " + std::to_string(report.rank) +
                              " < dimension " + std::to_string(report.dimension) +
                              " (cone is not generating)");
  }
  for (std::size_t i = 0; i < cone.num_generators(); ++i) {
    const Rational c = dot(cone.charge(), cone.generator(i));
    if (is_zero(cone.generator(i))) {
      report.failures.push_back("generator " + std::to_string(i) + " is zero");
    } else if (c <= 0) {
      report.failures.push_back("charge of generator " + std::to_string(i) + " is " + to_string(c) +
                                " (charge must be strictly positive)");
    }
    report.charge_on_generators.push_back(c);
  }
  return report;
}

bool cone_contains(const PolyhedralCone& cone, const RVector& z) {
  cone.require_dimension(z, "cone_contains");
  lp::LinearProgram prog;
  prog.constraints = cone.generator_matrix();
  prog.rhs = z;
  prog.objective = zeros(cone.num_generators());
  return lp::solve(prog).optimal();
}

ChargeSplit charge_split(const PolyhedralCone& cone, const RVector& z) {
  cone.require_valid();
  cone.require_dimension(z, "charge_split");
  auto plus = solve_feasible(decomposition_program(cone, z, true, false), "charge_split");
  auto minus = solve_feasible(decomposition_program(cone, z, false, true), "charge_split");
  return {plus.objective_value, minus.objective_value};
}

Rational one_norm(const PolyhedralCone& cone, const RVector& z) {
  return charge_split(cone, z).one_norm();
}

Rational joint_decomposition_cost(const PolyhedralCone& cone, const RVector& z) {
  cone.require_valid();
  cone.require_dimension(z, "joint_decomposition_cost");
  return solve_feasible(decomposition_program(cone, z, true, true), "joint_decomposition_cost")
      .objective_value;
}

Decomposition minimal_decomposition(const PolyhedralCone& cone, const RVector& z) {
  cone.require_valid();
  cone.require_dimension(z, "minimal_decomposition");
  auto sol = solve_feasible(decomposition_program(cone, z, true, true), "minimal_decomposition");
  return decomposition_from_point(cone, sol.point);
}

MinimalDecompositions all_minimal_decompositions(const PolyhedralCone& cone, const RVector& z,
                                                 std::size_t max_count) {
  cone.require_valid();
  cone.require_dimension(z, "all_minimal_decompositions");
  if (max_count == 0) throw InputError("all_minimal_decompositions: max_count must be positive");
  const auto prog = decomposition_program(cone, z, true, true);
  const auto sol = solve_feasible(prog, "all_minimal_decompositions");

  // Distinct coefficient vertices can describe the same decomposition when
  // generators are linearly dependent, so keep walking until max_count
  // distinct decompositions (or the face is exhausted). One extra is
  // requested so non-uniqueness is detectable even for max_count = 1.
  const std::size_t wanted = std::max<std::size_t>(max_count, 2);
  MinimalDecompositions out;
  out.one_norm = sol.objective_value;
  std::set<Decomposition> seen;
  std::size_t budget = wanted;
  while (true) {
    const auto vertices = lp::enumerate_optimal_vertices(prog, sol, budget);
    for (const auto& v : vertices) {
      Decomposition d = decomposition_from_point(cone, v);
      if (seen.insert(d).second) out.decompositions.push_back(std::move(d));
    }
    if (out.decompositions.size() >= wanted || vertices.size() < budget || budget >= 4096) break;
    out.decompositions.clear();
    seen.clear();
    budget *= 4;
  }
  out.non_unique = out.decompositions.size() > 1;
  if (out.decompositions.size() > max_count) out.decompositions.resize(max_count);
  return out;
}

bool is_minimal(const PolyhedralCone& cone, const Decomposition& d, const RVector& z) {
  cone.require_valid();
  cone.require_dimension(z, "is_minimal");
  cone.require_dimension(d.z_plus, "is_minimal");
  cone.require_dimension(d.z_minus, "is_minimal");
  if (d.difference() != z) throw InputError("is_minimal: z_plus - z_minus differs from z");
  if (!cone_contains(cone, d.z_plus) || !cone_contains(cone, d.z_minus)) return false;
  const ChargeSplit split = charge_split(cone, z);
  return cone.charge_of(d.z_plus) == split.e_plus && cone.charge_of(d.z_minus) == split.e_minus;
}

bool are_orthogonal(const PolyhedralCone& cone, const RVector& x, const RVector& y) {
  cone.require_valid();
  require_cone_element(cone, x, "are_orthogonal");
  require_cone_element(cone, y, "are_orthogonal");
  if (is_zero(x) || is_zero(y)) throw InputError("are_orthogonal: directions must be nonzero");
  // On the cone the 1-norm is the charge.
  const RVector x0 = Rational(1) / cone.charge_of(x) * x;
  const RVector y0 = Rational(1) / cone.charge_of(y) * y;
  return one_norm(cone, x0 - y0) == 2;
}

std::optional<Effect> disjointness_witness(const PolyhedralCone& cone, const RVector& x,
                                           const RVector& y) {
  cone.require_valid();
  require_cone_element(cone, x, "disjointness_witness");
  require_cone_element(cone, y, "disjointness_witness");
  const std::size_t n = cone.dimension();
  const std::size_t k = cone.num_generators();
  const auto& charges = cone.validation().charge_on_generators;

  // Variables: a+ (n), a- (n), low slack t (k), high slack s (k).
  const std::size_t vars = 2 * n + 2 * k;
  lp::LinearProgram prog;
  prog.constraints = Matrix(2 * k + 2, vars);
  prog.rhs = zeros(2 * k + 2);
  prog.objective = zeros(vars);
  auto put_functional = [&](std::size_t row, const RVector& v) {
    for (std::size_t j = 0; j < n; ++j) {
      prog.constraints(row, j) = v[j];
      prog.constraints(row, n + j) = -v[j];
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    put_functional(i, cone.generator(i));  // a(r_i) - t_i = 0
    prog.constraints(i, 2 * n + i) = -1;
    put_functional(k + i, cone.generator(i));  // a(r_i) + s_i = e(r_i)
    prog.constraints(k + i, 2 * n + k + i) = 1;
    prog.rhs[k + i] = charges[i];
    prog.objective[2 * n + i] = 1;
  }
  put_functional(2 * k, x);
  prog.rhs[2 * k] = cone.charge_of(x);
  put_functional(2 * k + 1, y);

  const auto sol = lp::solve(prog);
  if (!sol.optimal()) return std::nullopt;
  Effect a{zeros(n)};
  for (std::size_t j = 0; j < n; ++j) a.functional[j] = sol.point[j] - sol.point[n + j];
  return a;
}

bool is_effect(const PolyhedralCone& cone, const Effect& a) {
  if (a.functional.size() != cone.dimension()) return false;
  const auto& charges = cone.validation().charge_on_generators;
  for (std::size_t i = 0; i < cone.num_generators(); ++i) {
    const Rational v = a(cone.generator(i));
    if (v < 0 || v > charges[i]) return false;
  }
  return true;
}

Effect zero_effect(const PolyhedralCone& cone) { return {zeros(cone.dimension())}; }

Effect unit_effect(const PolyhedralCone& cone) { return {cone.charge()}; }

Effect effect_complement(const PolyhedralCone& cone, const Effect& a) {
  require_effect(cone, a, "effect_complement");
  return {cone.charge() - a.functional};
}

bool effects_weakly_orthogonal(const PolyhedralCone& cone, const Effect& a, const Effect& b) {
  require_effect(cone, a, "effects_weakly_orthogonal");
  require_effect(cone, b, "effects_weakly_orthogonal");
  const auto& charges = cone.validation().charge_on_generators;
  for (std::size_t i = 0; i < cone.num_generators(); ++i) {
    if (a(cone.generator(i)) + b(cone.generator(i)) > charges[i]) return false;
  }
  return true;
}

bool effect_leq(const PolyhedralCone& cone, const Effect& a, const Effect& b) {
  cone.require_dimension(a.functional, "effect_leq");
  cone.require_dimension(b.functional, "effect_leq");
  for (const auto& r : cone.generators()) {
    if (a(r) > b(r)) return false;
  }
  return true;
}

bool effects_disjoint(const PolyhedralCone& cone, const Effect& a, const Effect& b) {
  require_effect(cone, a, "effects_disjoint");
  require_effect(cone, b, "effects_disjoint");
  const std::size_t n = cone.dimension();
  const std::size_t k = cone.num_generators();

  // Maximize sum_i c(r_i) over effects c with c <= a and c <= b.
  // Variables: c+ (n), c- (n), t (k): c(r_i) = t_i, u (k): c(r_i) + u_i = a(r_i),
  // w (k): c(r_i) + w_i = b(r_i). Upper bounds by e are implied by c <= a.
  const std::size_t vars = 2 * n + 3 * k;
  lp::LinearProgram prog;
  prog.constraints = Matrix(3 * k, vars);
  prog.rhs = zeros(3 * k);
  prog.objective = zeros(vars);
  for (std::size_t i = 0; i < k; ++i) {
    const RVector& r = cone.generator(i);
    for (std::size_t block = 0; block < 3; ++block) {
      const std::size_t row = block * k + i;
      for (std::size_t j = 0; j < n; ++j) {
        prog.constraints(row, j) = r[j];
        prog.constraints(row, n + j) = -r[j];
      }
      prog.constraints(row, 2 * n + block * k + i) = block == 0 ? -1 : 1;
    }
    prog.rhs[k + i] = a(r);
    prog.rhs[2 * k + i] = b(r);
    prog.objective[2 * n + i] = -1;
  }
  const auto sol = lp::solve(prog);
  if (!sol.optimal()) throw std::logic_error("effects_disjoint: program unexpectedly unsolved");
  return sol.objective_value == 0;
}

}  // namespace mcone
