#pragma once

#include "mcone/linalg.hpp"

#include <cstddef>
#include <vector>

namespace mcone::lp {

/// Standard form: minimize objective . x  subject to  constraints * x = rhs, x >= 0.
struct LinearProgram {
  Matrix constraints;
  RVector rhs;
  RVector objective;

  std::size_t num_rows() const { return constraints.rows(); }
  std::size_t num_vars() const { return constraints.cols(); }
};

enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status s);

struct Solution {
  Status status = Status::Infeasible;

  // Optimal only.
  RVector point;
  Rational objective_value;
  std::vector<std::size_t> basis;  // structural basic columns, ascending

  // Optimal: row duals y with objective - A^T y >= 0 and complementary
  // slackness against `point`.
  // Infeasible: Farkas certificate y with A^T y >= 0 and rhs . y < 0.
  RVector dual;

  // Unbounded: direction d >= 0 with A d = 0 and objective . d < 0.
  RVector ray;

  bool optimal() const { return status == Status::Optimal; }
};

/// Two-phase primal simplex with Bland's smallest-index rule over exact
/// rationals. Deterministic; terminates without perturbation.
Solution solve(const LinearProgram& lp);

/// Vertices of the optimal face reached by pivoting among optimal bases
/// (zero reduced-cost columns) from the optimum `solve` returns. At most
/// `max_count` distinct vertices are returned; the first one is
/// `solution.point`.
std::vector<RVector> enumerate_optimal_vertices(const LinearProgram& lp, const Solution& solution,
                                                std::size_t max_count);

/// Exact certificate checks, usable in tests and self-checks.
bool is_primal_feasible(const LinearProgram& lp, const RVector& x);
bool certifies_optimality(const LinearProgram& lp, const Solution& solution);
bool certifies_infeasibility(const LinearProgram& lp, const RVector& farkas);

}  // namespace mcone::lp
