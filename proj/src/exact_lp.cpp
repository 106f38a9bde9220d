#include "mcone/exact_lp.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace mcone::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "Optimal";
    case Status::Infeasible: return "Infeasible";
    case Status::Unbounded: return "Unbounded";
  }
  return "?";
}

namespace {

// Upper bound on bases visited while walking the optimal face.
constexpr std::size_t kMaxFaceBases = 20000;

void check_dimensions(const LinearProgram& lp) {
  if (lp.rhs.size() != lp.constraints.rows())
    throw InputError("lp: rhs length does not match constraint rows");
  if (lp.objective.size() != lp.constraints.cols())
    throw InputError("lp: objective length does not match constraint columns");
}

// Columns [0, n) are structural, [n, n + m) artificial, column n + m is the
// right-hand side. The cost row stores reduced costs and, in its last slot,
// minus the current objective value.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : m_(lp.num_rows()), n_(lp.num_vars()), width_(n_ + m_ + 1), sign_(m_, 1) {
    rows_.assign(m_, RVector(width_, Rational(0)));
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.rhs[i] < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) {
        const Rational& a = lp.constraints(i, j);
        if (a != 0) rows_[i][j] = sign_[i] * a;
      }
      rows_[i][n_ + i] = 1;
      rows_[i][rhs()] = sign_[i] * lp.rhs[i];
      basis_.push_back(n_ + i);
    }
  }

  std::size_t rhs() const { return width_ - 1; }
  bool is_artificial(std::size_t j) const { return j >= n_ && j < n_ + m_; }

  void set_costs(const RVector& structural_costs, bool phase_one) {
    costs_.assign(n_ + m_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) costs_[j] = phase_one ? Rational(0) : structural_costs[j];
    if (phase_one)
      for (std::size_t i = 0; i < m_; ++i) costs_[n_ + i] = 1;
    reduced_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < n_ + m_; ++j) reduced_[j] = costs_[j];
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = costs_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (rows_[r][j] != 0) reduced_[j] -= cb * rows_[r][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    RVector& prow = rows_[r];
    const Rational p = prow[j];
    for (auto& v : prow)
      if (v != 0) v /= p;
    auto eliminate = [&](RVector& row) {
      if (row[j] == 0) return;
      const Rational f = row[j];
      for (std::size_t c = 0; c < width_; ++c) {
        if (prow[c] != 0) row[c] -= f * prow[c];
      }
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(reduced_);
    basis_[r] = j;
  }

  // Smallest-index structural column with negative reduced cost.
  std::optional<std::size_t> entering() const {
    for (std::size_t j = 0; j < n_; ++j)
      if (reduced_[j] < 0) return j;
    return std::nullopt;
  }

  // Rows attaining the minimum ratio for column j (empty if unbounded).
  std::vector<std::size_t> min_ratio_rows(std::size_t j) const {
    std::vector<std::size_t> best;
    Rational best_ratio;
    for (std::size_t r = 0; r < m_; ++r) {
      if (rows_[r][j] <= 0) continue;
      Rational ratio = rows_[r][rhs()] / rows_[r][j];
      if (best.empty() || ratio < best_ratio) {
        best_ratio = std::move(ratio);
        best = {r};
      } else if (ratio == best_ratio) {
        best.push_back(r);
      }
    }
    return best;
  }

  // Bland leaving rule: among tied rows, the smallest basic variable index.
  std::optional<std::size_t> leaving(std::size_t j) const {
    const auto rows = min_ratio_rows(j);
    if (rows.empty()) return std::nullopt;
    return *std::min_element(rows.begin(), rows.end(),
                             [&](std::size_t a, std::size_t b) { return basis_[a] < basis_[b]; });
  }

  // Runs Bland pivots to optimality. Returns the unbounded column if any.
  std::optional<std::size_t> run() {
    while (auto j = entering()) {
      auto r = leaving(*j);
      if (!r) return *j;
      pivot(*r, *j);
    }
    return std::nullopt;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[r][j] != 0) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  Rational objective_value() const { return -reduced_[rhs()]; }

  RVector point() const {
    RVector x = zeros(n_);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = rows_[r][rhs()];
    return x;
  }

  // y for the original (unflipped) rows, recovered from the artificial
  // columns of the reduced cost row: d_{n+i} = c_{n+i} - yhat_i.
  RVector duals() const {
    RVector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational yhat = costs_[n_ + i] - reduced_[n_ + i];
      y[i] = sign_[i] * yhat;
    }
    return y;
  }

  RVector ray(std::size_t j) const {
    RVector d = zeros(n_);
    d[j] = 1;
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) d[basis_[r]] = -rows_[r][j];
    return d;
  }

  std::vector<std::size_t> structural_basis() const {
    std::vector<std::size_t> b;
    for (auto j : basis_)
      if (j < n_) b.push_back(j);
    std::sort(b.begin(), b.end());
    return b;
  }

  std::vector<std::size_t> sorted_basis() const {
    auto b = basis_;
    std::sort(b.begin(), b.end());
    return b;
  }

  const Rational& reduced_cost(std::size_t j) const { return reduced_[j]; }
  std::size_t num_structural() const { return n_; }
  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<int> sign_;
  std::vector<RVector> rows_;
  std::vector<std::size_t> basis_;
  RVector costs_;
  RVector reduced_;
};

struct Run {
  Solution solution;
  std::optional<Tableau> tableau;
};

Run run_simplex(const LinearProgram& lp) {
  check_dimensions(lp);
  Run out;
  Solution& sol = out.solution;
  Tableau t(lp);

  t.set_costs(lp.objective, true);
  t.run();  // phase one is bounded below by zero
  if (t.objective_value() > 0) {
    sol.status = Status::Infeasible;
    sol.dual = -t.duals();
    return out;
  }
  t.drive_out_artificials();

  t.set_costs(lp.objective, false);
  if (auto j = t.run()) {
    sol.status = Status::Unbounded;
    sol.ray = t.ray(*j);
    return out;
  }
  sol.status = Status::Optimal;
  sol.point = t.point();
  sol.objective_value = t.objective_value();
  sol.basis = t.structural_basis();
  sol.dual = t.duals();
  out.tableau = std::move(t);
  return out;
}

}  // namespace

Solution solve(const LinearProgram& lp) { return run_simplex(lp).solution; }

std::vector<RVector> enumerate_optimal_vertices(const LinearProgram& lp, const Solution& solution,
                                                std::size_t max_count) {
  if (!solution.optimal()) throw InputError("enumerate_optimal_vertices: solution is not optimal");
  if (max_count == 0) throw InputError("enumerate_optimal_vertices: max_count must be positive");
  Run run = run_simplex(lp);
  if (!run.solution.optimal() || run.solution.objective_value != solution.objective_value)
    throw InputError("enumerate_optimal_vertices: solution does not belong to this program");

  std::vector<RVector> vertices;
  std::set<RVector> seen_vertices;
  std::set<std::vector<std::size_t>> seen_bases;
  std::deque<Tableau> queue;

  auto record = [&](const Tableau& t) {
    RVector x = t.point();
    if (seen_vertices.insert(x).second) vertices.push_back(std::move(x));
  };

  seen_bases.insert(run.tableau->sorted_basis());
  record(*run.tableau);
  queue.push_back(std::move(*run.tableau));

  while (!queue.empty() && vertices.size() < max_count && seen_bases.size() < kMaxFaceBases) {
    Tableau t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < t.num_structural(); ++j) {
      if (t.is_basic(j) || t.reduced_cost(j) != 0) continue;
      for (std::size_t r : t.min_ratio_rows(j)) {
        Tableau next = t;
        next.pivot(r, j);
        if (!seen_bases.insert(next.sorted_basis()).second) continue;
        record(next);
        if (vertices.size() >= max_count) break;
        queue.push_back(std::move(next));
      }
      if (vertices.size() >= max_count) break;
    }
  }

  for (const auto& x : vertices) {
    if (!is_primal_feasible(lp, x) || dot(lp.objective, x) != solution.objective_value)
      throw std::logic_error("enumerate_optimal_vertices: produced a non-optimal point");
  }
  return vertices;
}

bool is_primal_feasible(const LinearProgram& lp, const RVector& x) {
  if (x.size() != lp.num_vars()) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  return lp.constraints * x == lp.rhs;
}

bool certifies_optimality(const LinearProgram& lp, const Solution& solution) {
  if (!solution.optimal()) return false;
  if (!is_primal_feasible(lp, solution.point)) return false;
  if (dot(lp.objective, solution.point) != solution.objective_value) return false;
  if (solution.dual.size() != lp.num_rows()) return false;
  const RVector aty = lp.constraints.transpose() * solution.dual;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    const Rational reduced = lp.objective[j] - aty[j];
    if (reduced < 0) return false;
    if (reduced != 0 && solution.point[j] != 0) return false;
  }
  return dot(lp.rhs, solution.dual) == solution.objective_value;
}

bool certifies_infeasibility(const LinearProgram& lp, const RVector& farkas) {
  if (farkas.size() != lp.num_rows()) return false;
  const RVector aty = lp.constraints.transpose() * farkas;
  for (const auto& v : aty)
    if (v < 0) return false;
  return dot(lp.rhs, farkas) < 0;
}

}  // namespace mcone::lp
