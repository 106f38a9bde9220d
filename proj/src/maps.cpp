#include "mcone/maps.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mcone {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Dominates: return "Dominates";
    case Ordering::DominatedBy: return "DominatedBy";
    case Ordering::Equal: return "Equal";
    case Ordering::Incomparable: return "Incomparable";
    case Ordering::UndecidedAtResolution: return "UndecidedAtResolution";
  }
  return "?";
}

namespace {

RVector normalize(const PolyhedralCone& cone, const RVector& v, const char* what) {
  cone.require_dimension(v, what);
  if (is_zero(v)) throw InputError(std::string(what) + ": directions must be nonzero");
  return Rational(1) / joint_decomposition_cost(cone, v) * v;
}

// Bisection depth for intervals whose shape cannot be pinned down directly.
constexpr int kRefineDepth = 4;

// Breakpoints (t, value) of a piecewise-linear function, ascending in t.
using Polyline = std::vector<std::pair<Rational, Rational>>;

// Both distances are convex and piecewise linear in t along alpha = t,
// beta = 1 - t. Evaluations are cached and every sample is checked for
// strict evidence either way.
class SegmentComparer {
 public:
  SegmentComparer(const DirectionDistance& first, const DirectionDistance& second,
                  MixingComparison& out)
      : first_(first), second_(second), out_(out) {}

  const DistanceSample& at(const Rational& t) {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    const Rational s = 1 - t;
    DistanceSample sample{t, first_(t, s), second_(t, s)};
    out_.evaluations += 2;
    if (sample.first > sample.second && !out_.greater_at) out_.greater_at = sample;
    if (sample.first < sample.second && !out_.less_at) out_.less_at = sample;
    return cache_.emplace(t, std::move(sample)).first->second;
  }

  // The exact shape of one distance on [a, b]. A convex function that agrees
  // with a line at three points is affine between the outer two, so a
  // midpoint on the chord proves one piece, and a kink candidate t* where
  // the end secants meet and the function agrees with them proves two.
  std::optional<Polyline> shape(bool first, const Rational& a, const Rational& b, int depth) {
    auto f = [&](const Rational& t) -> Rational {
      const auto& s = at(t);
      return first ? s.first : s.second;
    };
    const Rational fa = f(a), fb = f(b), c = (a + b) / 2;
    if (2 * f(c) == fa + fb) return Polyline{{a, fa}, {b, fb}};
    const Rational h = (b - a) / 4;
    const Rational left_slope = (f(a + h) - fa) / h;
    const Rational right_slope = (fb - f(b - h)) / h;
    if (left_slope != right_slope) {
      const Rational knot = (fb - fa - right_slope * b + left_slope * a) / (left_slope - right_slope);
      if (a + h <= knot && knot <= b - h) {
        const Rational value = fa + left_slope * (knot - a);
        if (f(knot) == value) return Polyline{{a, fa}, {knot, value}, {b, fb}};
      }
    }
    if (depth == 0) return std::nullopt;
    auto lower = shape(first, a, c, depth - 1);
    if (!lower) return std::nullopt;
    auto upper = shape(first, c, b, depth - 1);
    if (!upper) return std::nullopt;
    lower->insert(lower->end(), upper->begin() + 1, upper->end());
    return lower;
  }

  // Compares the two distances exactly on [a, b]; false if either shape is
  // out of reach. Differences between two polylines change sign only at
  // breakpoints, and those are sampled.
  bool settle(const Rational& a, const Rational& b) {
    const auto f = shape(true, a, b, kRefineDepth);
    if (!f) return false;
    const auto g = shape(false, a, b, kRefineDepth);
    if (!g) return false;
    for (const auto* line : {&*f, &*g})
      for (const auto& [t, v] : *line) at(t);
    return true;
  }

  // Proves upper >= lower on [a, b] without the full shape: on each half,
  // the secant through the midpoint bounds `upper` from below while `lower`
  // stays below its chord.
  bool certify(bool first_dominates, const Rational& a, const Rational& b, int depth) {
    auto upper = [&](const DistanceSample& s) -> const Rational& {
      return first_dominates ? s.first : s.second;
    };
    auto lower = [&](const DistanceSample& s) -> const Rational& {
      return first_dominates ? s.second : s.first;
    };
    const Rational c = (a + b) / 2;
    const Rational ua = upper(at(a)), la = lower(at(a));
    const Rational ub = upper(at(b)), lb = lower(at(b));
    const Rational uc = upper(at(c)), lc = lower(at(c));
    if (ua < la || ub < lb || uc < lc) return false;
    if (2 * uc == ua + ub) return true;  // upper is affine here, upper - lower concave

    bool left = 2 * uc - ub >= la;
    bool right = 2 * uc - ua >= lb;
    if (!left && depth > 0) left = certify(first_dominates, a, c, depth - 1);
    if (!left) return false;
    if (!right && depth > 0) right = certify(first_dominates, c, b, depth - 1);
    return right;
  }

 private:
  const DirectionDistance& first_;
  const DirectionDistance& second_;
  MixingComparison& out_;
  std::map<Rational, DistanceSample> cache_;
};

void require_member(const PolyhedralCone& cone, const RVector& v, const char* what) {
  cone.require_dimension(v, what);
  if (!cone_contains(cone, v)) throw InputError(std::string(what) + ": vector is not in the cone");
}

}  // namespace

DirectionDistance::DirectionDistance(PolyhedralCone cone, const RVector& x, const RVector& y)
    : cone_(std::move(cone)) {
  cone_.require_valid();
  x0_ = normalize(cone_, x, "DirectionDistance");
  y0_ = normalize(cone_, y, "DirectionDistance");
}

Rational DirectionDistance::operator()(const Rational& alpha, const Rational& beta) const {
  if (alpha < 0 || beta < 0) throw InputError("direction distance: alpha and beta must be >= 0");
  // The joint decomposition optimum is the base norm.
  return joint_decomposition_cost(cone_, alpha * x0_ - beta * y0_);
}

MixingComparison compare_mixing_distance(const PolyhedralCone& cone, const RVector& x,
                                         const RVector& y, const RVector& x2, const RVector& y2,
                                         std::size_t grid_resolution) {
  if (grid_resolution == 0) throw InputError("compare_mixing_distance: grid resolution must be positive");
  for (const RVector* v : {&x, &y, &x2, &y2}) require_member(cone, *v, "compare_mixing_distance");
  const DirectionDistance first(cone, x, y);
  const DirectionDistance second(cone, x2, y2);

  MixingComparison out;
  SegmentComparer cmp(first, second, out);
  const std::size_t m = grid_resolution;
  for (std::size_t i = 0; i <= 2 * m; ++i) cmp.at(Rational(i, 2 * m));

  auto decided = [&] { return out.greater_at && out.less_at; };
  if (first.x0() == second.x0() && first.y0() == second.y0()) {
    out.verdict = Ordering::Equal;
    return out;
  }
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < m && !decided(); ++i)
    if (!cmp.settle(Rational(i, m), Rational(i + 1, m))) open.push_back(i);
  if (decided()) {
    out.verdict = Ordering::Incomparable;
    return out;
  }
  // Intervals whose shape stayed out of reach only admit one-sided proofs.
  auto certified = [&](bool first_dominates) {
    for (std::size_t i : open)
      if (!cmp.certify(first_dominates, Rational(i, m), Rational(i + 1, m), kRefineDepth)) return false;
    return true;
  };
  if (out.greater_at) {
    out.verdict = certified(true) ? Ordering::Dominates : Ordering::UndecidedAtResolution;
  } else if (out.less_at) {
    out.verdict = certified(false) ? Ordering::DominatedBy : Ordering::UndecidedAtResolution;
  } else {
    out.verdict = certified(true) && certified(false) ? Ordering::Equal : Ordering::UndecidedAtResolution;
  }
  if (decided()) out.verdict = Ordering::Incomparable;
  return out;
}

MapAudit audit_map(const PolyhedralCone& cone, const LinearMap& phi,
                   const std::vector<RVector>& samples) {
  cone.require_valid();
  const std::size_t n = cone.dimension();
  if (phi.matrix.rows() != n || phi.matrix.cols() != n)
    throw InputError("audit_map: map must be " + std::to_string(n) + "x" + std::to_string(n));
  for (const auto& z : samples) cone.require_dimension(z, "audit_map");

  MapAudit audit;
  audit.positive = true;
  for (const auto& r : cone.generators()) {
    if (!cone_contains(cone, phi(r))) {
      audit.positive = false;
      break;
    }
  }
  audit.charge_preserving = phi.matrix.transpose() * cone.charge() == cone.charge();

  for (const auto& z : samples) {
    const Rational before = one_norm(cone, z);
    const Rational after = one_norm(cone, phi(z));
    ++audit.contraction.checked;
    ++audit.isometry.checked;
    if (after > before) audit.contraction.holds = false;
    if (after != before) audit.isometry.holds = false;
  }

  auto check_pair = [&](const RVector& p, const RVector& q) {
    ++audit.orthogonality_preserving.checked;
    const RVector fp = phi(p);
    const RVector fq = phi(q);
    const bool ok = !is_zero(fp) && !is_zero(fq) && cone_contains(cone, fp) &&
                    cone_contains(cone, fq) && are_orthogonal(cone, fp, fq);
    if (!ok) audit.orthogonality_preserving.holds = false;
  };
  for (const auto& z : samples) {
    const Decomposition d = minimal_decomposition(cone, z);
    if (!is_zero(d.z_plus) && !is_zero(d.z_minus)) check_pair(d.z_plus, d.z_minus);
  }
  const auto& gens = cone.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (are_orthogonal(cone, gens[i], gens[j])) check_pair(gens[i], gens[j]);
  return audit;
}

LinearMap construct_transition_map(const PolyhedralCone& cone, const RVector& x, const RVector& y,
                                   const RVector& x2, const RVector& y2) {
  cone.require_valid();
  for (const RVector* v : {&x, &y, &x2, &y2}) {
    require_member(cone, *v, "construct_transition_map");
    if (cone.charge_of(*v) != 1)
      throw InputError("construct_transition_map: states must have charge 1");
  }
  const auto witness = disjointness_witness(cone, x, y);
  if (!witness) throw InputError("construct_transition_map: x and y are not orthogonal");
  const RVector& ax = witness->functional;
  const RVector ay = cone.charge() - ax;

  const std::size_t n = cone.dimension();
  LinearMap phi{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) phi.matrix(i, j) = x2[i] * ax[j] + y2[i] * ay[j];

  if (phi(x) != x2 || phi(y) != y2)
    throw std::logic_error("construct_transition_map: map does not send (x, y) to (x', y')");
  return phi;
}

}  // namespace mcone
