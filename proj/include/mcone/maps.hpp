#pragma once

#include "mcone/cone.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mcone {

/// (alpha, beta) -> |alpha x0 - beta y0|_1 with x0, y0 the 1-norm
/// normalizations of two nonzero vectors.
class DirectionDistance {
 public:
  DirectionDistance(PolyhedralCone cone, const RVector& x, const RVector& y);

  Rational operator()(const Rational& alpha, const Rational& beta) const;

  const RVector& x0() const { return x0_; }
  const RVector& y0() const { return y0_; }
  const PolyhedralCone& cone() const { return cone_; }

 private:
  PolyhedralCone cone_;
  RVector x0_;
  RVector y0_;
};

enum class Ordering { Dominates, DominatedBy, Equal, Incomparable, UndecidedAtResolution };

const char* to_string(Ordering o);

/// A sample point t on the segment alpha = t, beta = 1 - t with both distances.
struct DistanceSample {
  Rational t;
  Rational first;
  Rational second;
};

struct MixingComparison {
  Ordering verdict = Ordering::UndecidedAtResolution;
  // A point where d[x/y] > d[x'/y'] and one where it is smaller, when found.
  std::optional<DistanceSample> greater_at;
  std::optional<DistanceSample> less_at;
  std::size_t evaluations = 0;
};

/// Compares d[x/y] with d[x'/y'] on the segment alpha + beta = 1 (which by
/// homogeneity decides the whole quadrant), sampled at t = i/(2m). Both
/// distances are convex and piecewise linear in t; on each interval
/// [i/m, (i+1)/m] their exact shape is reconstructed from a few samples and
/// every breakpoint is compared, so verdicts are exact whenever all shapes
/// are recovered. Intervals with too many kinks fall back to one-sided
/// convexity bounds, and UndecidedAtResolution is returned when those do
/// not settle the verdict. Strict differences are exact counterexamples.
MixingComparison compare_mixing_distance(const PolyhedralCone& cone, const RVector& x,
                                         const RVector& y, const RVector& x2, const RVector& y2,
                                         std::size_t grid_resolution = 64);

struct LinearMap {
  Matrix matrix;

  RVector operator()(const RVector& z) const { return matrix * z; }
};

struct SampleCheck {
  bool holds = true;
  std::size_t checked = 0;
};

struct MapAudit {
  bool positive = false;
  bool charge_preserving = false;
  // Evaluated on the provided samples only.
  SampleCheck contraction;
  SampleCheck isometry;
  SampleCheck orthogonality_preserving;

  bool endomorphism() const { return positive && charge_preserving; }
};

/// Positivity (generator images in the cone) and charge preservation
/// (e o phi = e) are decided exactly. Contraction and isometry are checked
/// on the samples; orthogonality preservation on the orthogonal pairs given
/// by the parts of each sample's minimal decomposition and by orthogonal
/// generator pairs.
MapAudit audit_map(const PolyhedralCone& cone, const LinearMap& phi,
                   const std::vector<RVector>& samples);

/// For x perpendicular to y in the base and any x', y' in the base, the map
/// z -> a_x(z) x' + (e - a_x)(z) y' with a_x a disjointness witness.
LinearMap construct_transition_map(const PolyhedralCone& cone, const RVector& x, const RVector& y,
                                   const RVector& x2, const RVector& y2);

}  // namespace mcone
