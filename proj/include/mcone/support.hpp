#pragma once

#include "mcone/cone.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mcone {

using SupportMap = std::function<Effect(const RVector&)>;

struct AxiomCheck {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Result of checking a candidate support map on a probe set.
///
/// Axioms on every probe z (with z+ - z- the decomposition returned by
/// minimal_decomposition and w = z+ + z-):
///   effect              s_z lies in [o, e]
///   carries-norm        s_z(w) = |z|_1
///   minimal-carrier     s_z <= a for every effect a with a(w) = |z|_1
///   zero-iff-null       z = 0 exactly when s_z = o
/// and on every ordered pair (x1, x2) of distinct cone-member probes:
///   difference-below-sum         s_{x1-x2} <= s_{x1+x2}
///   orthogonal-implies-disjoint  s_x1 + s_x2 <= e  implies  s_x1 ^ s_x2 = o
///   monotone                     x1 <= x2 implies s_x1 <= s_x2 (also x1 <= x1 + x2)
///   absorption                   s_x1 <= s_x2  iff  s_x2 = s_{x1+x2}
///   disjoint-iff-orthogonal      x1, x2 disjoint iff s_x1 + s_x2 <= e, and then
///                                s_{x1+x2} <= s_x1 + s_x2
///
/// minimal-carrier is decided by one program per generator r_i, minimizing
/// a(r_i) over carriers a of w. These extreme carriers bound every carrier
/// from below generator-wise, so the check is exact for polyhedral cones.
struct SupportFamilyReport {
  std::vector<AxiomCheck> axioms;
  std::size_t probes = 0;
  std::size_t pairs = 0;
  std::string note;

  bool passed() const;
  const AxiomCheck& axiom(const std::string& name) const;
  std::string summary() const;
};

SupportFamilyReport verify_support_family(const PolyhedralCone& cone, const SupportMap& support,
                                          const std::vector<RVector>& probes);

/// For each generator r_i, the least value a(r_i) over effects a with
/// a(w) = e(w), together with an extreme effect attaining it.
struct CarrierBound {
  Rational min_value;
  Effect carrier;
};
std::vector<CarrierBound> extreme_carriers(const PolyhedralCone& cone, const RVector& w);

}  // namespace mcone
