#pragma once

#include "mcone/exact_lp.hpp"
#include "mcone/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mcone {

/// Outcome of checking the measure-cone postulates on a generator description.
struct ConeValidation {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  RVector charge_on_generators;
  std::vector<std::string> failures;

  bool valid() const { return failures.empty(); }
};

/// A polyhedral measure cone (V, V+, e) with V = Q^n, V+ the conic hull of
/// `generators` and e the functional x -> charge . x.
///
/// Construction only checks shapes; whether the triple is a measure cone is
/// recorded in validation(). Operations that need a measure cone throw
/// InputError on an invalid one.
class PolyhedralCone {
 public:
  PolyhedralCone(std::vector<RVector> generators, RVector charge);

  std::size_t dimension() const { return charge_.size(); }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<RVector>& generators() const { return generators_; }
  const RVector& generator(std::size_t i) const { return generators_[i]; }
  const RVector& charge() const { return charge_; }

  /// Columns are the generators (n x k).
  const Matrix& generator_matrix() const { return matrix_; }

  Rational charge_of(const RVector& z) const;

  const ConeValidation& validation() const { return validation_; }
  bool is_valid() const { return validation_.valid(); }

  void require_valid() const;
  void require_dimension(const RVector& z, const char* what) const;

  friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b) {
    return a.generators_ == b.generators_ && a.charge_ == b.charge_;
  }

 private:
  std::vector<RVector> generators_;
  RVector charge_;
  Matrix matrix_;
  ConeValidation validation_;
};

/// e+(z) and e-(z): least charges of a cone majorant of z and of a cone
/// element y with z + y in the cone.
struct ChargeSplit {
  Rational e_plus;
  Rational e_minus;

  Rational one_norm() const { return e_plus + e_minus; }
};

/// z = z_plus - z_minus with both parts in the cone.
struct Decomposition {
  RVector z_plus;
  RVector z_minus;

  RVector difference() const { return z_plus - z_minus; }
  RVector sum() const { return z_plus + z_minus; }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

/// Vertex decompositions of the optimal face of the joint minimal
/// decomposition program.
struct MinimalDecompositions {
  std::vector<Decomposition> decompositions;
  // True when at least two distinct minimal decompositions exist, so the
  // optimal face has dimension >= 1.
  bool non_unique = false;
  Rational one_norm;
};

/// A dual vector acting by the standard pairing. Membership in the effect
/// interval [o, e] is a property checked by is_effect, not a construction
/// invariant, so that verifiers can report non-effects.
struct Effect {
  RVector functional;

  Rational operator()(const RVector& z) const { return dot(functional, z); }
  friend bool operator==(const Effect&, const Effect&) = default;
};

ConeValidation cone_validate(const PolyhedralCone& cone);

bool cone_contains(const PolyhedralCone& cone, const RVector& z);

ChargeSplit charge_split(const PolyhedralCone& cone, const RVector& z);

Rational one_norm(const PolyhedralCone& cone, const RVector& z);

Decomposition minimal_decomposition(const PolyhedralCone& cone, const RVector& z);

/// Optimal value of the joint program min e(p) + e(q), p - q = z.
Rational joint_decomposition_cost(const PolyhedralCone& cone, const RVector& z);

MinimalDecompositions all_minimal_decompositions(const PolyhedralCone& cone, const RVector& z,
                                                 std::size_t max_count);

bool is_minimal(const PolyhedralCone& cone, const Decomposition& d, const RVector& z);

bool are_orthogonal(const PolyhedralCone& cone, const RVector& x, const RVector& y);

/// An effect a with a(x) = e(x) and a(y) = 0, if one exists. Among all
/// witnesses the one minimizing the sum of a over the generators is returned.
std::optional<Effect> disjointness_witness(const PolyhedralCone& cone, const RVector& x,
                                           const RVector& y);

// Effects.

bool is_effect(const PolyhedralCone& cone, const Effect& a);
Effect zero_effect(const PolyhedralCone& cone);
Effect unit_effect(const PolyhedralCone& cone);
Effect effect_complement(const PolyhedralCone& cone, const Effect& a);
bool effects_weakly_orthogonal(const PolyhedralCone& cone, const Effect& a, const Effect& b);

/// a <= b in the dual order: (b - a)(r) >= 0 on every generator.
bool effect_leq(const PolyhedralCone& cone, const Effect& a, const Effect& b);

/// a ^ b = o: no nonzero effect c lies below both a and b.
bool effects_disjoint(const PolyhedralCone& cone, const Effect& a, const Effect& b);

}  // namespace mcone
