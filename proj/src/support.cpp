#include "mcone/support.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace mcone {

namespace {

const char* const kAxiomNames[] = {
    "effect",    "carries-norm", "minimal-carrier", "zero-iff-null",          "difference-below-sum",
    "orthogonal-implies-disjoint", "monotone",      "absorption",             "disjoint-iff-orthogonal",
};

class CachedSupport {
 public:
  CachedSupport(const PolyhedralCone& cone, const SupportMap& map) : cone_(cone), map_(map) {}

  const Effect& operator()(const RVector& z) {
    auto it = cache_.find(z);
    if (it == cache_.end()) it = cache_.emplace(z, map_(z)).first;
    return it->second;
  }

  bool ok(const RVector& z) { return is_effect(cone_, (*this)(z)); }

 private:
  const PolyhedralCone& cone_;
  const SupportMap& map_;
  std::map<RVector, Effect> cache_;
};

std::string describe(const RVector& v) { return "(" + to_string(v) + ")"; }

}  // namespace

bool SupportFamilyReport::passed() const {
  for (const auto& a : axioms)
    if (!a.passed()) return false;
  return true;
}

const AxiomCheck& SupportFamilyReport::axiom(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return a;
  throw InputError("unknown axiom: " + name);
}

std::string SupportFamilyReport::summary() const {
  std::ostringstream os;
  os << "support family on " << probes << " probes, " << pairs << " pairs: "
     << (passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& a : axioms) {
    os << "  " << a.name << ": " << (a.passed() ? "pass" : "FAIL") << " (" << a.checks
       << " checks)\n";
    for (const auto& f : a.failures) os << "    " << f << "\n";
  }
  if (!note.empty()) os << "  note: " << note << "\n";
  return os.str();
}

std::vector<CarrierBound> extreme_carriers(const PolyhedralCone& cone, const RVector& w) {
  cone.require_valid();
  cone.require_dimension(w, "extreme_carriers");
  const std::size_t n = cone.dimension();
  const std::size_t k = cone.num_generators();
  const auto& charges = cone.validation().charge_on_generators;

  // Variables a+ (n), a- (n), t (k), s (k) with a(r_i) = t_i, a(r_i) + s_i = e(r_i),
  // a(w) = e(w).
  const std::size_t vars = 2 * n + 2 * k;
  lp::LinearProgram prog;
  prog.constraints = Matrix(2 * k + 1, vars);
  prog.rhs = zeros(2 * k + 1);
  auto put = [&](std::size_t row, const RVector& v) {
    for (std::size_t j = 0; j < n; ++j) {
      prog.constraints(row, j) = v[j];
      prog.constraints(row, n + j) = -v[j];
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    put(i, cone.generator(i));
    prog.constraints(i, 2 * n + i) = -1;
    put(k + i, cone.generator(i));
    prog.constraints(k + i, 2 * n + k + i) = 1;
    prog.rhs[k + i] = charges[i];
  }
  put(2 * k, w);
  prog.rhs[2 * k] = cone.charge_of(w);

  std::vector<CarrierBound> out;
  for (std::size_t i = 0; i < k; ++i) {
    prog.objective = zeros(vars);
    prog.objective[2 * n + i] = 1;
    const auto sol = lp::solve(prog);
    if (!sol.optimal()) throw std::logic_error("extreme_carriers: the unit effect must be feasible");
    Effect a{zeros(n)};
    for (std::size_t j = 0; j < n; ++j) a.functional[j] = sol.point[j] - sol.point[n + j];
    out.push_back({sol.objective_value, std::move(a)});
  }
  return out;
}

SupportFamilyReport verify_support_family(const PolyhedralCone& cone, const SupportMap& support,
                                          const std::vector<RVector>& probes) {
  cone.require_valid();
  if (probes.empty()) throw InputError("verify_support_family: probes must be nonempty");
  for (const auto& z : probes) cone.require_dimension(z, "verify_support_family");

  SupportFamilyReport report;
  for (const char* name : kAxiomNames) report.axioms.push_back({name, 0, {}});
  auto axiom = [&](const char* name) -> AxiomCheck& {
    for (auto& a : report.axioms)
      if (a.name == name) return a;
    throw std::logic_error("unregistered axiom");
  };
  auto check = [&](const char* name, bool ok, const std::string& what) {
    AxiomCheck& a = axiom(name);
    ++a.checks;
    if (!ok) a.failures.push_back(what);
  };

  CachedSupport s(cone, support);

  std::vector<RVector> all = probes;
  all.push_back(zeros(cone.dimension()));

  for (const auto& z : all) {
    const Effect& sz = s(z);
    const bool effect = is_effect(cone, sz);
    check("effect", effect, "s" + describe(z) + " = " + describe(sz.functional) + " is not in [o,e]");
    check("zero-iff-null", is_zero(z) == is_zero(sz.functional),
          "z = " + describe(z) + " has support " + describe(sz.functional));
    if (!effect) continue;

    const Decomposition d = minimal_decomposition(cone, z);
    const RVector w = d.sum();
    const Rational norm = cone.charge_of(w);
    check("carries-norm", sz(w) == norm,
          "s" + describe(z) + "(z+ + z-) = " + to_string(sz(w)) + " but |z|_1 = " + to_string(norm));

    const auto bounds = extreme_carriers(cone, w);
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      check("minimal-carrier", sz(cone.generator(i)) <= bounds[i].min_value,
            "carrier " + describe(bounds[i].carrier.functional) + " of z = " + describe(z) +
                " is not above s_z at generator " + std::to_string(i));
    }
  }
  report.probes = all.size();

  std::vector<RVector> members;
  for (const auto& z : probes)
    if (cone_contains(cone, z)) members.push_back(z);

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      const RVector& x1 = members[i];
      const RVector& x2 = members[j];
      const RVector sum = x1 + x2;
      const RVector diff = x1 - x2;
      const std::string pair = "x1 = " + describe(x1) + ", x2 = " + describe(x2);
      ++report.pairs;

      for (const RVector* v : {&sum, &diff}) {
        check("effect", s.ok(*v), "s" + describe(*v) + " is not in [o,e]");
      }
      if (!s.ok(x1) || !s.ok(x2) || !s.ok(sum) || !s.ok(diff)) continue;
      const Effect& s1 = s(x1);
      const Effect& s2 = s(x2);
      const Effect& ssum = s(sum);
      const Effect& sdiff = s(diff);

      check("difference-below-sum", effect_leq(cone, sdiff, ssum), pair);

      const bool supports_orthogonal = effects_weakly_orthogonal(cone, s1, s2);
      if (supports_orthogonal) {
        check("orthogonal-implies-disjoint", effects_disjoint(cone, s1, s2), pair);
      }

      check("monotone", effect_leq(cone, s1, ssum), pair + " (x1 <= x1 + x2)");
      if (cone_contains(cone, x2 - x1)) check("monotone", effect_leq(cone, s1, s2), pair);

      check("absorption", effect_leq(cone, s1, s2) == (s2 == ssum), pair);

      const bool disjoint = disjointness_witness(cone, x1, x2).has_value();
      check("disjoint-iff-orthogonal", disjoint == supports_orthogonal, pair);
      if (supports_orthogonal) {
        check("disjoint-iff-orthogonal",
              effect_leq(cone, ssum, Effect{s1.functional + s2.functional}),
              pair + " (s_{x1+x2} <= s_x1 + s_x2)");
      }
    }
  }

  report.note =
      "minimal-carrier compares s_z with the extreme carriers minimizing a(r_i) per generator; "
      "this is exact for polyhedral effect intervals. Decomposition-dependent axioms use the "
      "decomposition returned by minimal_decomposition.";
  return report;
}

}  // namespace mcone
