#include "mcone/commands.hpp"

#include "mcone/instances.hpp"
#include "mcone/maps.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

namespace mcone::cli {

namespace {

class Printer {
 public:
  Printer(OutputFormat format, std::ostream& out) : format_(format), out_(out) {}

  void field(std::string_view key, std::string_view value) {
    if (format_ == OutputFormat::KeyValue) {
      out_ << key << '=' << value << '\n';
    } else {
      out_ << std::left << std::setw(36) << (std::string(key) + ":") << ' ' << value << '\n';
    }
  }
  void field(std::string_view key, const char* value) { field(key, std::string_view(value)); }
  void field(std::string_view key, const std::string& value) { field(key, std::string_view(value)); }
  void field(std::string_view key, const Rational& v) { field(key, v.str()); }
  void field(std::string_view key, const RVector& v) { field(key, "(" + to_string(v) + ")"); }
  void field(std::string_view key, bool v) { field(key, v ? "true" : "false"); }
  void field(std::string_view key, std::size_t v) { field(key, std::to_string(v)); }

  // Human-only free text.
  void note(std::string_view text) {
    if (format_ == OutputFormat::Human) out_ << text << '\n';
  }

  bool kv() const { return format_ == OutputFormat::KeyValue; }

 private:
  OutputFormat format_;
  std::ostream& out_;
};

PolyhedralCone valid_cone(const ConeDocument& doc) {
  PolyhedralCone cone = doc.cone();
  cone.require_valid();
  return cone;
}

}  // namespace

RVector resolve_vector(const ConeDocument& doc, std::string_view arg) {
  if (const RVector* v = doc.find_vector(arg)) return *v;
  RVector v;
  try {
    v = parse_vector(arg);
  } catch (const InputError&) {
    throw InputError("'" + std::string(arg) + "' is neither a VEC name nor a rational vector");
  }
  if (v.size() != doc.dimension)
    throw InputError("vector '" + std::string(arg) + "' has length " + std::to_string(v.size()) +
                     ", expected " + std::to_string(doc.dimension));
  return v;
}

int cmd_validate(const ConeDocument& doc, OutputFormat format, std::ostream& out) {
  Printer p(format, out);
  const PolyhedralCone cone = doc.cone();
  const ConeValidation& v = cone.validation();
  p.field("dimension", v.dimension);
  p.field("generators", cone.num_generators());
  p.field("rank", v.rank);
  for (std::size_t i = 0; i < v.charge_on_generators.size(); ++i)
    p.field("charge." + std::to_string(i), v.charge_on_generators[i]);
  for (std::size_t i = 0; i < v.failures.size(); ++i) p.field("failure." + std::to_string(i), v.failures[i]);
  p.field("valid", v.valid());
  return v.valid() ? kExitOk : kExitFailure;
}

int cmd_decompose(const ConeDocument& doc, const RVector& z, const DecomposeOptions& options,
                  OutputFormat format, std::ostream& out) {
  const PolyhedralCone cone = valid_cone(doc);
  cone.require_dimension(z, "decompose");
  Printer p(format, out);
  const ChargeSplit split = charge_split(cone, z);
  const Decomposition d = minimal_decomposition(cone, z);
  p.field("z", z);
  p.field("e_plus", split.e_plus);
  p.field("e_minus", split.e_minus);
  p.field("one_norm", split.one_norm());
  p.field("z_plus", d.z_plus);
  p.field("z_minus", d.z_minus);
  if (options.all) {
    const auto all = all_minimal_decompositions(cone, z, options.max_count);
    p.field("uniqueness", all.non_unique ? "NON-UNIQUE" : "UNIQUE");
    p.field("vertex_count", all.decompositions.size());
    for (std::size_t i = 0; i < all.decompositions.size(); ++i) {
      const std::string key = "vertex." + std::to_string(i);
      p.field(key + ".z_plus", all.decompositions[i].z_plus);
      p.field(key + ".z_minus", all.decompositions[i].z_minus);
    }
    if (all.non_unique) p.note("the optimal face has dimension >= 1; listed vertices span it");
  }
  return kExitOk;
}

int cmd_orthogonal(const ConeDocument& doc, const RVector& x, const RVector& y, bool witness,
                   OutputFormat format, std::ostream& out) {
  const PolyhedralCone cone = valid_cone(doc);
  Printer p(format, out);
  const bool orthogonal = are_orthogonal(cone, x, y);
  const auto a = disjointness_witness(cone, x, y);
  p.field("verdict", orthogonal ? "ORTHOGONAL" : "NOT-ORTHOGONAL");
  if (witness) {
    if (a) {
      p.field("witness", a->functional);
      RVector on_generators;
      for (const auto& r : cone.generators()) on_generators.push_back((*a)(r));
      p.field("witness_on_generators", on_generators);
    } else {
      p.field("witness", "NO-WITNESS");
    }
  }
  const bool agree = orthogonal == a.has_value();
  p.field("self_check", agree ? "agree" : "DISAGREE");
  return agree ? kExitOk : kExitSelfCheck;
}

int cmd_mixdist(const ConeDocument& doc, const RVector& x, const RVector& y,
                const MixdistOptions& options, OutputFormat format, std::ostream& out) {
  const PolyhedralCone cone = valid_cone(doc);
  Printer p(format, out);
  if (options.compare) {
    const std::size_t m = options.grid.value_or(64);
    const auto& [x2, y2] = *options.compare;
    const MixingComparison c = compare_mixing_distance(cone, x, y, x2, y2, m);
    p.field("grid", m);
    p.field("verdict", to_string(c.verdict));
    p.field("evaluations", c.evaluations);
    auto cert = [&](const char* key, const std::optional<DistanceSample>& s) {
      if (!s) return;
      p.field(std::string(key) + ".t", s->t);
      p.field(std::string(key) + ".first", s->first);
      p.field(std::string(key) + ".second", s->second);
    };
    cert("greater_at", c.greater_at);
    cert("less_at", c.less_at);
    return kExitOk;
  }

  const std::size_t m = options.grid.value_or(4);
  if (m == 0) throw InputError("mixdist: grid must be positive");
  const DirectionDistance dd(cone, x, y);
  p.field("x0", dd.x0());
  p.field("y0", dd.y0());
  p.note("alpha        beta         distance");
  std::size_t row = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      const Rational alpha(i, m);
      const Rational beta(j, m);
      const Rational d = dd(alpha, beta);
      if (p.kv()) {
        p.field("row." + std::to_string(row), alpha.str() + "," + beta.str() + "," + d.str());
      } else {
        std::ostringstream line;
        line << std::left << std::setw(13) << alpha.str() << std::setw(13) << beta.str() << d.str();
        p.note(line.str());
      }
      ++row;
    }
  }
  return kExitOk;
}

int cmd_audit_map(const ConeDocument& doc, const std::string& map_name, const AuditOptions& options,
                  OutputFormat format, std::ostream& out) {
  const PolyhedralCone cone = valid_cone(doc);
  const Matrix* m = doc.find_map(map_name);
  if (!m) throw InputError("unknown map '" + map_name + "'");
  Sampler sampler(options.seed);
  std::vector<RVector> samples;
  for (std::size_t i = 0; i < options.samples; ++i) samples.push_back(sampler.space_element(cone));
  const MapAudit audit = audit_map(cone, LinearMap{*m}, samples);

  Printer p(format, out);
  p.field("map", map_name);
  p.field("positive", audit.positive);
  p.field("charge_preserving", audit.charge_preserving);
  p.field("contraction_on_samples", audit.contraction.holds);
  p.field("contraction_samples", audit.contraction.checked);
  p.field("isometry_on_samples", audit.isometry.holds);
  p.field("isometry_samples", audit.isometry.checked);
  p.field("orthogonality_preserving_on_samples", audit.orthogonality_preserving.holds);
  p.field("orthogonality_pairs", audit.orthogonality_preserving.checked);
  p.field("endomorphism", audit.endomorphism());
  return audit.endomorphism() ? kExitOk : kExitFailure;
}

int cmd_demo(const std::optional<ConeDocument>& doc, OutputFormat format, std::ostream& out) {
  Printer p(format, out);
  const PolyhedralCone reference = square_base_cone();
  bool all_pass = true;
  std::size_t index = 0;

  auto report = [&](const std::string& name, bool ok) {
    all_pass = all_pass && ok;
    if (p.kv()) {
      p.field("check." + std::to_string(index) + "." + name, ok ? "PASS" : "FAIL");
    } else {
      p.note(std::string(ok ? "PASS  " : "FAIL  ") + name);
    }
    ++index;
  };
  // Checks that need a valid cone fail rather than abort on an invalid one.
  auto guarded = [&](const std::string& name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const InputError&) {
      ok = false;
    }
    report(name, ok);
  };

  const PolyhedralCone cone = doc ? doc->cone() : reference;
  report("cone-validates", cone.is_valid());
  report("cone-is-square-base", cone == reference);

  const RVector z{1, 0, 0};
  guarded("joint-value-is-1", [&] { return joint_decomposition_cost(cone, z) == 1; });
  guarded("charge-split-is-1/2,1/2", [&] {
    const auto s = charge_split(cone, z);
    return s.e_plus == Rational(1, 2) && s.e_minus == Rational(1, 2);
  });

  const Rational half(1, 2);
  for (const Rational& alpha : {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)}) {
    const RVector x{1, alpha, 1};
    const RVector y{-1, alpha, 1};
    const Decomposition d{half * x, half * y};
    const std::string tag = "alpha:" + alpha.str();
    guarded("family-minimal[" + tag + "]", [&] { return is_minimal(cone, d, z); });
    guarded("family-orthogonal[" + tag + "]", [&] {
      return are_orthogonal(cone, x, y) && disjointness_witness(cone, x, y).has_value();
    });
  }

  guarded("non-unique-with-endpoints", [&] {
    const auto all = all_minimal_decompositions(cone, z, 16);
    const Decomposition lo{half * RVector{1, -1, 1}, half * RVector{-1, -1, 1}};
    const Decomposition hi{half * RVector{1, 1, 1}, half * RVector{-1, 1, 1}};
    bool has_lo = false, has_hi = false;
    for (const auto& d : all.decompositions) {
      has_lo = has_lo || d == lo;
      has_hi = has_hi || d == hi;
    }
    return all.non_unique && all.decompositions.size() >= 2 && has_lo && has_hi;
  });
  guarded("alpha:2-outside-family", [&] {
    return !cone_contains(cone, RVector{1, 2, 1}) && !cone_contains(cone, RVector{-1, 2, 1});
  });

  p.field("result", all_pass ? "PASS" : "FAIL");
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace mcone::cli
