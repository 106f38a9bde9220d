#include "mcone/commands.hpp"

#include <doctest.h>

#include <map>
#include <sstream>

using namespace mcone;
using namespace mcone::cli;

namespace {

ConeDocument fixture(const std::string& name) { return load_document(MCONE_FIXTURES "/" + name); }

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    REQUIRE(eq != std::string::npos);
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("validate") {
  std::ostringstream out;
  CHECK(cmd_validate(fixture("square_base.cone"), OutputFormat::KeyValue, out) == kExitOk);
  CHECK(parse_kv(out.str())["valid"] == "true");

  auto bad = fixture("orthant2.cone");
  bad.charge = {1, 0};
  std::ostringstream out2;
  CHECK(cmd_validate(bad, OutputFormat::KeyValue, out2) == kExitFailure);
  CHECK(parse_kv(out2.str())["valid"] == "false");
}

TEST_CASE("decompose") {
  const auto sq = fixture("square_base.cone");
  std::ostringstream out;
  CHECK(cmd_decompose(sq, resolve_vector(sq, "z"), {true, 16}, OutputFormat::KeyValue, out) ==
        kExitOk);
  auto kv = parse_kv(out.str());
  CHECK(kv["uniqueness"] == "NON-UNIQUE");
  CHECK(kv["one_norm"] == "1");
  CHECK(kv["e_plus"] == "1/2");
  CHECK(std::stoi(kv["vertex_count"]) >= 2);

  const auto orth = fixture("orthant2.cone");
  std::ostringstream out2;
  cmd_decompose(orth, resolve_vector(orth, "3,-2"), {true, 16}, OutputFormat::KeyValue, out2);
  kv = parse_kv(out2.str());
  CHECK(kv["uniqueness"] == "UNIQUE");
  CHECK(kv["z_plus"] == "(3,0)");
  CHECK(kv["z_minus"] == "(0,2)");
  CHECK(kv["one_norm"] == "5");

  std::ostringstream out3;
  cmd_decompose(orth, resolve_vector(orth, "diag"), {}, OutputFormat::KeyValue, out3);
  kv = parse_kv(out3.str());
  CHECK(kv["z_plus"] == "(1,1)");
  CHECK(kv["one_norm"] == "2");

  CHECK_THROWS_AS(resolve_vector(orth, "1,2,3"), InputError);
  CHECK_THROWS_AS(resolve_vector(orth, "nope"), InputError);
}

TEST_CASE("orthogonal") {
  const auto orth = fixture("orthant2.cone");
  std::ostringstream out;
  CHECK(cmd_orthogonal(orth, {1, 0}, {0, 1}, true, OutputFormat::KeyValue, out) == kExitOk);
  auto kv = parse_kv(out.str());
  CHECK(kv["verdict"] == "ORTHOGONAL");
  CHECK(kv["witness"] == "(1,0)");
  CHECK(kv["self_check"] == "agree");

  std::ostringstream out2;
  CHECK(cmd_orthogonal(orth, {1, 1}, {0, 1}, true, OutputFormat::KeyValue, out2) == kExitOk);
  kv = parse_kv(out2.str());
  CHECK(kv["verdict"] == "NOT-ORTHOGONAL");
  CHECK(kv["witness"] == "NO-WITNESS");

  const auto sq = fixture("square_base.cone");
  std::ostringstream out3;
  CHECK(cmd_orthogonal(sq, resolve_vector(sq, "x"), resolve_vector(sq, "y"), true,
                       OutputFormat::KeyValue, out3) == kExitOk);
  CHECK(parse_kv(out3.str())["verdict"] == "ORTHOGONAL");

  std::ostringstream out4;
  CHECK_THROWS_AS(cmd_orthogonal(orth, {1, -1}, {0, 1}, false, OutputFormat::KeyValue, out4),
                  InputError);
}

TEST_CASE("mixdist") {
  const auto orth = fixture("orthant2.cone");
  std::ostringstream out;
  CHECK(cmd_mixdist(orth, {1, 0}, {0, 1}, {2, std::nullopt}, OutputFormat::KeyValue, out) == kExitOk);
  const auto kv = parse_kv(out.str());
  CHECK(kv.at("row.0") == "0,0,0");
  CHECK(kv.at("row.4") == "1/2,1/2,1");
  CHECK(kv.at("row.8") == "1,1,2");

  std::ostringstream same;
  cmd_mixdist(orth, {1, 1}, {1, 1}, {2, std::nullopt}, OutputFormat::KeyValue, same);
  CHECK(parse_kv(same.str()).at("row.2") == "0,1,1");
  CHECK(parse_kv(same.str()).at("row.8") == "1,1,0");

  std::ostringstream cmp;
  MixdistOptions options;
  options.compare = std::make_pair(RVector{1, 1}, RVector{1, 1});
  cmd_mixdist(orth, {1, 0}, {0, 1}, options, OutputFormat::KeyValue, cmp);
  const auto ck = parse_kv(cmp.str());
  CHECK(ck.at("verdict") == "Dominates");
  CHECK(ck.at("grid") == "64");
  CHECK(ck.count("greater_at.t") == 1);
}

TEST_CASE("audit-map") {
  const auto orth = fixture("orthant2.cone");
  std::ostringstream out;
  CHECK(cmd_audit_map(orth, "mix", {}, OutputFormat::KeyValue, out) == kExitOk);
  auto kv = parse_kv(out.str());
  CHECK(kv["endomorphism"] == "true");
  CHECK(kv["isometry_on_samples"] == "false");

  std::ostringstream out2;
  CHECK(cmd_audit_map(orth, "skew", {}, OutputFormat::KeyValue, out2) == kExitFailure);
  CHECK(parse_kv(out2.str())["positive"] == "false");

  std::ostringstream out3;
  CHECK(cmd_audit_map(orth, "identity", {}, OutputFormat::KeyValue, out3) == kExitOk);
  kv = parse_kv(out3.str());
  CHECK(kv["isometry_on_samples"] == "true");
  CHECK(kv["orthogonality_preserving_on_samples"] == "true");

  std::ostringstream out4;
  CHECK_THROWS_AS(cmd_audit_map(orth, "missing", {}, OutputFormat::KeyValue, out4), InputError);

  // Deterministic for a fixed seed.
  std::ostringstream a, b;
  cmd_audit_map(orth, "mix", {8, 5}, OutputFormat::KeyValue, a);
  cmd_audit_map(orth, "mix", {8, 5}, OutputFormat::KeyValue, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("demo") {
  std::ostringstream out;
  CHECK(cmd_demo(std::nullopt, OutputFormat::KeyValue, out) == kExitOk);
  const auto kv = parse_kv(out.str());
  CHECK(kv.at("result") == "PASS");
  bool saw_outside = false;
  for (const auto& [k, v] : kv) {
    if (k.rfind("check.", 0) == 0) CHECK_MESSAGE(v == "PASS", k);
    if (k.find("alpha:2") != std::string::npos) saw_outside = true;
  }
  CHECK(saw_outside);

  std::ostringstream bad;
  CHECK(cmd_demo(fixture("square_bad_charge.cone"), OutputFormat::KeyValue, bad) == kExitFailure);
  CHECK(parse_kv(bad.str()).at("result") == "FAIL");

  std::ostringstream human;
  cmd_demo(fixture("square_base.cone"), OutputFormat::Human, human);
  CHECK(human.str().find("PASS") != std::string::npos);
}
