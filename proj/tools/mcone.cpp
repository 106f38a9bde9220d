// mcone: command-line front end for polyhedral measure cones.

#include "mcone/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace mcone;
using namespace mcone::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on polyhedral measure cones"};
  app.require_subcommand(1);

  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "kv"}))
      ->capture_default_str();

  std::string cone_file;
  auto add_cone = [&](CLI::App* cmd) {
    cmd->add_option("cone", cone_file, "Cone document")->required()->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "Check the measure-cone postulates");
  add_cone(validate);

  std::string z_arg;
  DecomposeOptions decompose_opts;
  auto* decompose = app.add_subcommand("decompose", "Charge split and minimal decomposition");
  add_cone(decompose);
  decompose->add_option("vector", z_arg, "VEC name or comma-separated rationals")->required();
  decompose->add_flag("--all", decompose_opts.all, "List vertices of the optimal face");
  decompose->add_option("--max-count", decompose_opts.max_count, "Vertex limit for --all")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string x_arg, y_arg;
  bool want_witness = false;
  auto* orthogonal = app.add_subcommand("orthogonal", "Base-norm orthogonality and disjointness");
  add_cone(orthogonal);
  orthogonal->add_option("x", x_arg)->required();
  orthogonal->add_option("y", y_arg)->required();
  orthogonal->add_flag("--witness", want_witness, "Print the separating effect");

  std::optional<std::size_t> grid;
  std::vector<std::string> compare_args;
  auto* mixdist = app.add_subcommand("mixdist", "Direction distance table or angle comparison");
  add_cone(mixdist);
  mixdist->add_option("x", x_arg)->required();
  mixdist->add_option("y", y_arg)->required();
  mixdist->add_option("--grid", grid, "Grid resolution (table default 4, comparison default 64)")
      ->check(CLI::PositiveNumber);
  mixdist->add_option("--compare", compare_args, "Second pair x' y'")->expected(2);

  std::string map_name;
  AuditOptions audit_opts;
  auto* audit = app.add_subcommand("audit-map", "Audit a MAP from the document");
  add_cone(audit);
  audit->add_option("map", map_name)->required();
  audit->add_option("--samples", audit_opts.samples)->capture_default_str();
  audit->add_option("--seed", audit_opts.seed)->capture_default_str();

  std::string demo_cone;
  auto* demo = app.add_subcommand("demo", "Square-base non-uniqueness reproduction");
  demo->add_option("--cone", demo_cone, "Cone document to run against (default: built-in)")
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  const OutputFormat format = format_name == "kv" ? OutputFormat::KeyValue : OutputFormat::Human;

  try {
    if (*demo) {
      std::optional<ConeDocument> doc;
      if (!demo_cone.empty()) doc = load_document(demo_cone);
      return cmd_demo(doc, format, std::cout);
    }
    const ConeDocument doc = load_document(cone_file);
    if (*validate) return cmd_validate(doc, format, std::cout);
    if (*decompose) return cmd_decompose(doc, resolve_vector(doc, z_arg), decompose_opts, format, std::cout);
    if (*orthogonal)
      return cmd_orthogonal(doc, resolve_vector(doc, x_arg), resolve_vector(doc, y_arg), want_witness,
                            format, std::cout);
    if (*mixdist) {
      MixdistOptions opts;
      opts.grid = grid;
      if (!compare_args.empty())
        opts.compare.emplace(resolve_vector(doc, compare_args[0]), resolve_vector(doc, compare_args[1]));
      return cmd_mixdist(doc, resolve_vector(doc, x_arg), resolve_vector(doc, y_arg), opts, format,
                         std::cout);
    }
    if (*audit) return cmd_audit_map(doc, map_name, audit_opts, format, std::cout);
  } catch (const InputError& e) {
    std::cerr << "mcone: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
