#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "biproj/commands.hpp"
#include "biproj/system_io.hpp"

namespace {

using biproj::RunConfig;

void add_system(CLI::App* sub, RunConfig& config) {
  sub->add_option("system", config.system_path, "system JSON file")->required();
}

void add_degree(CLI::App* sub, std::vector<int>& degree, bool required) {
  auto* opt = sub->add_option("--degree", degree, "bidegree a b")->expected(2);
  if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biproj: bihomogeneous systems with zero-dimensional projection"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string field;
  std::string out;
  double tol = 0.0;
  std::vector<int> degree;
  std::string h;

  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--field", field, "Q, Fp:p or p (overrides the system file)");
  app.add_option("--out", out, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* tol_opt = app.add_option("--tol", tol, "numeric tolerance");

  auto* hilbert = app.add_subcommand("hilbert", "table of Hilbert function values (CSV)");
  add_system(hilbert, config);
  hilbert->add_option("--amax", config.amax, "largest x-degree");
  hilbert->add_option("--bmax", config.bmax, "largest y-degree");

  auto* admissible = app.add_subcommand("admissible", "certify or search an admissible bidegree");
  add_system(admissible, config);
  add_degree(admissible, degree, false);
  admissible->add_option("--h", h, "linear form to test");

  auto* bounds = app.add_subcommand("bounds", "Macaulay and Koszul bounds, projection stabilization degree");
  add_system(bounds, config);

  auto* multmaps = app.add_subcommand("multmaps", "multiplication maps of the chart variables");
  add_system(multmaps, config);
  add_degree(multmaps, degree, true);
  multmaps->add_option("--h", h, "admissible linear form");

  auto* solve = app.add_subcommand("solve", "maps, FGLM, points and verification");
  add_system(solve, config);
  add_degree(solve, degree, false);
  solve->add_option("--h", h, "admissible linear form");
  solve->add_option("--order", config.order, "lex or drl")->check(CLI::IsMember({"lex", "drl"}));
  solve->add_flag("--randomized", config.randomized, "vector FGLM with verification");

  auto* eigen = app.add_subcommand("eigen", "points from eigenvalues of the maps");
  add_system(eigen, config);
  add_degree(eigen, degree, false);
  eigen->add_option("--h", h, "admissible linear form");

  auto* verify = app.add_subcommand("verify", "membership test of a point in the projection");
  add_system(verify, config);
  verify->add_option("--point", config.point, "comma-separated coordinates")->required();
  verify->add_flag("--numeric", config.numeric, "floating-point rank test");

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_system(gb, config);
  config.order = "lex";
  std::string gb_order = "drl";
  gb->add_option("--order", gb_order, "drl or lex")->check(CLI::IsMember({"drl", "lex"}));

  auto* bigin = app.add_subcommand("bigin", "bigeneric initial ideal");
  add_system(bigin, config);
  bigin->add_flag("--identity", config.identity, "no coordinate change");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return biproj::kExitInput;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (config.command == "gb") config.order = gb_order;
  if (degree.size() == 2) config.degree = biproj::BiDegree{degree[0], degree[1]};
  if (!h.empty()) config.h = h;
  if (*tol_opt) config.tol = tol;
  if (!out.empty()) config.out = out == "json" ? biproj::OutputFormat::Json : biproj::OutputFormat::Text;
  if (!field.empty()) {
    try {
      config.field = biproj::parse_field_flag(field);
    } catch (const biproj::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return biproj::exit_code_for(e.code());
    }
  }

  const biproj::CommandOutput result = biproj::run_command(config);
  std::cout << result.rendered(config);
  if (result.exit_code != 0) std::cerr << result.text;
  return result.exit_code;
}
