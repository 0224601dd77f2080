#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gfp/errors.hpp"
#include "gfp/scenario.hpp"

namespace {

int fail(const std::string& type, const std::string& message,
         const std::string& location) {
  nlohmann::ordered_json err;
  err["error"] = {{"type", type}, {"message", message}, {"location", location}};
  std::cerr << err.dump() << std::endl;
  if (type == "ParseError") return 2;
  if (type == "ValidationError") return 3;
  if (type == "NumericalFailure") return 4;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multi-kink solutions, shock skeletons and transforms "
               "of a C-integrable viscous conservation law"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir = ".", grid_spec, lambda_spec,
              variant = "", exact_arith = "on";
  double eta_flag = 0.0;
  bool eta_set = false;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
    if (needs_scenario)
      cmd->add_option("--scenario", scenario_path, "scenario JSON file")
          ->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--grid", grid_spec, "override grid as nx,nt");
    cmd->add_option("--eta", eta_flag, "override viscosity")
        ->each([&](const std::string&) { eta_set = true; });
    cmd->add_option("--lambda", lambda_spec,
                    "transform parameter(s), lambda1[,lambda2]");
    cmd->add_option("--variant", variant, "integrator variant")
        ->check(CLI::IsMember({"pointwise", "riccati"}));
    cmd->add_option("--exact-arith", exact_arith,
                    "exact rational arithmetic where available")
        ->check(CLI::IsMember({"on", "off"}));
  };

  const char* commands[] = {"eval",   "skeleton",  "backlund",
                            "verify", "integrate", "figures"};
  for (const char* name : commands)
    add_common(app.add_subcommand(name), std::string(name) != "figures");

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    gfp::cli::RunFlags flags;
    flags.out_dir = out_dir;
    flags.exact_arith = exact_arith == "on";
    if (!grid_spec.empty()) {
      int nx = 0, nt = 0;
      if (std::sscanf(grid_spec.c_str(), "%d,%d", &nx, &nt) != 2)
        throw gfp::ParseError("--grid expects nx,nt");
      flags.grid_override = {nx, nt};
    }
    if (eta_set) flags.eta_override = eta_flag;
    if (!lambda_spec.empty()) {
      gfp::cli::BacklundSpec b;
      double l1 = 0, l2 = 0;
      int got = std::sscanf(lambda_spec.c_str(), "%lf,%lf", &l1, &l2);
      if (got < 1) throw gfp::ParseError("--lambda expects lambda1[,lambda2]");
      b.lambda1 = l1;
      if (got == 2) b.lambda2 = l2;
      flags.lambda_override = b;
    }
    if (!variant.empty())
      flags.variant_override = variant == "pointwise"
                                   ? gfp::verify::StaggeredVariant::pointwise
                                   : gfp::verify::StaggeredVariant::riccati;

    if (command == "figures") return gfp::cli::run_figures(flags);
    gfp::cli::Scenario sc = gfp::cli::load_scenario_file(scenario_path);
    return gfp::cli::run(command, sc, flags);
  } catch (const gfp::Error& e) {
    return fail(e.kind(), e.what(),
                scenario_path.empty() ? command : scenario_path);
  } catch (const std::exception& e) {
    return fail("NumericalFailure", e.what(), command);
  }
}
