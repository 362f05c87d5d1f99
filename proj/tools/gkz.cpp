#include <CLI11.hpp>
#include <iostream>

#include "gkz/io.hpp"

using namespace gkz;

// exit codes: 0 pass, 1 verification failure, 2 input error, 3 numerical
// non-convergence
int main(int argc, char** argv) {
  CLI::App app{"GKZ series, K-theory and flip verification"};
  app.require_subcommand(1);

  std::string config_path, triangulation, flip;
  long z_index = 0;
  long bound = -1;
  int nodes = -1;
  double tolerance = -1;
  bool negative_control = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "config file (JSON, or TOML by extension)")
        ->required();
    cmd->add_option("--bound", bound, "series truncation bound");
    cmd->add_option("--nodes", nodes, "quadrature nodes per contour");
    cmd->add_option("--tolerance", tolerance, "diagram agreement tolerance");
  };

  auto* info = app.add_subcommand("info", "configuration and triangulation summary");
  add_common(info);

  auto* solve = app.add_subcommand("solve", "evaluate the series solutions at a point");
  add_common(solve);
  solve->add_option("--triangulation", triangulation, "triangulation name")->required();
  solve->add_option("--z", z_index, "evaluation point index")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "run the full flip verification report");
  add_common(verify);
  verify->add_option("--flip", flip, "flip name")->required();
  verify->add_flag("--negative-control", negative_control,
                   "flip the kernel sign (the diagram check must then fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ConfigFile c = load_config(config_path);
    if (bound >= 0) c.policy.bound = bound;
    if (nodes >= 0) c.policy.nodes = nodes;
    if (tolerance >= 0) c.policy.tolerance = tolerance;
    c.policy.negative_control = negative_control;

    Json out;
    if (info->parsed()) {
      std::cerr << "info: " << config_path << "\n";
      out = cmd_info(c);
    } else if (solve->parsed()) {
      std::cerr << "solve: " << config_path << " triangulation=" << triangulation
                << " z=" << z_index << "\n";
      out = cmd_solve(c, triangulation, (size_t)z_index);
    } else {
      std::cerr << "verify: " << config_path << " flip=" << flip << "\n";
      out = cmd_verify(c, flip);
    }
    std::cout << out.dump(2) << "\n";
    if (out.contains("pass") && !out["pass"].get<bool>()) {
      std::cerr << "FAIL\n";
      return 1;
    }
    return 0;
  } catch (const gkz_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind == "QuadratureNotConverged") return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
