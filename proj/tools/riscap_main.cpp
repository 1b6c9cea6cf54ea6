// riscap: analytic and Monte-Carlo secrecy-capacity calculator for
// reflect-array vehicular links over cascaded Rayleigh fading.
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error,
// 3 numerical convergence error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "riscap/errors.hpp"
#include "riscap/sweep.hpp"
#include "riscap/validate.hpp"

namespace {

struct SweepArgs {
  std::string model = "ap";
  std::string vary;
  std::vector<double> grid;
  std::int64_t mc_samples = 0;  // 0 = analytic only
  std::uint64_t seed = 0;
  std::string out;
  int threads = 0;
  double ps = 10.0, n0 = 1.0, beta = 2.7, rd = 4.0, re = 8.0, rs = 10.0;
  int n_cells = 16;
};

struct FigureArgs {
  std::string name;
  int n_cells = 16;
  std::int64_t mc_samples = 0;
  std::uint64_t seed = 0;
  std::string out;
  int threads = 0;
};

bool wants_json(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

void write_output_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  os << content;
  if (!os) throw std::runtime_error("failed writing output file: " + path);
}

int run_sweep_cmd(const SweepArgs& args) {
  riscap::sweep::SweepSpec spec;
  spec.base.ps_watts = args.ps;
  spec.base.n0_watts = args.n0;
  spec.base.pathloss_exp = args.beta;
  spec.base.r_d_m = args.rd;
  spec.base.r_e_m = args.re;
  spec.base.n_cells = args.n_cells;
  if (args.model == "relay") {
    spec.base.model = riscap::Model::Relay;
    spec.base.r_s_m = args.rs;
  } else if (args.model != "ap") {
    throw std::invalid_argument("unknown --model '" + args.model + "' (use ap|relay)");
  }
  static const std::map<std::string, riscap::sweep::VaryField> kVary{
      {"ps", riscap::sweep::VaryField::SourcePower},
      {"re", riscap::sweep::VaryField::EavesdropperDistance},
      {"rs", riscap::sweep::VaryField::SourceToRisDistance},
      {"n", riscap::sweep::VaryField::CellCount}};
  const auto it = kVary.find(args.vary);
  if (it == kVary.end())
    throw std::invalid_argument("unknown --vary '" + args.vary + "' (use ps|re|rs|n)");
  spec.vary = it->second;
  spec.grid = args.grid;
  if (args.mc_samples > 0) spec.mc_samples = args.mc_samples;
  spec.mc_seed = args.seed;

  const auto records = riscap::sweep::run_sweep(spec, {}, args.threads);
  std::ostringstream body;
  if (wants_json(args.out))
    riscap::sweep::write_json(body, records);
  else
    riscap::sweep::write_csv(body, records);
  write_output_file(args.out, body.str());
  return 0;
}

int run_figure_cmd(const FigureArgs& args) {
  static const std::map<std::string, riscap::sweep::FigureName> kNames{
      {"fig4", riscap::sweep::FigureName::Fig4},
      {"fig5", riscap::sweep::FigureName::Fig5},
      {"fig6", riscap::sweep::FigureName::Fig6}};
  const auto it = kNames.find(args.name);
  if (it == kNames.end())
    throw std::invalid_argument("unknown figure preset '" + args.name + "'");
  std::optional<std::int64_t> mc;
  if (args.mc_samples > 0) mc = args.mc_samples;
  const auto spec = riscap::sweep::figure_preset(it->second, args.n_cells, mc, args.seed);
  const auto results = riscap::sweep::run_figure(spec, {}, args.threads);
  std::ostringstream body;
  if (wants_json(args.out))
    riscap::sweep::write_json(body, results);
  else
    riscap::sweep::write_csv(body, results);
  write_output_file(args.out, body.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average secrecy capacity of reflect-array vehicular links"};
  app.require_subcommand(1);

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter over a grid");
  sweep_cmd->set_config("--config", "", "flat key=value file mirroring the flags; flags win");
  sweep_cmd->add_option("--model", sweep.model, "ap|relay")->capture_default_str();
  sweep_cmd->add_option("--vary", sweep.vary, "ps|re|rs|n")->required();
  sweep_cmd->add_option("--grid", sweep.grid, "comma-separated grid values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--mc-samples", sweep.mc_samples, "Monte-Carlo samples per point");
  sweep_cmd->add_option("--seed", sweep.seed, "Monte-Carlo base seed");
  sweep_cmd->add_option("--out", sweep.out, "output file (.json for JSON, CSV otherwise)")
      ->required();
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0 = hardware)");
  sweep_cmd->add_option("--ps", sweep.ps, "source power, W")->capture_default_str();
  sweep_cmd->add_option("--n0", sweep.n0, "noise PSD, W")->capture_default_str();
  sweep_cmd->add_option("--beta", sweep.beta, "path-loss exponent")->capture_default_str();
  sweep_cmd->add_option("--rd", sweep.rd, "array-to-destination distance, m")
      ->capture_default_str();
  sweep_cmd->add_option("--re", sweep.re, "array-to-eavesdropper distance, m")
      ->capture_default_str();
  sweep_cmd->add_option("--rs", sweep.rs, "source-to-array distance, m (relay)")
      ->capture_default_str();
  sweep_cmd->add_option("--n-cells", sweep.n_cells, "reflector cells")->capture_default_str();

  FigureArgs figure;
  CLI::App* figure_cmd = app.add_subcommand("figure", "run a preset sweep family");
  figure_cmd->set_config("--config", "", "flat key=value file mirroring the flags; flags win");
  figure_cmd->add_option("name", figure.name, "fig4|fig5|fig6")->required();
  figure_cmd->add_option("--n-cells", figure.n_cells, "base cell count of the N/2N pair")
      ->capture_default_str();
  figure_cmd->add_option("--mc-samples", figure.mc_samples, "Monte-Carlo samples per point");
  figure_cmd->add_option("--seed", figure.seed, "Monte-Carlo base seed");
  figure_cmd->add_option("--out", figure.out, "output file (.json for JSON, CSV otherwise)")
      ->required();
  figure_cmd->add_option("--threads", figure.threads, "worker threads (0 = hardware)");

  riscap::validate::Options vopts;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "cross-check analytic results against Monte-Carlo");
  validate_cmd->set_config("--config", "", "flat key=value file mirroring the flags; flags win");
  validate_cmd->add_option("--mc-samples", vopts.mc_samples, "samples per estimate")
      ->capture_default_str();
  validate_cmd->add_option("--seed", vopts.seed, "Monte-Carlo base seed")
      ->capture_default_str();
  validate_cmd->add_option("--threads", vopts.threads, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sweep_cmd->parsed()) return run_sweep_cmd(sweep);
    if (figure_cmd->parsed()) return run_figure_cmd(figure);
    const auto checks = riscap::validate::run_all(vopts, &std::cout);
    if (!riscap::validate::all_passed(checks)) {
      std::cerr << "validate: at least one check failed\n";
      return 1;
    }
    return 0;
  } catch (const riscap::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
