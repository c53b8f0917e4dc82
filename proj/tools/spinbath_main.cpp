#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spinbath/config.hpp"
#include "spinbath/sweep.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "experiment config file")
      ->required();
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--threads", opts.threads, "worker threads for grid points")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium observables of dissipative spin chains via "
               "effective-Hamiltonian and polaron mappings"};
  app.require_subcommand(1);

  CommonOpts sweep_opts, corr_opts, qpt_opts, rc_opts, print_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "structure-factor sweep to CSV");
  add_common(sweep, sweep_opts);
  CLI::App* corr = app.add_subcommand("corr-map",
                                      "correlation matrices, one file per point");
  add_common(corr, corr_opts);
  CLI::App* qpt = app.add_subcommand("qpt",
                                     "critical-coupling sweep for the "
                                     "fully-connected model");
  add_common(qpt, qpt_opts);
  CLI::App* rc = app.add_subcommand("rc-bench",
                                    "sweep against the reaction-coordinate "
                                    "benchmark (picture forced to rc_bench)");
  add_common(rc, rc_opts);
  CLI::App* print = app.add_subcommand("print-config",
                                       "parse a config and dump it with "
                                       "defaults resolved");
  print->add_option("--config", print_opts.config_path, "experiment config file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (print->parsed()) {
      std::cout << spinbath::dump_config(
          spinbath::parse_config(print_opts.config_path));
      return 0;
    }
    if (sweep->parsed()) {
      auto cfg = spinbath::parse_config(sweep_opts.config_path);
      const auto rows = spinbath::run_sweep(cfg, sweep_opts.threads);
      const std::string path = sweep_opts.out_dir + "/sweep.csv";
      spinbath::write_sweep_csv(rows, path);
      std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
      return 0;
    }
    if (corr->parsed()) {
      auto cfg = spinbath::parse_config(corr_opts.config_path);
      const auto blocks = spinbath::run_corr_map(cfg, corr_opts.threads);
      const auto paths =
          spinbath::write_corr_files(blocks, cfg, corr_opts.out_dir);
      for (const auto& p : paths) std::cout << "wrote " << p << "\n";
      return 0;
    }
    if (qpt->parsed()) {
      auto cfg = spinbath::parse_config(qpt_opts.config_path);
      const auto result = spinbath::run_qpt(cfg, qpt_opts.threads);
      spinbath::write_qpt_files(result, qpt_opts.out_dir);
      std::cout << "wrote " << qpt_opts.out_dir << "/qpt_sweep.csv and "
                << qpt_opts.out_dir << "/qpt_report.csv\n";
      for (const auto& c : result.crossings) {
        std::cout << "n=" << c.n << " T=" << spinbath::format_value(c.temperature)
                  << " analytic=" << spinbath::format_value(c.analytic)
                  << " crossing=";
        if (c.bracketed)
          std::cout << spinbath::format_value(c.crossing) << "\n";
        else
          std::cout << "not_bracketed\n";
      }
      return 0;
    }
    if (rc->parsed()) {
      auto cfg = spinbath::parse_config(rc_opts.config_path);
      cfg.picture = spinbath::PictureMode::RcBench;
      spinbath::validate(cfg);
      const auto rows = spinbath::run_sweep(cfg, rc_opts.threads);
      const std::string path = rc_opts.out_dir + "/rc_bench.csv";
      spinbath::write_sweep_csv(rows, path);
      std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
