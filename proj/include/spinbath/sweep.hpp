#pragma once

#include <string>
#include <vector>

#include "spinbath/config.hpp"
#include "spinbath/thermo.hpp"

namespace spinbath {

struct SweepRow {
  int n;
  double temperature;
  double coupling;
  std::string observable;
  double value;
};

struct CorrBlock {
  int n;
  double temperature;
  double coupling;
  int t_index;
  int c_index;
  Axis axis;
  Eigen::MatrixXd values;
};

struct QptCrossing {
  int n;
  double temperature;
  double analytic;
  bool bracketed;
  double crossing;  // meaningful when bracketed
};

struct QptResult {
  std::vector<SweepRow> rows;  // S_x per grid point
  std::vector<QptCrossing> crossings;
};

// Rows ordered: n ascending, temperature descending, coupling ascending,
// observable lexicographic. threads > 1 parallelizes over grid points; the
// ordering is positional, so output is independent of thread count.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, int threads = 1);

std::vector<CorrBlock> run_corr_map(const ExperimentConfig& cfg, int threads = 1);

// Critical coupling from JD/8 = lambda_c^2/omega (Brownian) or
// JD/8 = 2 omega_c alpha_c (super-Ohmic).
double analytic_critical_coupling(const ExperimentConfig& cfg);

QptResult run_qpt(const ExperimentConfig& cfg, int threads = 1);

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);
// One file per (axis, n, temperature, coupling), named
// corr_<axis>_<scheme>_n<N>_t<ti>_c<ci>.csv inside out_dir; returns the paths.
std::vector<std::string> write_corr_files(const std::vector<CorrBlock>& blocks,
                                          const ExperimentConfig& cfg,
                                          const std::string& out_dir);
void write_qpt_files(const QptResult& result, const std::string& out_dir);

std::string format_value(double v);  // fixed "%.12g"

}  // namespace spinbath
