#include "spinbath/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "spinbath/mapping.hpp"
#include "spinbath/rcbench.hpp"

namespace spinbath {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

struct Task {
  int n;
  double temperature;
  double coupling;
  int t_index;
  int c_index;
};

struct PointResult {
  std::vector<std::pair<std::string, double>> scalars;  // observable, value
  std::vector<CorrBlock> blocks;
};

Axis axis_of(char c) {
  switch (c) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    default: return Axis::Z;
  }
}

ChainSpec chain_of(const ExperimentConfig& cfg, int n) {
  return ChainSpec::uniform(n, cfg.delta, cfg.jx,
                            cfg.model == Model::Ising ? 0.0 : cfg.jy,
                            cfg.model == Model::Ising ? 0.0 : cfg.jz);
}

// Spin-space density matrix for one grid point.
Mat point_rho(const ExperimentConfig& cfg, const Task& t) {
  const double beta = 1.0 / t.temperature;
  const SpectralDensity sd = bath_at(cfg, t.coupling);
  if (cfg.picture == PictureMode::RcBench) {
    const ChainSpec chain = chain_of(cfg, t.n);
    const Mat h_s = cfg.model == Model::Ising ? ising_chain(chain)
                                              : heisenberg_chain(chain);
    const RCParams rc = rc_params(sd);
    const auto ops = coupling_operators(cfg.scheme, t.n);
    std::vector<BathAttachment> atts;
    for (const auto& op : ops) atts.push_back({op, rc});
    const RCTruncation trunc{cfg.rc_levels, static_cast<int>(atts.size())};
    check_rc_support(cfg.scheme, t.n, cfg.rc_levels);
    const Mat h_rc = rc_hamiltonian(h_s, atts, trunc);
    return rc_reduced_state(h_rc, t.n, beta, trunc).rho;
  }

  EffectiveHamiltonian eff;
  if (cfg.model == Model::FullyConnected) {
    const FullyConnectedSpec spec{t.n, cfg.delta, cfg.j};
    eff = cfg.picture == PictureMode::Polaron
              ? polaron_fully_connected(spec, sd, beta)
              : effh_fully_connected(spec, rc_params(sd));
  } else {
    const ChainSpec chain = chain_of(cfg, t.n);
    if (cfg.picture == PictureMode::Polaron) {
      BathScheme scheme{cfg.scheme,
                        std::vector<SpectralDensity>(
                            bath_count(cfg.scheme, t.n), sd)};
      eff = polaron_hamiltonian(scheme, chain, beta);
    } else {
      const std::vector<RCParams> rcs(bath_count(cfg.scheme, t.n), rc_params(sd));
      eff = effh_chain(chain, cfg.scheme, rcs);
    }
  }
  return density_matrix(gibbs_state(eff.h, beta));
}

PointResult evaluate_point(const ExperimentConfig& cfg, const Task& t) {
  const Mat rho = point_rho(cfg, t);
  PointResult out;
  for (const auto& obs : cfg.observables) {
    const Axis ax = axis_of(obs.back());
    if (obs.rfind("S_", 0) == 0) {
      out.scalars.emplace_back(obs, structure_factor(rho, t.n, ax));
    } else {
      CorrBlock blk;
      blk.n = t.n;
      blk.temperature = t.temperature;
      blk.coupling = t.coupling;
      blk.t_index = t.t_index;
      blk.c_index = t.c_index;
      blk.axis = ax;
      blk.values = correlation_matrix(rho, t.n, ax).values;
      out.blocks.push_back(std::move(blk));
    }
  }
  return out;
}

std::vector<Task> task_order(const ExperimentConfig& cfg);

// Tasks in output order; results land in positional slots so the output is
// identical for any thread count.
std::vector<PointResult> run_points(const ExperimentConfig& cfg, int threads) {
  validate(cfg);
  const std::vector<Task> sorted = task_order(cfg);
  std::vector<PointResult> results(sorted.size());
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= sorted.size()) return;
      try {
        results[k] = evaluate_point(cfg, sorted[k]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<Task> task_order(const ExperimentConfig& cfg) {
  std::vector<int> ns = cfg.sizes;
  std::sort(ns.begin(), ns.end());
  std::vector<double> temps = cfg.temperatures;
  std::sort(temps.rbegin(), temps.rend());
  std::vector<double> coups = cfg.coupling;
  std::sort(coups.begin(), coups.end());
  std::vector<Task> tasks;
  for (int n : ns)
    for (size_t ti = 0; ti < temps.size(); ++ti)
      for (size_t ci = 0; ci < coups.size(); ++ci)
        tasks.push_back({n, temps[ti], coups[ci], static_cast<int>(ti),
                         static_cast<int>(ci)});
  return tasks;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, int threads) {
  bool any = false;
  for (const auto& o : cfg.observables) any = any || o.rfind("S_", 0) == 0;
  if (!any)
    throw std::runtime_error(
        "sweep: no structure-factor observables requested (use corr-map for "
        "correlation matrices)");
  const auto results = run_points(cfg, threads);
  const auto tasks = task_order(cfg);
  std::vector<SweepRow> rows;
  for (size_t k = 0; k < tasks.size(); ++k)
    for (const auto& [obs, value] : results[k].scalars)
      rows.push_back({tasks[k].n, tasks[k].temperature, tasks[k].coupling, obs,
                      value});
  return rows;
}

std::vector<CorrBlock> run_corr_map(const ExperimentConfig& cfg, int threads) {
  bool any = false;
  for (const auto& o : cfg.observables) any = any || o.rfind("corr_", 0) == 0;
  if (!any)
    throw std::runtime_error("corr-map: no corr_* observables requested");
  const auto results = run_points(cfg, threads);
  std::vector<CorrBlock> blocks;
  for (const auto& r : results)
    for (const auto& b : r.blocks) blocks.push_back(b);
  return blocks;
}

double analytic_critical_coupling(const ExperimentConfig& cfg) {
  if (cfg.model != Model::FullyConnected)
    throw std::runtime_error("qpt: requires the fully-connected model");
  const double target = cfg.j * cfg.delta / 8.0;
  if (target <= 0)
    throw std::runtime_error("qpt: J*Delta must be positive for a transition");
  if (cfg.bath_type == BathKind::Brownian)
    return std::sqrt(target * cfg.omega);
  return target / (2.0 * cfg.omega_c);
}

QptResult run_qpt(const ExperimentConfig& cfg, int threads) {
  ExperimentConfig qcfg = cfg;
  qcfg.observables = {"S_x"};
  QptResult out;
  out.rows = run_sweep(qcfg, threads);
  const double analytic = analytic_critical_coupling(cfg);
  // Rows arrive grouped by (n, T) with coupling ascending.
  const size_t nc = cfg.coupling.size();
  for (size_t base = 0; base + nc <= out.rows.size(); base += nc) {
    QptCrossing cr;
    cr.n = out.rows[base].n;
    cr.temperature = out.rows[base].temperature;
    cr.analytic = analytic;
    cr.bracketed = false;
    cr.crossing = 0.0;
    for (size_t k = 0; k + 1 < nc; ++k) {
      const double v0 = out.rows[base + k].value;
      const double v1 = out.rows[base + k + 1].value;
      if ((v0 - 0.5) * (v1 - 0.5) <= 0.0 && v0 != v1) {
        const double c0 = out.rows[base + k].coupling;
        const double c1 = out.rows[base + k + 1].coupling;
        cr.bracketed = true;
        cr.crossing = c0 + (0.5 - v0) * (c1 - c0) / (v1 - v0);
        break;
      }
    }
    out.crossings.push_back(cr);
  }
  return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "n,temperature,coupling,observable,value\n";
  for (const auto& r : rows)
    out << r.n << "," << format_value(r.temperature) << ","
        << format_value(r.coupling) << "," << r.observable << ","
        << format_value(r.value) << "\n";
}

std::vector<std::string> write_corr_files(const std::vector<CorrBlock>& blocks,
                                          const ExperimentConfig& cfg,
                                          const std::string& out_dir) {
  std::vector<std::string> paths;
  for (const auto& b : blocks) {
    const std::string path = out_dir + "/corr_" + axis_name(b.axis) + "_" +
                             scheme_name(cfg.scheme) + "_n" +
                             std::to_string(b.n) + "_t" +
                             std::to_string(b.t_index) + "_c" +
                             std::to_string(b.c_index) + ".csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# scheme = " << scheme_name(cfg.scheme) << "\n";
    out << "# n = " << b.n << "\n";
    out << "# temperature = " << format_value(b.temperature) << "\n";
    out << "# coupling = " << format_value(b.coupling) << "\n";
    out << "i,j,value\n";
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j)
        out << i + 1 << "," << j + 1 << "," << format_value(b.values(i, j))
            << "\n";
    paths.push_back(path);
  }
  return paths;
}

void write_qpt_files(const QptResult& result, const std::string& out_dir) {
  write_sweep_csv(result.rows, out_dir + "/qpt_sweep.csv");
  const std::string path = out_dir + "/qpt_report.csv";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "n,temperature,analytic,crossing\n";
  for (const auto& c : result.crossings) {
    out << c.n << "," << format_value(c.temperature) << ","
        << format_value(c.analytic) << ",";
    if (c.bracketed)
      out << format_value(c.crossing) << "\n";
    else
      out << "not_bracketed\n";
  }
}

}  // namespace spinbath
