#pragma once

#include <string>
#include <vector>

#include "spinbath/mapping.hpp"
#include "spinbath/models.hpp"
#include "spinbath/spinops.hpp"
#include "spinbath/thermo.hpp"

namespace spinbath {

struct RCTruncation {
  int levels;   // M oscillator levels per mode
  int n_modes;  // number of baths B
};

struct ReducedState {
  Mat rho;  // on the 2^N spin space
  int n_sites;
  int levels;
  double beta;
};

// Guard for the supported benchmark scope: Global (1 mode, N <= 8, M <= 16)
// and HalfAndHalf (2 modes, N <= 6, M <= 8). Other schemes make M^B explode.
void check_rc_support(SchemeKind kind, int n_sites, int levels);

// H_S (x) I + sum_b [omega_b n_b + lambda_b S_b (x) (a^dag + a)_b] with the
// oscillator modes as trailing tensor factors, each truncated to M levels.
Mat rc_hamiltonian(const Mat& h_s, const std::vector<BathAttachment>& attachments,
                   const RCTruncation& trunc);

// Gibbs state on the enlarged space, traced over every oscillator mode.
ReducedState rc_reduced_state(const Mat& h_rc, int n_sites, double beta,
                              const RCTruncation& trunc);

struct ConvergencePoint {
  int levels;
  std::vector<double> observables;  // structure factors, one per requested axis
};

struct ConvergenceReport {
  std::vector<Axis> axes;
  std::vector<ConvergencePoint> points;
  bool converged;  // last two grid points within 1e-4 in every observable
};

ConvergenceReport rc_convergence(const Mat& h_s,
                                 const std::vector<BathAttachment>& attachments,
                                 double beta, int n_sites,
                                 const std::vector<int>& m_grid,
                                 const std::vector<Axis>& axes);

}  // namespace spinbath
