#include "spinbath/rcbench.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinbath {

void check_rc_support(SchemeKind kind, int n_sites, int levels) {
  if (levels < 1) throw std::domain_error("rc benchmark: levels must be >= 1");
  switch (kind) {
    case SchemeKind::Global:
      if (n_sites > 8 || levels > 16)
        throw std::domain_error(
            "rc benchmark: global scheme supports N <= 8 and M <= 16");
      return;
    case SchemeKind::HalfAndHalf:
      if (n_sites > 6 || levels > 8)
        throw std::domain_error(
            "rc benchmark: half_and_half scheme supports N <= 6 and M <= 8");
      return;
    default:
      throw std::domain_error(std::string("rc benchmark: ") +
                              scheme_name(kind) +
                              " scheme is not supported (M^B blows up)");
  }
}

namespace {

long enlarged_dim(Eigen::Index dim_s, const RCTruncation& trunc) {
  if (trunc.levels < 1) throw std::domain_error("RCTruncation: levels must be >= 1");
  long d = dim_s;
  for (int b = 0; b < trunc.n_modes; ++b) {
    d *= trunc.levels;
    if (d > kMaxEnlargedDim)
      throw std::domain_error("rc benchmark: enlarged dimension " +
                              std::to_string(d) + " exceeds the cap of " +
                              std::to_string(kMaxEnlargedDim));
  }
  return d;
}

Mat osc_position(int m) {
  Mat x = Mat::Zero(m, m);
  for (int k = 1; k < m; ++k) {
    x(k - 1, k) = std::sqrt(static_cast<double>(k));
    x(k, k - 1) = std::sqrt(static_cast<double>(k));
  }
  return x;
}

Mat osc_number(int m) {
  Mat n = Mat::Zero(m, m);
  for (int k = 0; k < m; ++k) n(k, k) = k;
  return n;
}

}  // namespace

Mat rc_hamiltonian(const Mat& h_s, const std::vector<BathAttachment>& attachments,
                   const RCTruncation& trunc) {
  if (static_cast<int>(attachments.size()) != trunc.n_modes)
    throw std::domain_error("rc_hamiltonian: one attachment per mode required");
  const Eigen::Index ds = h_s.rows();
  const long d = enlarged_dim(ds, trunc);
  const int m = trunc.levels;
  Mat h = Mat::Zero(d, d);
  Mat osc_id = Mat::Identity(1, 1);
  for (int b = 0; b < trunc.n_modes; ++b)
    osc_id = kron(osc_id, Mat::Identity(m, m));
  h += kron(h_s, osc_id);
  for (int b = 0; b < trunc.n_modes; ++b) {
    // Mode b occupies the (b+1)-th trailing factor.
    Mat num = Mat::Identity(1, 1);
    Mat pos = Mat::Identity(1, 1);
    for (int k = 0; k < trunc.n_modes; ++k) {
      num = kron(num, k == b ? osc_number(m) : Mat::Identity(m, m));
      pos = kron(pos, k == b ? osc_position(m) : Mat::Identity(m, m));
    }
    const RCParams& rc = attachments[b].rc;
    h += rc.omega * kron(Mat::Identity(ds, ds), num);
    h += rc.lambda * kron(attachments[b].op, pos);
  }
  return h;
}

ReducedState rc_reduced_state(const Mat& h_rc, int n_sites, double beta,
                              const RCTruncation& trunc) {
  const long ds = 1L << n_sites;
  long r = 1;
  for (int b = 0; b < trunc.n_modes; ++b) r *= trunc.levels;
  if (h_rc.rows() != ds * r)
    throw std::domain_error("rc_reduced_state: dimension mismatch");
  const ThermalState st = gibbs_state(h_rc, beta);
  // Tr_RC |v><v| = W W^dag with v reshaped to (spin index) x (mode index);
  // spins are the leading tensor factor, so index = s*r + m.
  Mat rho = Mat::Zero(ds, ds);
  for (Eigen::Index k = 0; k < st.populations.size(); ++k) {
    const double p = st.populations(k);
    if (p < 1e-18) break;
    Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>
        w(st.eigenvectors.col(k).data(), ds, r);
    rho += p * (w * w.adjoint());
  }
  ReducedState out;
  out.rho = std::move(rho);
  out.n_sites = n_sites;
  out.levels = trunc.levels;
  out.beta = beta;
  return out;
}

ConvergenceReport rc_convergence(const Mat& h_s,
                                 const std::vector<BathAttachment>& attachments,
                                 double beta, int n_sites,
                                 const std::vector<int>& m_grid,
                                 const std::vector<Axis>& axes) {
  if (m_grid.empty()) throw std::domain_error("rc_convergence: empty grid");
  for (size_t k = 1; k < m_grid.size(); ++k)
    if (m_grid[k] <= m_grid[k - 1])
      throw std::domain_error("rc_convergence: grid must be ascending");
  ConvergenceReport rep;
  rep.axes = axes;
  for (int m : m_grid) {
    const RCTruncation trunc{m, static_cast<int>(attachments.size())};
    const Mat h_rc = rc_hamiltonian(h_s, attachments, trunc);
    const ReducedState red = rc_reduced_state(h_rc, n_sites, beta, trunc);
    ConvergencePoint pt;
    pt.levels = m;
    for (Axis ax : axes)
      pt.observables.push_back(structure_factor(red.rho, n_sites, ax));
    rep.points.push_back(std::move(pt));
  }
  rep.converged = true;
  if (rep.points.size() >= 2) {
    const auto& a = rep.points[rep.points.size() - 2].observables;
    const auto& b = rep.points.back().observables;
    for (size_t k = 0; k < a.size(); ++k)
      if (std::abs(a[k] - b[k]) >= 1e-4) rep.converged = false;
  }
  return rep;
}

}  // namespace spinbath
