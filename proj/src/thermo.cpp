#include "spinbath/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinbath {

ThermalState gibbs_state(const Mat& h, double beta) {
  if (beta <= 0) throw std::domain_error("gibbs_state: beta must be > 0");
  Eigensystem es = eigendecompose(h);
  ThermalState st;
  st.beta = beta;
  const double e0 = es.values(0);
  // Weights relative to the ground energy; beta up to 1e3 at energies O(10)
  // would overflow otherwise.
  Eigen::VectorXd w = (-beta * (es.values.array() - e0)).exp();
  const double z0 = w.sum();
  st.populations = w / z0;
  st.log_partition = std::log(z0) - beta * e0;
  st.eigenvalues = std::move(es.values);
  st.eigenvectors = std::move(es.vectors);
  return st;
}

Mat density_matrix(const ThermalState& state) {
  const Eigen::Index d = state.eigenvectors.rows();
  Eigen::Index kept = 0;
  while (kept < d && state.populations(kept) >= 1e-18) ++kept;
  if (kept == 0) kept = 1;
  Mat x = state.eigenvectors.leftCols(kept);
  for (Eigen::Index k = 0; k < kept; ++k)
    x.col(k) *= std::sqrt(state.populations(k));
  return x * x.adjoint();
}

namespace {

double check_real(cplx v, const char* who) {
  if (std::abs(v.imag()) > 1e-10)
    throw std::runtime_error(std::string(who) + ": imaginary residue " +
                             std::to_string(v.imag()) + " exceeds 1e-10");
  return v.real();
}

}  // namespace

double expectation(const ThermalState& state, const Mat& obs) {
  if (obs.rows() != state.eigenvectors.rows() ||
      obs.cols() != state.eigenvectors.cols())
    throw std::domain_error("expectation: dimension mismatch");
  cplx acc = 0.0;
  for (Eigen::Index k = 0; k < state.populations.size(); ++k) {
    if (state.populations(k) < 1e-18) break;  // sorted descending with energy
    const auto v = state.eigenvectors.col(k);
    acc += state.populations(k) * (v.adjoint() * obs * v)(0, 0);
  }
  return check_real(acc, "expectation");
}

double expectation(const Mat& rho, const Mat& obs) {
  if (rho.rows() != obs.rows() || rho.cols() != obs.cols())
    throw std::domain_error("expectation: dimension mismatch");
  return check_real((rho * obs).trace(), "expectation");
}

int sites_of_dim(Eigen::Index dim) {
  int n = 0;
  while ((1L << n) < dim) ++n;
  if ((1L << n) != dim)
    throw std::domain_error("dimension " + std::to_string(dim) +
                            " is not a power of two");
  return n;
}

double pair_correlation(const Mat& rho, int n_sites, int site_i, int site_j,
                        Axis axis) {
  if (rho.rows() != (1L << n_sites))
    throw std::domain_error("pair_correlation: dimension mismatch");
  for (int s : {site_i, site_j})
    if (s < 1 || s > n_sites)
      throw std::domain_error("pair_correlation: site index out of range");
  if (site_i == site_j) return 1.0;  // Pauli matrices square to identity
  const long dim = rho.rows();
  const long bi = 1L << (n_sites - site_i);
  const long bj = 1L << (n_sites - site_j);
  const long mask = bi | bj;
  cplx acc = 0.0;
  switch (axis) {
    case Axis::Z:
      for (long a = 0; a < dim; ++a) {
        const double sgn = ((a & bi) ? -1.0 : 1.0) * ((a & bj) ? -1.0 : 1.0);
        acc += sgn * rho(a, a);
      }
      break;
    case Axis::X:
      for (long a = 0; a < dim; ++a) acc += rho(a, a ^ mask);
      break;
    case Axis::Y:
      // (sy sy)_{a^mask, a} = -(1-2a_i)(1-2a_j).
      for (long a = 0; a < dim; ++a) {
        const double sgn = ((a & bi) ? -1.0 : 1.0) * ((a & bj) ? -1.0 : 1.0);
        acc += -sgn * rho(a, a ^ mask);
      }
      break;
  }
  return check_real(acc, "pair_correlation");
}

double site_expectation(const Mat& rho, int n_sites, int site, Axis axis) {
  if (rho.rows() != (1L << n_sites))
    throw std::domain_error("site_expectation: dimension mismatch");
  if (site < 1 || site > n_sites)
    throw std::domain_error("site_expectation: site index out of range");
  const long dim = rho.rows();
  const long b = 1L << (n_sites - site);
  cplx acc = 0.0;
  switch (axis) {
    case Axis::Z:
      for (long a = 0; a < dim; ++a) acc += ((a & b) ? -1.0 : 1.0) * rho(a, a);
      break;
    case Axis::X:
      for (long a = 0; a < dim; ++a) acc += rho(a, a ^ b);
      break;
    case Axis::Y:
      for (long a = 0; a < dim; ++a)
        acc += cplx(0.0, (a & b) ? -1.0 : 1.0) * rho(a, a ^ b);
      break;
  }
  return check_real(acc, "site_expectation");
}

CorrelationMatrix correlation_matrix(const Mat& rho, int n_sites, Axis axis) {
  CorrelationMatrix cm;
  cm.axis = axis;
  cm.values.resize(n_sites, n_sites);
  for (int i = 1; i <= n_sites; ++i) {
    cm.values(i - 1, i - 1) = 1.0;
    for (int j = i + 1; j <= n_sites; ++j) {
      const double v = pair_correlation(rho, n_sites, i, j, axis);
      cm.values(i - 1, j - 1) = v;
      cm.values(j - 1, i - 1) = v;
    }
  }
  return cm;
}

CorrelationMatrix correlation_matrix(const ThermalState& state, Axis axis) {
  const int n = sites_of_dim(state.eigenvectors.rows());
  return correlation_matrix(density_matrix(state), n, axis);
}

double structure_factor(const Mat& rho, int n_sites, Axis axis) {
  const CorrelationMatrix cm = correlation_matrix(rho, n_sites, axis);
  return cm.values.sum() / (static_cast<double>(n_sites) * n_sites);
}

double structure_factor(const ThermalState& state, Axis axis) {
  const int n = sites_of_dim(state.eigenvectors.rows());
  return structure_factor(density_matrix(state), n, axis);
}

}  // namespace spinbath
