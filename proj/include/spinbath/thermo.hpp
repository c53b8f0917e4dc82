#pragma once

#include <vector>

#include "spinbath/spinops.hpp"

namespace spinbath {

struct ThermalState {
  Eigen::VectorXd eigenvalues;    // ascending
  Mat eigenvectors;               // columns
  double beta;
  double log_partition;           // log Z, ground-energy shift folded back in
  Eigen::VectorXd populations;    // Boltzmann weights, sum to 1
};

struct CorrelationMatrix {
  Axis axis;
  Eigen::MatrixXd values;  // <s^a_i s^a_j>, 1-based sites on 0-based storage
};

ThermalState gibbs_state(const Mat& h, double beta);

// Dense density matrix sum_k p_k |k><k|; columns with p_k < 1e-18 dropped.
Mat density_matrix(const ThermalState& state);

double expectation(const ThermalState& state, const Mat& obs);
double expectation(const Mat& rho, const Mat& obs);

// <s^a_i s^a_j> from the density matrix in O(dim) via bit flips.
double pair_correlation(const Mat& rho, int n_sites, int site_i, int site_j,
                        Axis axis);
double site_expectation(const Mat& rho, int n_sites, int site, Axis axis);

CorrelationMatrix correlation_matrix(const ThermalState& state, Axis axis);
CorrelationMatrix correlation_matrix(const Mat& rho, int n_sites, Axis axis);

// S_a = (1/N^2) sum_{ij} <s^a_i s^a_j>, the i=j terms included.
double structure_factor(const ThermalState& state, Axis axis);
double structure_factor(const Mat& rho, int n_sites, Axis axis);

// Number of spins for a 2^N-dimensional space; throws on non-powers of two.
int sites_of_dim(Eigen::Index dim);

}  // namespace spinbath
