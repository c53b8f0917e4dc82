#pragma once

#include <vector>

#include "spinbath/spectral.hpp"
#include "spinbath/spinops.hpp"

namespace spinbath {

struct ChainSpec {
  int n_sites;
  std::vector<double> deltas;  // one spin splitting per site
  double jx;
  double jy;
  double jz;

  static ChainSpec uniform(int n_sites, double delta, double jx, double jy,
                           double jz) {
    return {n_sites, std::vector<double>(n_sites, delta), jx, jy, jz};
  }
};

struct FullyConnectedSpec {
  int n_sites;
  double delta;  // uniform splitting
  double j;      // dimensionless all-to-all scale
};

enum class SchemeKind { Global, Local, HalfAndHalf, Pairwise };

const char* scheme_name(SchemeKind k);

struct BathScheme {
  SchemeKind kind;
  std::vector<SpectralDensity> baths;  // one per bath
};

// Number of baths the scheme requires on an n_sites chain.
int bath_count(SchemeKind kind, int n_sites);

// 1-based site sets, one per bath. Throws on odd N for half/pairwise.
std::vector<std::vector<int>> bath_sites(SchemeKind kind, int n_sites);

void validate(const BathScheme& scheme, int n_sites);

// Open-boundary chain: sum_i Delta_i sz_i + sum_a sum_i J_a s^a_i s^a_{i+1}.
Mat heisenberg_chain(const ChainSpec& spec);

// Heisenberg chain with j_y = j_z = 0 enforced.
Mat ising_chain(const ChainSpec& spec);

// -(Delta/2) sum_i sz_i + (J Delta/8) sum_{i,j} sx_i sx_j, i=j terms kept.
Mat fully_connected_ising(const FullyConnectedSpec& spec);

// One coupling operator S_n per bath: the sum of sx over the bath's sites.
std::vector<Mat> coupling_operators(SchemeKind kind, int n_sites);

}  // namespace spinbath
