#pragma once

#include <string>
#include <vector>

#include "spinbath/models.hpp"
#include "spinbath/spectral.hpp"
#include "spinbath/spinops.hpp"

namespace spinbath {

// One bath's coupling operator together with its reaction-coordinate pair.
struct BathAttachment {
  Mat op;       // Hermitian; all attachments in one call must mutually commute
  RCParams rc;  // (lambda, omega)
};

enum class Picture { Effh, Polaron };

struct EffectiveHamiltonian {
  Mat h;
  Picture picture;
  std::string scheme;
  double beta = 0.0;  // meaningful for the polaron picture only
};

// Generic dictionary for commuting coupling operators. In the joint eigenbasis
// of the S_n, off-diagonal elements of h_s pick up the Gaussian factor
// prod_n exp(-(lambda_n^2/2 omega_n^2)(s_a - s_b)^2); afterwards
// sum_n (lambda_n^2/omega_n) S_n^2 is subtracted. This is the exact
// resummation of the dressing series.
EffectiveHamiltonian effh_generic(const Mat& h_s,
                                  const std::vector<BathAttachment>& attachments);

// Closed-form chain Hamiltonians, one per coupling topology. rcs holds one
// RCParams per bath in the scheme's bath order.
EffectiveHamiltonian effh_chain(const ChainSpec& chain, SchemeKind kind,
                                const std::vector<RCParams>& rcs);

EffectiveHamiltonian effh_global(const ChainSpec& chain, const RCParams& rc);
EffectiveHamiltonian effh_local(const ChainSpec& chain,
                                const std::vector<RCParams>& rcs);
EffectiveHamiltonian effh_half(const ChainSpec& chain, const RCParams& rc_left,
                               const RCParams& rc_right);
EffectiveHamiltonian effh_pairwise(const ChainSpec& chain,
                                   const std::vector<RCParams>& rcs);

// -(dressed Delta/2) sum sz + (J Delta/8 - lambda^2/omega) sum_{i,j} sx_i sx_j.
EffectiveHamiltonian effh_fully_connected(const FullyConnectedSpec& spec,
                                          const RCParams& rc);

// Polaron system Hamiltonian at inverse temperature beta. Super-Ohmic baths
// only; splittings are scaled by <C>, same-bath x bonds shifted by -2 E_I,
// y/z bonds mixed through (<CC>, <SS>), cross-bath bonds dressed by <C><C>.
EffectiveHamiltonian polaron_hamiltonian(const BathScheme& scheme,
                                         const ChainSpec& chain, double beta);

EffectiveHamiltonian polaron_fully_connected(const FullyConnectedSpec& spec,
                                             const SpectralDensity& bath,
                                             double beta);

// Per-bath dressing coefficients entering the polaron Hamiltonians; cached
// per (bath parameters, beta) because each value costs several quadratures.
struct PolaronCoefficients {
  double e0;  // per-site constant
  double c;   // <C>
  double cc;  // same-bath <CC>
  double ss;  // same-bath <SS>
  double ei;  // bath-induced x coupling 2 omega_c alpha
};

PolaronCoefficients polaron_coefficients(const SpectralDensity& bath,
                                         double beta);

}  // namespace spinbath
