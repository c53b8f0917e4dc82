#pragma once

#include <functional>
#include <variant>

namespace spinbath {

// Underdamped (Brownian) spectral density,
//   K(w) = 4 g W^2 l^2 w / ((w^2 - W^2)^2 + (2 pi g W w)^2),
// peaked at omega0 with width gamma*omega0. lambda is the system-bath
// coupling energy; this family is the exact pre-image of a single reaction
// coordinate with an Ohmic residual bath.
struct Brownian {
  double lambda;
  double omega0;
  double gamma;
};

// Super-Ohmic spectral density, K(w) = alpha w^3 / omega_c^2 * exp(-w/omega_c).
struct SuperOhmic {
  double alpha;
  double omega_c;
};

using SpectralDensity = std::variant<Brownian, SuperOhmic>;

// Reaction-coordinate pair extracted from a spectral density:
// lambda^2 = (1/Omega) Int w K(w) dw,  Omega^2 = Int w^3 K / Int w K.
struct RCParams {
  double lambda;
  double omega;
};

// Throws on sign violations; warns (stderr, once) for Brownian gamma > 0.1
// where the residual coupling is no longer weak.
void validate(const SpectralDensity& sd);

double k_of(const SpectralDensity& sd, double omega);

RCParams rc_params(const SpectralDensity& sd);

// Polaron bath-averaged energies, closed forms for super-Ohmic baths:
//   E0 = -2 omega_c alpha,  E_I = 2 omega_c sqrt(alpha_a alpha_b).
// Both baths must be super-Ohmic with a common cutoff.
double polaron_e0(const SpectralDensity& sd);
double polaron_ei(const SpectralDensity& a, const SpectralDensity& b);

// Quadrature routes for the same quantities: -Int K/w dw and
// Int sqrt(K_a K_b)/w dw.
double polaron_e0_quad(const SpectralDensity& sd);
double polaron_ei_quad(const SpectralDensity& a, const SpectralDensity& b);

// phi = 2 Int_0^inf K(w)/w^2 coth(beta w / 2) dw, so <C> = exp(-phi).
double dressing_exponent(const SpectralDensity& sd, double beta);

struct JointDressing {
  double cc;  // <C_a C_b>
  double ss;  // <S_a S_b>
};

// Same-bath: cc = (e^{-phi+} + e^{-phi-})/2, ss = -(e^{-phi+} - e^{-phi-})/2
// with phi+- built from (sqrt(K_a) +- sqrt(K_b))^2. Uncorrelated baths:
// cc = <C_a><C_b>, ss = 0.
JointDressing joint_dressing(const SpectralDensity& a, const SpectralDensity& b,
                             double beta, bool same_bath);

// Adaptive Gauss-Kronrod integration on [a, b], relative tolerance rel_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-9);

// Integral over [0, inf) via the substitution w = -scale * log(u), which maps
// exponentially decaying integrands onto [0, 1].
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double scale, double rel_tol = 1e-9);

}  // namespace spinbath
