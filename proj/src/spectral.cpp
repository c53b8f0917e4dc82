#include "spinbath/spectral.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace spinbath {

void validate(const SpectralDensity& sd) {
  if (const auto* b = std::get_if<Brownian>(&sd)) {
    if (b->lambda < 0) throw std::domain_error("Brownian: lambda must be >= 0");
    if (b->omega0 <= 0) throw std::domain_error("Brownian: omega0 must be > 0");
    if (b->gamma <= 0) throw std::domain_error("Brownian: gamma must be > 0");
    if (b->gamma > 0.1) {
      static bool warned = false;
      if (!warned) {
        std::cerr << "warning: Brownian gamma > 0.1, residual coupling is not weak\n";
        warned = true;
      }
    }
  } else {
    const auto& s = std::get<SuperOhmic>(sd);
    if (s.alpha < 0) throw std::domain_error("SuperOhmic: alpha must be >= 0");
    if (s.omega_c <= 0) throw std::domain_error("SuperOhmic: omega_c must be > 0");
  }
}

double k_of(const SpectralDensity& sd, double omega) {
  if (omega < 0) throw std::domain_error("k_of: negative frequency");
  if (const auto* b = std::get_if<Brownian>(&sd)) {
    const double d1 = omega * omega - b->omega0 * b->omega0;
    const double d2 = 2.0 * M_PI * b->gamma * b->omega0 * omega;
    return 4.0 * b->gamma * b->omega0 * b->omega0 * b->lambda * b->lambda *
           omega / (d1 * d1 + d2 * d2);
  }
  const auto& s = std::get<SuperOhmic>(sd);
  return s.alpha * omega * omega * omega / (s.omega_c * s.omega_c) *
         std::exp(-omega / s.omega_c);
}

RCParams rc_params(const SpectralDensity& sd) {
  validate(sd);
  if (const auto* b = std::get_if<Brownian>(&sd)) {
    // The Brownian family is parameterized by its own RC pair.
    return {b->lambda, b->omega0};
  }
  const auto& s = std::get<SuperOhmic>(sd);
  // Gamma-function moments: Int w K = 24 a wc^3, Int w^3 K = 720 a wc^5.
  const double omega = std::sqrt(30.0) * s.omega_c;
  const double lambda2 = 24.0 * s.alpha * std::pow(s.omega_c, 3) / omega;
  return {std::sqrt(lambda2), omega};
}

namespace {

const SuperOhmic& require_super_ohmic(const SpectralDensity& sd,
                                      const char* who) {
  const auto* s = std::get_if<SuperOhmic>(&sd);
  if (!s)
    throw std::domain_error(std::string(who) +
                            ": only super-Ohmic densities are supported");
  return *s;
}

// Gauss-Kronrod 7-15 nodes on [-1, 1].
constexpr double kGkNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277,
                               0.381830050505119, 0.417959183673469};

struct GkResult {
  double value;
  double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kGkNodes[i]);
    fv[14 - i] = f(c + h * kGkNodes[i]);
  }
  fv[7] = f(c);
  double kron = 0, gauss = 0;
  for (int i = 0; i < 7; ++i) kron += kKronrodW[i] * (fv[i] + fv[14 - i]);
  kron += kKronrodW[7] * fv[7];
  for (int i = 0; i < 3; ++i) gauss += kGaussW[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  gauss += kGaussW[3] * fv[7];
  return {kron * h, std::abs(kron - gauss) * h};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth) {
  const GkResult r = gk15(f, a, b);
  if (r.error <= tol || (b - a) < 1e-12 * (1.0 + std::abs(a) + std::abs(b)))
    return r.value;
  if (depth > 64)
    throw std::runtime_error(
        "quadrature failed to converge on [" + std::to_string(a) + ", " +
        std::to_string(b) + "], residual error " + std::to_string(r.error));
  const double m = 0.5 * (a + b);
  return adapt(f, a, m, tol / 2, depth + 1) + adapt(f, m, b, tol / 2, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
  // Scan with a fixed grid first so narrow features set the error budget; a
  // single panel can miss a sharp resonance entirely.
  constexpr int kPanels = 64;
  const double h = (b - a) / kPanels;
  double estimate = 0.0;
  for (int k = 0; k < kPanels; ++k)
    estimate += gk15(f, a + k * h, a + (k + 1) * h).value;
  const double tol = std::max(rel_tol * std::abs(estimate), 1e-280);
  double out = 0.0;
  for (int k = 0; k < kPanels; ++k)
    out += adapt(f, a + k * h, a + (k + 1) * h, tol / kPanels, 0);
  return out;
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double scale, double rel_tol) {
  if (scale <= 0) throw std::domain_error("integrate_semi_infinite: scale must be > 0");
  // w = -scale log(u): maps (0, 1] onto [0, inf) with dw = scale/u du.
  auto g = [&](double u) {
    if (u <= 0) return 0.0;
    return f(-scale * std::log(u)) * scale / u;
  };
  return integrate(g, 0.0, 1.0, rel_tol);
}

double polaron_e0(const SpectralDensity& sd) {
  validate(sd);
  const auto& s = require_super_ohmic(sd, "polaron_e0");
  return -2.0 * s.omega_c * s.alpha;
}

double polaron_ei(const SpectralDensity& a, const SpectralDensity& b) {
  validate(a);
  validate(b);
  const auto& sa = require_super_ohmic(a, "polaron_ei");
  const auto& sb = require_super_ohmic(b, "polaron_ei");
  if (std::abs(sa.omega_c - sb.omega_c) > 1e-12 * sa.omega_c)
    throw std::domain_error("polaron_ei: baths must share a common omega_c");
  return 2.0 * sa.omega_c * std::sqrt(sa.alpha * sb.alpha);
}

double polaron_e0_quad(const SpectralDensity& sd) {
  validate(sd);
  const auto& s = require_super_ohmic(sd, "polaron_e0_quad");
  auto f = [&](double w) { return k_of(sd, w) / std::max(w, 1e-300); };
  return -integrate_semi_infinite(f, 2.0 * s.omega_c);
}

double polaron_ei_quad(const SpectralDensity& a, const SpectralDensity& b) {
  validate(a);
  validate(b);
  const auto& sa = require_super_ohmic(a, "polaron_ei_quad");
  const auto& sb = require_super_ohmic(b, "polaron_ei_quad");
  const double scale = 2.0 * std::min(sa.omega_c, sb.omega_c);
  auto f = [&](double w) {
    return std::sqrt(k_of(a, w) * k_of(b, w)) / std::max(w, 1e-300);
  };
  return integrate_semi_infinite(f, scale);
}

double dressing_exponent(const SpectralDensity& sd, double beta) {
  validate(sd);
  if (beta <= 0) throw std::domain_error("dressing_exponent: beta must be > 0");
  const auto& s = require_super_ohmic(sd, "dressing_exponent");
  if (s.alpha == 0) return 0.0;
  const double wc = s.omega_c;
  const double eps = 1e-8 * wc;
  // Integrand a w exp(-w/wc)/wc^2 coth(beta w/2); limit 2a/(beta wc^2) at w=0.
  auto f = [&](double w) {
    if (w < eps) return 2.0 * s.alpha / (beta * wc * wc);
    return k_of(sd, w) / (w * w) / std::tanh(0.5 * beta * w);
  };
  // Twice the cutoff keeps the substituted integrand decaying at the far end.
  return 2.0 * integrate_semi_infinite(f, 2.0 * wc);
}

JointDressing joint_dressing(const SpectralDensity& a, const SpectralDensity& b,
                             double beta, bool same_bath) {
  validate(a);
  validate(b);
  if (beta <= 0) throw std::domain_error("joint_dressing: beta must be > 0");
  if (!same_bath) {
    const double cc = std::exp(-dressing_exponent(a, beta)) *
                      std::exp(-dressing_exponent(b, beta));
    return {cc, 0.0};
  }
  const auto& sa = require_super_ohmic(a, "joint_dressing");
  const auto& sb = require_super_ohmic(b, "joint_dressing");
  const double wc_min = std::min(sa.omega_c, sb.omega_c);
  const double scale = 2.0 * wc_min;
  const double eps = 1e-8 * wc_min;
  auto phi = [&](double sign) {
    auto f = [&](double w) {
      if (w < eps) {
        const double la = sa.alpha / (sa.omega_c * sa.omega_c);
        const double lb = sb.alpha / (sb.omega_c * sb.omega_c);
        const double cross = std::sqrt(la * lb);
        return 2.0 / beta * (la + lb + 2.0 * sign * cross);
      }
      const double ka = k_of(a, w), kb = k_of(b, w);
      const double s = std::sqrt(ka) + sign * std::sqrt(kb);
      return s * s / (w * w) / std::tanh(0.5 * beta * w);
    };
    return 2.0 * integrate_semi_infinite(f, scale);
  };
  const double ep = std::exp(-phi(+1.0));
  const double em = std::exp(-phi(-1.0));
  return {0.5 * (ep + em), -0.5 * (ep - em)};
}

}  // namespace spinbath
