#include "spinbath/mapping.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace spinbath {

namespace {

// Joint eigenbasis of a family of commuting Hermitian operators, found by
// refining degenerate blocks one operator at a time. Within a block every
// previously processed operator is scalar, so block-local rotations keep it
// diagonal.
struct JointBasis {
  Mat v;              // columns form the joint eigenbasis
  Eigen::MatrixXd s;  // s(n, a): eigenvalue of operator n in column a
};

JointBasis joint_eigenbasis(const std::vector<Mat>& ops) {
  const Eigen::Index d = ops.front().rows();
  JointBasis jb;
  jb.v = Mat::Identity(d, d);
  jb.s.resize(static_cast<Eigen::Index>(ops.size()), d);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks{{0, d}};
  for (size_t n = 0; n < ops.size(); ++n) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> next;
    for (const auto& [start, len] : blocks) {
      const Mat cols = jb.v.middleCols(start, len);
      const Mat block = cols.adjoint() * ops[n] * cols;
      const Eigensystem es = eigendecompose(block);
      jb.v.middleCols(start, len) = cols * es.vectors;
      for (Eigen::Index k = 0; k < len; ++k)
        jb.s(static_cast<Eigen::Index>(n), start + k) = es.values(k);
      // Split where eigenvalues separate.
      const double gap = 1e-8 * (1.0 + es.values.cwiseAbs().maxCoeff());
      Eigen::Index run = 0;
      for (Eigen::Index k = 1; k <= len; ++k) {
        if (k == len || es.values(k) - es.values(k - 1) > gap) {
          next.emplace_back(start + run, k - run);
          run = k;
        }
      }
    }
    blocks = std::move(next);
  }
  return jb;
}

}  // namespace

EffectiveHamiltonian effh_generic(const Mat& h_s,
                                  const std::vector<BathAttachment>& attachments) {
  if (!is_hermitian(h_s, kHermTol))
    throw std::domain_error("effh_generic: system Hamiltonian is not Hermitian");
  const Eigen::Index d = h_s.rows();
  for (const auto& att : attachments) {
    if (att.op.rows() != d || att.op.cols() != d)
      throw std::domain_error("effh_generic: coupling operator dimension mismatch");
    if (!is_hermitian(att.op, kHermTol))
      throw std::domain_error("effh_generic: coupling operator is not Hermitian");
    if (att.rc.omega <= 0)
      throw std::domain_error("effh_generic: omega must be > 0");
  }
  for (size_t n = 0; n < attachments.size(); ++n)
    for (size_t m = n + 1; m < attachments.size(); ++m) {
      const Mat comm = attachments[n].op * attachments[m].op -
                       attachments[m].op * attachments[n].op;
      if (comm.norm() > 1e-10)
        throw std::domain_error("effh_generic: coupling operators do not commute");
    }

  EffectiveHamiltonian out;
  out.picture = Picture::Effh;
  out.scheme = "generic";
  if (attachments.empty()) {
    out.h = h_s;
    return out;
  }

  std::vector<Mat> ops;
  ops.reserve(attachments.size());
  for (const auto& att : attachments) ops.push_back(att.op);
  const JointBasis jb = joint_eigenbasis(ops);

  Mat g = jb.v.adjoint() * h_s * jb.v;
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) {
      double expo = 0.0;
      for (size_t n = 0; n < attachments.size(); ++n) {
        const RCParams& rc = attachments[n].rc;
        const double ds = jb.s(static_cast<Eigen::Index>(n), a) -
                          jb.s(static_cast<Eigen::Index>(n), b);
        expo += rc.lambda * rc.lambda / (2.0 * rc.omega * rc.omega) * ds * ds;
      }
      g(a, b) *= std::exp(-expo);
    }
  out.h = jb.v * g * jb.v.adjoint();
  for (const auto& att : attachments)
    out.h -= att.rc.lambda * att.rc.lambda / att.rc.omega * (att.op * att.op);
  return out;
}

namespace {

// Per-bath dressing entering the closed-form chain Hamiltonians. The same
// structure serves both pictures:
//   EFFH:    dress=e^{-2l^2/w^2}, xshift=l^2/w, mixers from e^{-8l^2/w^2},
//            e0=-l^2/w per site.
//   Polaron: dress=<C>, xshift=E_I, mixers (<CC>, <SS>), e0=E0 per site.
struct BathDressing {
  double dress;
  double xshift;
  double mixp;
  double mixm;
  double e0;
};

Mat dressed_chain(const ChainSpec& chain, SchemeKind kind,
                  const std::vector<BathDressing>& baths) {
  check_site_count(chain.n_sites);
  if (static_cast<int>(chain.deltas.size()) != chain.n_sites)
    throw std::domain_error("ChainSpec: deltas must have one entry per site");
  const auto groups = bath_sites(kind, chain.n_sites);
  if (groups.size() != baths.size())
    throw std::domain_error("dressed chain: one dressing per bath required");
  std::vector<int> bath_of(chain.n_sites + 1, -1);
  for (size_t b = 0; b < groups.size(); ++b)
    for (int site : groups[b]) bath_of[site] = static_cast<int>(b);

  const long dim = 1L << chain.n_sites;
  Mat h = Mat::Zero(dim, dim);
  double constant = 0.0;
  for (int i = 1; i <= chain.n_sites; ++i) {
    const BathDressing& bd = baths[bath_of[i]];
    const double dz = chain.deltas[i - 1] * bd.dress;
    if (dz != 0.0) h += dz * pauli_site(chain.n_sites, {i, Axis::Z});
    constant += bd.e0;
  }
  for (int i = 1; i < chain.n_sites; ++i) {
    const int a = bath_of[i], b = bath_of[i + 1];
    double cx, cy, cz;
    if (a == b) {
      const BathDressing& bd = baths[a];
      cx = chain.jx - 2.0 * bd.xshift;
      cy = chain.jy * bd.mixp + chain.jz * bd.mixm;
      cz = chain.jz * bd.mixp + chain.jy * bd.mixm;
    } else {
      const double dd = baths[a].dress * baths[b].dress;
      cx = chain.jx;
      cy = chain.jy * dd;
      cz = chain.jz * dd;
    }
    if (cx != 0.0) h += cx * pauli_pair(chain.n_sites, i, i + 1, Axis::X);
    if (cy != 0.0) h += cy * pauli_pair(chain.n_sites, i, i + 1, Axis::Y);
    if (cz != 0.0) h += cz * pauli_pair(chain.n_sites, i, i + 1, Axis::Z);
  }
  // Bath-induced x coupling between non-adjacent spins sharing a bath.
  for (int i = 1; i <= chain.n_sites; ++i)
    for (int j = i + 2; j <= chain.n_sites; ++j) {
      if (bath_of[i] != bath_of[j]) continue;
      const double c = -2.0 * baths[bath_of[i]].xshift;
      if (c != 0.0) h += c * pauli_pair(chain.n_sites, i, j, Axis::X);
    }
  if (constant != 0.0) h += constant * Mat::Identity(dim, dim);
  return h;
}

BathDressing effh_dressing(const RCParams& rc) {
  if (rc.omega <= 0) throw std::domain_error("RCParams: omega must be > 0");
  if (rc.lambda < 0) throw std::domain_error("RCParams: lambda must be >= 0");
  const double r = rc.lambda * rc.lambda / (rc.omega * rc.omega);
  const double shift = rc.lambda * rc.lambda / rc.omega;
  const double e8 = std::exp(-8.0 * r);
  return {std::exp(-2.0 * r), shift, 0.5 * (1.0 + e8), 0.5 * (1.0 - e8), -shift};
}

}  // namespace

EffectiveHamiltonian effh_chain(const ChainSpec& chain, SchemeKind kind,
                                const std::vector<RCParams>& rcs) {
  if (static_cast<int>(rcs.size()) != bath_count(kind, chain.n_sites))
    throw std::domain_error(std::string("effh_chain: ") + scheme_name(kind) +
                            " scheme needs one RCParams per bath");
  std::vector<BathDressing> baths;
  baths.reserve(rcs.size());
  for (const auto& rc : rcs) baths.push_back(effh_dressing(rc));
  EffectiveHamiltonian out;
  out.h = dressed_chain(chain, kind, baths);
  out.picture = Picture::Effh;
  out.scheme = scheme_name(kind);
  return out;
}

EffectiveHamiltonian effh_global(const ChainSpec& chain, const RCParams& rc) {
  return effh_chain(chain, SchemeKind::Global, {rc});
}

EffectiveHamiltonian effh_local(const ChainSpec& chain,
                                const std::vector<RCParams>& rcs) {
  return effh_chain(chain, SchemeKind::Local, rcs);
}

EffectiveHamiltonian effh_half(const ChainSpec& chain, const RCParams& rc_left,
                               const RCParams& rc_right) {
  return effh_chain(chain, SchemeKind::HalfAndHalf, {rc_left, rc_right});
}

EffectiveHamiltonian effh_pairwise(const ChainSpec& chain,
                                   const std::vector<RCParams>& rcs) {
  return effh_chain(chain, SchemeKind::Pairwise, rcs);
}

EffectiveHamiltonian effh_fully_connected(const FullyConnectedSpec& spec,
                                          const RCParams& rc) {
  if (spec.n_sites < 2)
    throw std::domain_error("FullyConnectedSpec: n_sites must be >= 2");
  check_site_count(spec.n_sites);
  const BathDressing bd = effh_dressing(rc);
  const long dim = 1L << spec.n_sites;
  Mat h = Mat::Zero(dim, dim);
  const double dz = -0.5 * spec.delta * bd.dress;
  for (int i = 1; i <= spec.n_sites; ++i)
    h += dz * pauli_site(spec.n_sites, {i, Axis::Z});
  const double c = spec.j * spec.delta / 8.0 - bd.xshift;
  h += c * spec.n_sites * Mat::Identity(dim, dim);
  for (int i = 1; i <= spec.n_sites; ++i)
    for (int j = i + 1; j <= spec.n_sites; ++j)
      h += 2.0 * c * pauli_pair(spec.n_sites, i, j, Axis::X);
  EffectiveHamiltonian out;
  out.h = std::move(h);
  out.picture = Picture::Effh;
  out.scheme = "fully_connected";
  return out;
}

namespace {

std::mutex g_coeff_mutex;
std::map<std::tuple<double, double, double>, PolaronCoefficients> g_coeff_cache;

}  // namespace

PolaronCoefficients polaron_coefficients(const SpectralDensity& bath,
                                         double beta) {
  const auto* s = std::get_if<SuperOhmic>(&bath);
  if (!s)
    throw std::domain_error(
        "polaron: only super-Ohmic baths are supported in this picture");
  if (beta <= 0) throw std::domain_error("polaron: beta must be > 0");
  const std::tuple<double, double, double> key{s->alpha, s->omega_c, beta};
  {
    std::lock_guard<std::mutex> lock(g_coeff_mutex);
    auto it = g_coeff_cache.find(key);
    if (it != g_coeff_cache.end()) return it->second;
  }
  PolaronCoefficients pc;
  pc.e0 = polaron_e0(bath);
  pc.c = std::exp(-dressing_exponent(bath, beta));
  const JointDressing jd = joint_dressing(bath, bath, beta, true);
  pc.cc = jd.cc;
  pc.ss = jd.ss;
  pc.ei = polaron_ei(bath, bath);
  std::lock_guard<std::mutex> lock(g_coeff_mutex);
  g_coeff_cache.emplace(key, pc);
  return pc;
}

EffectiveHamiltonian polaron_hamiltonian(const BathScheme& scheme,
                                         const ChainSpec& chain, double beta) {
  validate(scheme, chain.n_sites);
  std::vector<BathDressing> baths;
  baths.reserve(scheme.baths.size());
  for (const auto& sd : scheme.baths) {
    const PolaronCoefficients pc = polaron_coefficients(sd, beta);
    baths.push_back({pc.c, pc.ei, pc.cc, pc.ss, pc.e0});
  }
  EffectiveHamiltonian out;
  out.h = dressed_chain(chain, scheme.kind, baths);
  out.picture = Picture::Polaron;
  out.scheme = scheme_name(scheme.kind);
  out.beta = beta;
  return out;
}

EffectiveHamiltonian polaron_fully_connected(const FullyConnectedSpec& spec,
                                             const SpectralDensity& bath,
                                             double beta) {
  if (spec.n_sites < 2)
    throw std::domain_error("FullyConnectedSpec: n_sites must be >= 2");
  check_site_count(spec.n_sites);
  const PolaronCoefficients pc = polaron_coefficients(bath, beta);
  const long dim = 1L << spec.n_sites;
  Mat h = Mat::Zero(dim, dim);
  const double dz = -0.5 * spec.delta * pc.c;
  for (int i = 1; i <= spec.n_sites; ++i)
    h += dz * pauli_site(spec.n_sites, {i, Axis::Z});
  const double c = spec.j * spec.delta / 8.0 - pc.ei;
  h += c * spec.n_sites * Mat::Identity(dim, dim);
  for (int i = 1; i <= spec.n_sites; ++i)
    for (int j = i + 1; j <= spec.n_sites; ++j)
      h += 2.0 * c * pauli_pair(spec.n_sites, i, j, Axis::X);
  EffectiveHamiltonian out;
  out.h = std::move(h);
  out.picture = Picture::Polaron;
  out.scheme = "fully_connected";
  out.beta = beta;
  return out;
}

}  // namespace spinbath
