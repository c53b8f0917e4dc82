#include "spinbath/models.hpp"

#include <stdexcept>
#include <string>

namespace spinbath {

const char* scheme_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::Global: return "global";
    case SchemeKind::Local: return "local";
    case SchemeKind::HalfAndHalf: return "half_and_half";
    default: return "pairwise";
  }
}

int bath_count(SchemeKind kind, int n_sites) {
  switch (kind) {
    case SchemeKind::Global: return 1;
    case SchemeKind::Local: return n_sites;
    case SchemeKind::HalfAndHalf: return 2;
    default: return n_sites / 2;
  }
}

std::vector<std::vector<int>> bath_sites(SchemeKind kind, int n_sites) {
  check_site_count(n_sites);
  if ((kind == SchemeKind::HalfAndHalf || kind == SchemeKind::Pairwise) &&
      n_sites % 2 != 0)
    throw std::domain_error(std::string(scheme_name(kind)) +
                            " scheme requires an even number of sites");
  std::vector<std::vector<int>> out;
  switch (kind) {
    case SchemeKind::Global: {
      std::vector<int> all(n_sites);
      for (int i = 0; i < n_sites; ++i) all[i] = i + 1;
      out.push_back(std::move(all));
      break;
    }
    case SchemeKind::Local:
      for (int i = 1; i <= n_sites; ++i) out.push_back({i});
      break;
    case SchemeKind::HalfAndHalf: {
      std::vector<int> left, right;
      for (int i = 1; i <= n_sites / 2; ++i) left.push_back(i);
      for (int i = n_sites / 2 + 1; i <= n_sites; ++i) right.push_back(i);
      out.push_back(std::move(left));
      out.push_back(std::move(right));
      break;
    }
    case SchemeKind::Pairwise:
      for (int n = 1; n <= n_sites / 2; ++n) out.push_back({2 * n - 1, 2 * n});
      break;
  }
  return out;
}

void validate(const BathScheme& scheme, int n_sites) {
  const int want = bath_count(scheme.kind, n_sites);
  bath_sites(scheme.kind, n_sites);  // checks parity
  if (static_cast<int>(scheme.baths.size()) != want)
    throw std::domain_error(std::string(scheme_name(scheme.kind)) +
                            " scheme on N=" + std::to_string(n_sites) +
                            " requires " + std::to_string(want) + " baths, got " +
                            std::to_string(scheme.baths.size()));
  bool any_brownian = false, any_super = false;
  for (const auto& sd : scheme.baths) {
    validate(sd);
    (std::holds_alternative<Brownian>(sd) ? any_brownian : any_super) = true;
  }
  if (any_brownian && any_super)
    throw std::domain_error("mixed Brownian/super-Ohmic baths in one scheme");
}

Mat heisenberg_chain(const ChainSpec& spec) {
  check_site_count(spec.n_sites);
  if (static_cast<int>(spec.deltas.size()) != spec.n_sites)
    throw std::domain_error("ChainSpec: deltas must have one entry per site");
  const long dim = 1L << spec.n_sites;
  Mat h = Mat::Zero(dim, dim);
  for (int i = 1; i <= spec.n_sites; ++i)
    h += spec.deltas[i - 1] * pauli_site(spec.n_sites, {i, Axis::Z});
  const double js[3] = {spec.jx, spec.jy, spec.jz};
  const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
  for (int a = 0; a < 3; ++a) {
    if (js[a] == 0.0) continue;
    for (int i = 1; i < spec.n_sites; ++i)
      h += js[a] * pauli_pair(spec.n_sites, i, i + 1, axes[a]);
  }
  return h;
}

Mat ising_chain(const ChainSpec& spec) {
  ChainSpec s = spec;
  s.jy = 0.0;
  s.jz = 0.0;
  return heisenberg_chain(s);
}

Mat fully_connected_ising(const FullyConnectedSpec& spec) {
  if (spec.n_sites < 2)
    throw std::domain_error("FullyConnectedSpec: n_sites must be >= 2");
  check_site_count(spec.n_sites);
  const long dim = 1L << spec.n_sites;
  Mat h = Mat::Zero(dim, dim);
  for (int i = 1; i <= spec.n_sites; ++i)
    h += -0.5 * spec.delta * pauli_site(spec.n_sites, {i, Axis::Z});
  const double c = spec.j * spec.delta / 8.0;
  // The i=j diagonal terms contribute c*N*I.
  h += c * spec.n_sites * Mat::Identity(dim, dim);
  for (int i = 1; i <= spec.n_sites; ++i)
    for (int j = i + 1; j <= spec.n_sites; ++j)
      h += 2.0 * c * pauli_pair(spec.n_sites, i, j, Axis::X);
  return h;
}

std::vector<Mat> coupling_operators(SchemeKind kind, int n_sites) {
  const auto groups = bath_sites(kind, n_sites);
  const long dim = 1L << n_sites;
  std::vector<Mat> ops;
  ops.reserve(groups.size());
  for (const auto& sites : groups) {
    Mat s = Mat::Zero(dim, dim);
    for (int site : sites) s += pauli_site(n_sites, {site, Axis::X});
    ops.push_back(std::move(s));
  }
  return ops;
}

}  // namespace spinbath
