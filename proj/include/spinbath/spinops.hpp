#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spinbath {

using Mat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

// Dense-storage size limits: 2^12 spins bare, 8192 with oscillator modes.
inline constexpr int kMaxSites = 12;
inline constexpr long kMaxDim = 1L << kMaxSites;
inline constexpr long kMaxEnlargedDim = 8192;

// Absolute per-entry Hermiticity tolerance.
inline constexpr double kHermTol = 1e-12;

enum class Axis { X, Y, Z };

inline const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    default: return "z";
  }
}

struct SiteAxis {
  int site;  // 1-based, site 1 is the leftmost tensor factor
  Axis axis;
};

Mat pauli(Axis axis);
Mat kron(const Mat& a, const Mat& b);

// I (x) ... (x) sigma^axis (x) ... (x) I on an n_sites chain.
Mat pauli_site(int n_sites, SiteAxis loc);

// sigma^axis_i sigma^axis_j built directly from bit flips, avoiding a dense
// matrix product. i != j required.
Mat pauli_pair(int n_sites, int site_i, int site_j, Axis axis);

Mat compose(const Mat& a, const Mat& b);
Mat scale_add(const std::vector<std::pair<double, Mat>>& terms);
Mat adjoint(const Mat& a);
cplx trace(const Mat& a);

bool is_hermitian(const Mat& a, double tol = kHermTol);
// True when every imaginary part is below tol.
bool is_real(const Mat& a, double tol = 1e-13);

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  Mat vectors;             // columns are eigenvectors
};

// Hermitian eigendecomposition. Symmetrizes (A+A^H)/2 when within kHermTol,
// rejects anything further from Hermitian. Real-valued matrices take the
// real-symmetric LAPACK path, which is several times faster at large dim.
Eigensystem eigendecompose(const Mat& h);

void check_site_count(int n_sites);

}  // namespace spinbath
