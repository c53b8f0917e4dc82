#include "spinbath/spinops.hpp"

#include <string>

extern "C" {
void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a,
             const int* lda, double* w, double* work, const int* lwork,
             int* iwork, const int* liwork, int* info);
void zheevd_(const char* jobz, const char* uplo, const int* n,
             std::complex<double>* a, const int* lda, double* w,
             std::complex<double>* work, const int* lwork, double* rwork,
             const int* lrwork, int* iwork, const int* liwork, int* info);
}

namespace spinbath {

void check_site_count(int n_sites) {
  if (n_sites < 1)
    throw std::domain_error("site count must be positive");
  if (n_sites > kMaxSites)
    throw std::domain_error("site count " + std::to_string(n_sites) +
                            " exceeds the dense-storage cap of " +
                            std::to_string(kMaxSites));
}

Mat pauli(Axis axis) {
  Mat m(2, 2);
  const cplx i(0.0, 1.0);
  switch (axis) {
    case Axis::X:
      m << 0, 1, 1, 0;
      break;
    case Axis::Y:
      m << 0, -i, i, 0;
      break;
    case Axis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat pauli_site(int n_sites, SiteAxis loc) {
  check_site_count(n_sites);
  if (loc.site < 1 || loc.site > n_sites)
    throw std::domain_error("site index " + std::to_string(loc.site) +
                            " out of range [1, " + std::to_string(n_sites) + "]");
  const long dim = 1L << n_sites;
  // Site 1 is the leftmost factor, hence the highest bit of the basis index.
  const long bit = 1L << (n_sites - loc.site);
  Mat out = Mat::Zero(dim, dim);
  const Mat s = pauli(loc.axis);
  for (long a = 0; a < dim; ++a) {
    const int b = (a & bit) ? 1 : 0;
    for (int bp = 0; bp < 2; ++bp) {
      const cplx v = s(bp, b);
      if (v != cplx(0.0, 0.0)) {
        const long ap = (a & ~bit) | (bp ? bit : 0L);
        out(ap, a) = v;
      }
    }
  }
  return out;
}

Mat pauli_pair(int n_sites, int site_i, int site_j, Axis axis) {
  check_site_count(n_sites);
  if (site_i == site_j)
    throw std::domain_error("pauli_pair: sites must differ");
  for (int s : {site_i, site_j})
    if (s < 1 || s > n_sites)
      throw std::domain_error("pauli_pair: site index out of range");
  const long dim = 1L << n_sites;
  const long bi = 1L << (n_sites - site_i);
  const long bj = 1L << (n_sites - site_j);
  Mat out = Mat::Zero(dim, dim);
  const cplx im(0.0, 1.0);
  for (long a = 0; a < dim; ++a) {
    switch (axis) {
      case Axis::X:
        out(a ^ (bi | bj), a) = 1.0;
        break;
      case Axis::Y: {
        const double pi = (a & bi) ? -1.0 : 1.0;
        const double pj = (a & bj) ? -1.0 : 1.0;
        out(a ^ (bi | bj), a) = (im * pi) * (im * pj);
        break;
      }
      case Axis::Z: {
        const double pi = (a & bi) ? -1.0 : 1.0;
        const double pj = (a & bj) ? -1.0 : 1.0;
        out(a, a) = pi * pj;
        break;
      }
    }
  }
  return out;
}

Mat compose(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows())
    throw std::domain_error("compose: dimension mismatch");
  return a * b;
}

Mat scale_add(const std::vector<std::pair<double, Mat>>& terms) {
  if (terms.empty()) throw std::domain_error("scale_add: empty term list");
  Mat out = terms.front().first * terms.front().second;
  for (size_t k = 1; k < terms.size(); ++k) {
    if (terms[k].second.rows() != out.rows() ||
        terms[k].second.cols() != out.cols())
      throw std::domain_error("scale_add: dimension mismatch");
    out += terms[k].first * terms[k].second;
  }
  return out;
}

Mat adjoint(const Mat& a) { return a.adjoint(); }

cplx trace(const Mat& a) {
  if (a.rows() != a.cols()) throw std::domain_error("trace: non-square matrix");
  return a.trace();
}

bool is_hermitian(const Mat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_real(const Mat& a, double tol) {
  return a.imag().cwiseAbs().maxCoeff() <= tol;
}

namespace {

Eigensystem eig_real(const Eigen::MatrixXd& h) {
  const int n = static_cast<int>(h.rows());
  Eigen::MatrixXd v = h;
  Eigen::VectorXd w(n);
  int info = 0, lwork = -1, liwork = -1, iwq = 0;
  double wq = 0;
  dsyevd_("V", "L", &n, v.data(), &n, w.data(), &wq, &lwork, &iwq, &liwork,
          &info);
  lwork = static_cast<int>(wq);
  liwork = iwq;
  std::vector<double> work(lwork);
  std::vector<int> iwork(liwork);
  dsyevd_("V", "L", &n, v.data(), &n, w.data(), work.data(), &lwork,
          iwork.data(), &liwork, &info);
  if (info != 0)
    throw std::runtime_error("dsyevd failed, info=" + std::to_string(info));
  Eigensystem out;
  out.values = std::move(w);
  out.vectors = v.cast<cplx>();
  return out;
}

Eigensystem eig_complex(const Mat& h) {
  const int n = static_cast<int>(h.rows());
  Mat v = h;
  Eigen::VectorXd w(n);
  int info = 0, lwork = -1, lrwork = -1, liwork = -1, iwq = 0;
  cplx wq(0, 0);
  double rwq = 0;
  zheevd_("V", "L", &n, v.data(), &n, w.data(), &wq, &lwork, &rwq, &lrwork,
          &iwq, &liwork, &info);
  lwork = static_cast<int>(wq.real());
  lrwork = static_cast<int>(rwq);
  liwork = iwq;
  std::vector<cplx> work(lwork);
  std::vector<double> rwork(lrwork);
  std::vector<int> iwork(liwork);
  zheevd_("V", "L", &n, v.data(), &n, w.data(), work.data(), &lwork,
          rwork.data(), &lrwork, iwork.data(), &liwork, &info);
  if (info != 0)
    throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  Eigensystem out;
  out.values = std::move(w);
  out.vectors = std::move(v);
  return out;
}

}  // namespace

Eigensystem eigendecompose(const Mat& h) {
  if (h.rows() != h.cols())
    throw std::domain_error("eigendecompose: non-square matrix");
  if (!is_hermitian(h, kHermTol))
    throw std::domain_error("eigendecompose: matrix is not Hermitian within 1e-12");
  const Mat sym = (h + h.adjoint()) / 2.0;
  if (is_real(sym)) return eig_real(sym.real());
  return eig_complex(sym);
}

}  // namespace spinbath
