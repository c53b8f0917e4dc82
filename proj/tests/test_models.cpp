#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinbath/models.hpp"

using namespace spinbath;

namespace {

double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("heisenberg_chain closed-form spectra") {
  // Isotropic two-site exchange: singlet at -3, triplet at +1.
  const Mat h = heisenberg_chain(ChainSpec::uniform(2, 0.0, 1.0, 1.0, 1.0));
  const Eigensystem es = eigendecompose(h);
  CHECK(es.values(0) == doctest::Approx(-3.0));
  CHECK(es.values(1) == doctest::Approx(1.0));
  CHECK(es.values(2) == doctest::Approx(1.0));
  CHECK(es.values(3) == doctest::Approx(1.0));

  const Mat free_spin = heisenberg_chain({1, {0.5}, 0, 0, 0});
  CHECK(free_spin(0, 0) == cplx(0.5, 0));
  CHECK(free_spin(1, 1) == cplx(-0.5, 0));

  const Mat xx = heisenberg_chain(ChainSpec::uniform(2, 0.0, 1.0, 0.0, 0.0));
  CHECK(max_abs(xx - kron(pauli(Axis::X), pauli(Axis::X))) == 0.0);

  CHECK_THROWS_AS(heisenberg_chain({2, {0.1}, 1, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(heisenberg_chain(ChainSpec::uniform(13, 0.1, 1, 0, 0)),
                  std::domain_error);
}

TEST_CASE("ising_chain forces jy = jz = 0") {
  ChainSpec spec = ChainSpec::uniform(2, 0.1, 1.0, 0.7, 0.3);
  const Mat h = ising_chain(spec);
  spec.jy = spec.jz = 0.0;
  CHECK(max_abs(h - heisenberg_chain(spec)) == 0.0);

  // 0.1(sz1+sz2) + sx sx decomposes into two 2x2 blocks with gaps
  // 2 sqrt(0.04+1) and 2 sqrt(0+1).
  const Eigensystem es = eigendecompose(h);
  const double a = std::sqrt(1.04);
  CHECK(es.values(0) == doctest::Approx(-a));
  CHECK(es.values(1) == doctest::Approx(-1.0));
  CHECK(es.values(2) == doctest::Approx(1.0));
  CHECK(es.values(3) == doctest::Approx(a));

  // Zero exchange: free spins with ground energy -sum delta.
  const Mat free4 = ising_chain(ChainSpec::uniform(4, 0.3, 0.0, 0.0, 0.0));
  CHECK(eigendecompose(free4).values(0) == doctest::Approx(-1.2));

  // Zero field: x-basis AFM ground state is doubly degenerate.
  const Eigensystem afm =
      eigendecompose(ising_chain(ChainSpec::uniform(4, 0.0, 1.0, 0.0, 0.0)));
  CHECK(afm.values(0) == doctest::Approx(afm.values(1)));
  CHECK(afm.values(2) > afm.values(1) + 1e-9);
}

TEST_CASE("fully_connected_ising structure") {
  const Mat free2 = fully_connected_ising({2, 0.1, 0.0});
  Mat expect = -0.05 * (pauli_site(2, {1, Axis::Z}) + pauli_site(2, {2, Axis::Z}));
  CHECK(max_abs(free2 - expect) == 0.0);

  // The double sum counts each i != j pair twice: coefficient 2*(J Delta/8).
  const Mat h = fully_connected_ising({2, 0.1, 3.0});
  const double coeff =
      (h * pauli_pair(2, 1, 2, Axis::X)).trace().real() / 4.0;
  CHECK(coeff == doctest::Approx(0.075).epsilon(1e-12));

  // The i=j diagonal terms are a pure identity shift of (J Delta/8) N.
  const Mat no_shift =
      h - 3.0 * 0.1 / 8.0 * 2.0 * Mat::Identity(4, 4);
  CHECK(std::abs(no_shift.trace()) <= 1e-12);

  CHECK_THROWS_AS(fully_connected_ising({1, 0.1, 1.0}), std::domain_error);
}

TEST_CASE("bath bookkeeping per scheme") {
  CHECK(bath_count(SchemeKind::Global, 6) == 1);
  CHECK(bath_count(SchemeKind::Local, 6) == 6);
  CHECK(bath_count(SchemeKind::HalfAndHalf, 6) == 2);
  CHECK(bath_count(SchemeKind::Pairwise, 6) == 3);

  const auto half = bath_sites(SchemeKind::HalfAndHalf, 4);
  CHECK(half[0] == std::vector<int>{1, 2});
  CHECK(half[1] == std::vector<int>{3, 4});
  const auto pair = bath_sites(SchemeKind::Pairwise, 6);
  CHECK(pair[2] == std::vector<int>{5, 6});
  CHECK(bath_sites(SchemeKind::Local, 3).size() == 3);

  CHECK_THROWS_AS(bath_sites(SchemeKind::Pairwise, 5), std::domain_error);
  CHECK_THROWS_AS(bath_sites(SchemeKind::HalfAndHalf, 3), std::domain_error);
}

TEST_CASE("BathScheme validation") {
  const SpectralDensity so = SuperOhmic{0.3, 0.5};
  const SpectralDensity br = Brownian{1.0, 8.0, 0.05};
  CHECK_NOTHROW(validate(BathScheme{SchemeKind::Global, {so}}, 4));
  CHECK_THROWS_AS(validate(BathScheme{SchemeKind::Global, {so, so}}, 4),
                  std::domain_error);
  CHECK_THROWS_AS(validate(BathScheme{SchemeKind::Local, {so, so, so}}, 4),
                  std::domain_error);
  CHECK_THROWS_AS(validate(BathScheme{SchemeKind::HalfAndHalf, {so, br}}, 4),
                  std::domain_error);
}

TEST_CASE("coupling operators per scheme") {
  const auto glob = coupling_operators(SchemeKind::Global, 2);
  REQUIRE(glob.size() == 1);
  const Eigensystem es = eigendecompose(glob[0]);
  CHECK(es.values(0) == doctest::Approx(-2.0));
  CHECK(es.values(1) == doctest::Approx(0.0));
  CHECK(es.values(2) == doctest::Approx(0.0));
  CHECK(es.values(3) == doctest::Approx(2.0));

  const auto pair = coupling_operators(SchemeKind::Pairwise, 4);
  REQUIRE(pair.size() == 2);
  CHECK(max_abs(pair[0] - (pauli_site(4, {1, Axis::X}) +
                           pauli_site(4, {2, Axis::X}))) == 0.0);
  CHECK(max_abs(pair[1] - (pauli_site(4, {3, Axis::X}) +
                           pauli_site(4, {4, Axis::X}))) == 0.0);

  for (SchemeKind k : {SchemeKind::Global, SchemeKind::Local,
                       SchemeKind::HalfAndHalf, SchemeKind::Pairwise}) {
    const auto ops = coupling_operators(k, 4);
    for (size_t a = 0; a < ops.size(); ++a)
      for (size_t b = a + 1; b < ops.size(); ++b)
        CHECK(max_abs(ops[a] * ops[b] - ops[b] * ops[a]) == 0.0);
  }
}

TEST_CASE("global coupling operator squared expands into pair terms") {
  for (int n : {2, 3, 4, 6}) {
    const Mat s = coupling_operators(SchemeKind::Global, n)[0];
    const long dim = 1L << n;
    Mat expect = static_cast<double>(n) * Mat::Identity(dim, dim);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        expect += 2.0 * pauli_pair(n, i, j, Axis::X);
    CHECK(max_abs(s * s - expect) == 0.0);
  }
}
