#include <doctest.h>

#include "cforge/errors.hpp"
#include "cforge/linalg.hpp"
#include "test_support.hpp"

using namespace cforge;

TEST_CASE("herm_eig on pauli z") {
  const HermitianEigen eig = herm_eig(pauli::z());
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("herm_eig on identity") {
  const HermitianEigen eig = herm_eig(identity(2));
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, identity(2)) < 1e-12);
}

TEST_CASE("herm_eig reconstruction and unitarity on random hermitians") {
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng(1000 + trial);
    const int dim = (trial % 3 == 0) ? 4 : 2;
    const ComplexMatrix h = testsupport::random_hermitian(rng, dim);
    const HermitianEigen eig = herm_eig(h);
    const ComplexMatrix rebuilt =
        eig.eigenvectors * eig.eigenvalues.asDiagonal() * eig.eigenvectors.adjoint();
    CHECK(max_abs_diff(rebuilt, h) < 1e-9);
    CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, identity(dim)) < 1e-9);
    for (Eigen::Index i = 1; i < eig.eigenvalues.size(); ++i) {
      CHECK(eig.eigenvalues[i] >= eig.eigenvalues[i - 1]);
    }
    // eigenvalue sum equals trace
    CHECK(eig.eigenvalues.sum() == doctest::Approx(h.trace().real()).epsilon(1e-9));
  }
}

TEST_CASE("herm_eig near-diagonal and degenerate corners") {
  ComplexMatrix m(2, 2);
  m << 3.0, Complex(0, 0), Complex(0, 0), -2.0;
  const HermitianEigen eig = herm_eig(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-2.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(3.0));
  CHECK(max_abs_diff(eig.eigenvectors * eig.eigenvalues.asDiagonal() *
                         eig.eigenvectors.adjoint(),
                     m) < 1e-12);
}

TEST_CASE("herm_eig rejects non-hermitian input") {
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(0.5, 0.5), Complex(0.4, 0.2), 1.0;
  CHECK_THROWS_AS(herm_eig(m), NotHermitian);
}

TEST_CASE("psd_sqrt basics") {
  CHECK(max_abs_diff(psd_sqrt(identity(2)), identity(2)) < 1e-12);
  ComplexMatrix d(2, 2);
  d << 4.0, 0.0, 0.0, 9.0;
  ComplexMatrix expected(2, 2);
  expected << 2.0, 0.0, 0.0, 3.0;
  CHECK(max_abs_diff(psd_sqrt(d), expected) < 1e-12);
}

TEST_CASE("psd_sqrt squares back to the effect") {
  // E+ of the two-outcome family with a+ = 0.5, a = (0.3, 0, 0)
  ComplexMatrix e = 0.5 * identity(2) + 0.3 * pauli::x();
  const ComplexMatrix root = psd_sqrt(e);
  CHECK(max_abs_diff(root * root, e) < 1e-10);
  CHECK(hermiticity_deviation(root) < 1e-12);

  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(33 + trial);
    const ComplexMatrix psd = testsupport::random_psd(rng, trial % 2 ? 2 : 4);
    const ComplexMatrix r = psd_sqrt(psd);
    CHECK(max_abs_diff(r * r, psd) < 1e-8 * std::max(1.0, psd.cwiseAbs().maxCoeff()));
    CHECK(herm_eig(r).eigenvalues[0] >= -1e-10);
  }
}

TEST_CASE("psd_sqrt clamps tiny negatives and rejects real ones") {
  ComplexMatrix slightly(2, 2);
  slightly << -5e-11, 0.0, 0.0, 1.0;
  const ComplexMatrix root = psd_sqrt(slightly);
  CHECK(std::abs(root(0, 0)) < 1e-5);

  ComplexMatrix bad(2, 2);
  bad << -1e-6, 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(psd_sqrt(bad), NotPsd);
}

TEST_CASE("tensor kronecker layout") {
  CHECK(max_abs_diff(tensor(identity(2), identity(2)), identity(4)) < 1e-15);

  const ComplexMatrix zi = tensor(pauli::z(), identity(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_abs_diff(zi, expected) < 1e-15);

  // index law spot check on random pairs + trace multiplicativity
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng(7 + trial);
    const ComplexMatrix a = testsupport::random_hermitian(rng, 2);
    const ComplexMatrix b = testsupport::random_hermitian(rng, 2);
    const ComplexMatrix t = tensor(a, b);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            CHECK(std::abs(t(i * 2 + k, j * 2 + l) - a(i, j) * b(k, l)) < 1e-14);
          }
    CHECK(std::abs(t.trace() - a.trace() * b.trace()) < 1e-12);
  }
}

TEST_CASE("partial_trace basics") {
  // Tr_A(I4/4) keeping B
  CHECK(max_abs_diff(partial_trace(0.25 * identity(4), 1, {2, 2}), 0.5 * identity(2)) < 1e-15);

  // Tr_A(|0><0| (x) rho) = rho
  Rng rng(99);
  const ComplexMatrix rho = testsupport::random_psd(rng, 2);
  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  CHECK(max_abs_diff(partial_trace(tensor(ket0, rho), 1, {2, 2}), rho) < 1e-12);
}

TEST_CASE("partial_trace of bell state gives maximally mixed reductions") {
  Eigen::Vector4cd bell;
  bell << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  const ComplexMatrix rho = bell * bell.adjoint();
  const ComplexMatrix expected = 0.5 * identity(2);
  CHECK(max_abs_diff(partial_trace(rho, 0, {2, 2}), expected) < 1e-12);
  CHECK(max_abs_diff(partial_trace(rho, 1, {2, 2}), expected) < 1e-12);
  // against the independent index-sum oracle
  CHECK(max_abs_diff(partial_trace(rho, 0, {2, 2}),
                     testsupport::partial_trace_oracle(rho, 0, 2, 2)) < 1e-15);
}

TEST_CASE("partial_trace factorizes tensor products") {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(4242 + trial);
    const ComplexMatrix a = testsupport::random_hermitian(rng, 2);
    const ComplexMatrix b = testsupport::random_hermitian(rng, 2);
    const ComplexMatrix t = tensor(a, b);
    CHECK(max_abs_diff(partial_trace(t, 0, {2, 2}), b.trace() * a) < 1e-10);
    CHECK(max_abs_diff(partial_trace(t, 1, {2, 2}), a.trace() * b) < 1e-10);
    // trace preservation
    CHECK(std::abs(partial_trace(t, 0, {2, 2}).trace() - t.trace()) < 1e-12);
  }
}

TEST_CASE("partial_trace dimension errors") {
  CHECK_THROWS_AS(partial_trace(identity(4), 0, {2, 3}), DimMismatch);
  CHECK_THROWS_AS(partial_trace(identity(4), 2, {2, 2}), DimMismatch);
}
