#include "cforge/linalg.hpp"

#include <cmath>

#include "cforge/errors.hpp"

namespace cforge {

namespace pauli {

const ComplexMatrix& x() {
  static const ComplexMatrix m = [] {
    ComplexMatrix s(2, 2);
    s << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    return s;
  }();
  return m;
}

const ComplexMatrix& y() {
  static const ComplexMatrix m = [] {
    ComplexMatrix s(2, 2);
    s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return s;
  }();
  return m;
}

const ComplexMatrix& z() {
  static const ComplexMatrix m = [] {
    ComplexMatrix s(2, 2);
    s << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
    return s;
  }();
  return m;
}

}  // namespace pauli

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

double hermiticity_deviation(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_deviation(m) <= tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

namespace {

// Closed-form 2x2 Hermitian eigendecomposition. The eigenvector pair is
// picked from whichever algebraic form stays well conditioned for the sign
// of d = (m00 - m11)/2.
HermitianEigen herm_eig_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double b = m(1, 1).real();
  const Complex c = m(0, 1);
  const double d = 0.5 * (a - b);
  const double h = std::hypot(d, std::abs(c));
  const double mean = 0.5 * (a + b);

  HermitianEigen out;
  out.eigenvalues = RealVector(2);
  out.eigenvalues << mean - h, mean + h;
  out.eigenvectors = ComplexMatrix(2, 2);

  if (h == 0.0) {
    out.eigenvectors = ComplexMatrix::Identity(2, 2);
    return out;
  }
  Complex v0_0, v0_1, v1_0, v1_1;
  if (d >= 0.0) {
    v1_0 = Complex(h + d, 0.0);
    v1_1 = std::conj(c);
    v0_0 = -c;
    v0_1 = Complex(h + d, 0.0);
  } else {
    v1_0 = c;
    v1_1 = Complex(h - d, 0.0);
    v0_0 = Complex(-(h - d), 0.0);
    v0_1 = std::conj(c);
  }
  const double norm = std::sqrt(std::norm(v0_0) + std::norm(v0_1));
  out.eigenvectors << v0_0 / norm, v1_0 / norm, v0_1 / norm, v1_1 / norm;
  return out;
}

}  // namespace

HermitianEigen herm_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw NotHermitian("matrix is not square");
  const double dev = hermiticity_deviation(m);
  if (dev > kHermTol) {
    throw NotHermitian("hermiticity deviation " + std::to_string(dev) + " exceeds tolerance");
  }
  // Work on the symmetrized matrix so the result is exactly Hermitian.
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  if (m.rows() == 2) return herm_eig_2x2(sym);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  HermitianEigen out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  HermitianEigen eig = herm_eig(m);
  const double scale = std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
  // Rounding-scale eigenvalues are exact zeros of the input (e.g. rank-1
  // projectors); without this the square root picks up sqrt(eps) noise.
  const double zero_band = 1e-14 * scale;
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues[i];
    if (lambda < -kPsdClamp) throw NotPsd(lambda);
    if (lambda < zero_band) lambda = 0.0;
    roots[i] = std::sqrt(lambda);
  }
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index da = a.rows();
  const Eigen::Index db = b.rows();
  ComplexMatrix out(da * db, a.cols() * b.cols());
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * db, j * b.cols(), db, b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int keep, std::pair<int, int> dims) {
  const int da = dims.first;
  const int db = dims.second;
  if (da <= 0 || db <= 0 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(da) * db) {
    throw DimMismatch("partial_trace: matrix dimension does not equal dim_a * dim_b");
  }
  if (keep != 0 && keep != 1) throw DimMismatch("partial_trace: keep must be 0 or 1");

  if (keep == 0) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

}  // namespace cforge
