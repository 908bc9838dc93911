#include "cforge/state.hpp"

#include <cmath>

#include "cforge/errors.hpp"

namespace cforge {

namespace {
// Floor applied to eigenvalues before taking logs.
constexpr double kEntropyFloor = 1e-15;
}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw DimMismatch("density matrix must be square and nonempty");
  }
  const double trace_dev = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (trace_dev > kStateTraceTol) {
    throw InvalidParams("density matrix trace deviates from 1 by " + std::to_string(trace_dev));
  }
  const HermitianEigen eig = herm_eig(matrix_);  // throws NotHermitian
  if (eig.eigenvalues[0] < -kStateEigTol) {
    throw NotPsd(eig.eigenvalues[0]);
  }
}

DensityMatrix from_bloch(const BlochVector& r) {
  if (r.norm_squared() > 1.0 + 2e-9) {
    throw OutsideBlochBall("Bloch vector norm " + std::to_string(r.norm()) + " exceeds 1");
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(0.5 * (1.0 + r.r3), 0.0);
  m(1, 1) = Complex(0.5 * (1.0 - r.r3), 0.0);
  m(0, 1) = Complex(0.5 * r.r1, -0.5 * r.r2);
  m(1, 0) = Complex(0.5 * r.r1, 0.5 * r.r2);
  return DensityMatrix(std::move(m));
}

BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw WrongDimension("to_bloch requires a qubit state");
  const ComplexMatrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  out.diagonal() = rho.matrix().diagonal();
  return DensityMatrix(std::move(out));
}

double shannon_entropy_bits(const RealVector& probabilities) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (p > kEntropyFloor) sum -= p * std::log2(p);
  }
  return sum;
}

double entropy(const DensityMatrix& rho) {
  return shannon_entropy_bits(herm_eig(rho.matrix()).eigenvalues);
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && std::abs(m(i, j)) > tol) return false;
  return true;
}

}  // namespace cforge
