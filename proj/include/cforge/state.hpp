#pragma once

#include <cmath>

#include "cforge/linalg.hpp"

namespace cforge {

struct BlochVector {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  double norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }
  double norm_squared() const { return r1 * r1 + r2 * r2 + r3 * r3; }
};

inline BlochVector operator+(const BlochVector& a, const BlochVector& b) {
  return {a.r1 + b.r1, a.r2 + b.r2, a.r3 + b.r3};
}
inline BlochVector operator*(double s, const BlochVector& v) {
  return {s * v.r1, s * v.r2, s * v.r3};
}
inline double dot(const BlochVector& a, const BlochVector& b) {
  return a.r1 * b.r1 + a.r2 * b.r2 + a.r3 * b.r3;
}

// Unit-trace PSD Hermitian matrix. The constructor validates trace (1e-9),
// hermiticity (kHermTol) and spectrum (eigenvalues >= -1e-9).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

inline constexpr double kStateTraceTol = 1e-9;
inline constexpr double kStateEigTol = 1e-9;

// rho = (I + r . sigma) / 2. Throws OutsideBlochBall when |r| > 1 + 1e-9.
DensityMatrix from_bloch(const BlochVector& r);

// Inverse of from_bloch; qubit states only.
BlochVector to_bloch(const DensityMatrix& rho);

// Zero out all off-diagonal entries (computational basis).
DensityMatrix dephase(const DensityMatrix& rho);

// Von Neumann entropy in bits.
double entropy(const DensityMatrix& rho);

// Entropy of a clamped probability vector, in bits. 0 log 0 == 0.
double shannon_entropy_bits(const RealVector& probabilities);

bool is_incoherent(const DensityMatrix& rho, double tol = 1e-9);

}  // namespace cforge
