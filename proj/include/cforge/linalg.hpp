#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace cforge {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Hermiticity tolerance used everywhere in the library.
inline constexpr double kHermTol = 1e-10;

// Eigenvalues in [-kPsdClamp, 0) are treated as exact zeros when taking
// operator square roots; anything below raises NotPsd.
inline constexpr double kPsdClamp = 1e-10;

namespace pauli {
const ComplexMatrix& x();
const ComplexMatrix& y();
const ComplexMatrix& z();
}  // namespace pauli

ComplexMatrix identity(int dim);

// max_{jk} |M[j][k] - conj(M[k][j])|
double hermiticity_deviation(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermTol);

// max entrywise absolute difference
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // unitary, columns match eigenvalue order
};

// Eigendecomposition of a Hermitian matrix. Throws NotHermitian when the
// symmetry deviation exceeds kHermTol. Dimension 2 uses a closed form.
HermitianEigen herm_eig(const ComplexMatrix& m);

// Hermitian PSD square root. Eigenvalues in [-kPsdClamp, 0) are clamped to
// zero; anything more negative throws NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Kronecker product, a acting on the first factor.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial trace over the discarded factor of a (dim_a * dim_b) system.
// keep == 0 keeps the first factor, keep == 1 the second.
ComplexMatrix partial_trace(const ComplexMatrix& m, int keep, std::pair<int, int> dims);

}  // namespace cforge
