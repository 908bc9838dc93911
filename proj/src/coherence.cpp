#include "cforge/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cforge/errors.hpp"
#include "cforge/measurement.hpp"

namespace cforge {

double c_l1(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) sum += std::abs(m(i, j));
  return sum;
}

double c_rel_ent(const DensityMatrix& rho) {
  return std::max(0.0, entropy(dephase(rho)) - entropy(rho));
}

CoherenceReport coherence_report(const DensityMatrix& rho) {
  return {c_l1(rho), c_rel_ent(rho), rho.dim()};
}

double c_trace_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw WrongDimension("c_trace_qubit requires a qubit state");
  const ComplexMatrix diff = rho.matrix() - dephase(rho).matrix();
  const HermitianEigen eig = herm_eig(diff);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) sum += std::abs(eig.eigenvalues[i]);
  return sum;
}

namespace {

double binary_entropy(double p) {
  double sum = 0.0;
  if (p > 1e-15) sum -= p * std::log2(p);
  if (1.0 - p > 1e-15) sum -= (1.0 - p) * std::log2(1.0 - p);
  return sum;
}

// Diagonal entropy of cos(t) e1 + e^{i phi} sin(t) e2.
double superposition_diag_entropy(const Eigen::VectorXcd& e1, const Eigen::VectorXcd& e2,
                                  double theta, double phi) {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const Complex w(st * std::cos(phi), st * std::sin(phi));
  double sum = 0.0;
  for (Eigen::Index i = 0; i < e1.size(); ++i) {
    const double p = std::norm(ct * e1[i] + w * e2[i]);
    if (p > 1e-15) sum -= p * std::log2(p);
  }
  return sum;
}

}  // namespace

double c_formation_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw WrongDimension("c_formation_qubit requires a qubit state");
  const double c = std::min(1.0, c_l1(rho));
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double c_formation_rank2_bound(const DensityMatrix& rho, const Eigen::VectorXcd& e1,
                               const Eigen::VectorXcd& e2, int theta_steps, int phi_steps,
                               ExecMode mode) {
  if (e1.size() != e2.size() || e1.size() != rho.dim()) {
    throw SupportMismatch("basis vectors must match the state dimension");
  }
  if (std::abs(e1.norm() - 1.0) > 1e-9 || std::abs(e2.norm() - 1.0) > 1e-9 ||
      std::abs(e1.dot(e2)) > 1e-9) {
    throw SupportMismatch("e1 and e2 must be orthonormal");
  }
  const ComplexMatrix projector = e1 * e1.adjoint() + e2 * e2.adjoint();
  const ComplexMatrix restricted = projector * rho.matrix() * projector;
  if (max_abs_diff(restricted, rho.matrix()) > 1e-8) {
    throw SupportMismatch("state is not supported on span{e1, e2}");
  }
  if (theta_steps < 2 || phi_steps < 1) throw InvalidParams("grid too small");

  constexpr double half_pi = std::numbers::pi / 2.0;
  const double dtheta = half_pi / (theta_steps - 1);
  const double dphi = 2.0 * std::numbers::pi / phi_steps;

  // Per-row minima, combined in index order afterwards.
  std::vector<double> row_min(theta_steps);
  std::vector<int> row_arg(theta_steps);
  for_each_index(theta_steps, mode, [&](std::int64_t ti) {
    const double theta = ti * dtheta;
    double best = std::numeric_limits<double>::infinity();
    int best_pi = 0;
    for (int pi_idx = 0; pi_idx < phi_steps; ++pi_idx) {
      const double value = superposition_diag_entropy(e1, e2, theta, pi_idx * dphi);
      if (value < best) {
        best = value;
        best_pi = pi_idx;
      }
    }
    row_min[ti] = best;
    row_arg[ti] = best_pi;
  });

  double best = row_min[0];
  int best_ti = 0;
  for (int ti = 1; ti < theta_steps; ++ti) {
    if (row_min[ti] < best) {
      best = row_min[ti];
      best_ti = ti;
    }
  }

  // One refinement pass around the grid minimum.
  const double theta0 = best_ti * dtheta;
  const double phi0 = row_arg[best_ti] * dphi;
  constexpr int refine_steps = 41;
  for (int i = 0; i < refine_steps; ++i) {
    const double theta =
        std::clamp(theta0 + (2.0 * i / (refine_steps - 1) - 1.0) * dtheta, 0.0, half_pi);
    for (int j = 0; j < refine_steps; ++j) {
      const double phi = phi0 + (2.0 * j / (refine_steps - 1) - 1.0) * dphi;
      best = std::min(best, superposition_diag_entropy(e1, e2, theta, phi));
    }
  }
  return best;
}

double raw_quantumness_element(const ComplexMatrix& effect) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < effect.rows(); ++i)
    for (Eigen::Index j = 0; j < effect.cols(); ++j)
      if (i != j) sum += std::abs(effect(i, j));
  return sum;
}

bool is_free_measurement(const Povm& povm) {
  for (std::size_t i = 0; i < povm.size(); ++i) {
    if (povm.raw_quantumness(i) > kRawQuantumnessTol) return false;
  }
  return true;
}

}  // namespace cforge
