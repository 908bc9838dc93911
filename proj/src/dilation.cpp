#include "cforge/dilation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "cforge/coherence.hpp"
#include "cforge/errors.hpp"
#include "cforge/rng.hpp"

namespace cforge {

DilationSetup::DilationSetup(DensityMatrix rho_apparatus, DensityMatrix rho_system,
                             ComplexMatrix unitary)
    : rho_apparatus_(std::move(rho_apparatus)),
      rho_system_(std::move(rho_system)),
      unitary_(std::move(unitary)) {
  if (rho_apparatus_.dim() != 2 || rho_system_.dim() != 2) {
    throw WrongDimension("dilation setup uses qubit apparatus and system");
  }
  if (unitary_.rows() != 4 || unitary_.cols() != 4) {
    throw DimMismatch("global unitary must be 4x4");
  }
  const double unitarity_dev = max_abs_diff(unitary_.adjoint() * unitary_, identity(4));
  if (unitarity_dev > 1e-9) {
    throw InvalidParams("U is not unitary (deviation " + std::to_string(unitarity_dev) + ")");
  }
  rho_as_ = unitary_ * tensor(rho_apparatus_.matrix(), rho_system_.matrix()) * unitary_.adjoint();
  entropy_as_ = entropy(DensityMatrix(rho_as_));
}

std::pair<ComplexMatrix, ComplexMatrix> apparatus_projector_pair(const ApparatusProjectors& p) {
  const double c = std::cos(0.5 * p.theta);
  const double s = std::sin(0.5 * p.theta);
  const Complex phase(std::cos(p.phi), std::sin(p.phi));
  Eigen::Vector2cd up, down;
  up << Complex(c, 0.0), phase * s;
  down << Complex(s, 0.0), -phase * c;
  return {up * up.adjoint(), down * down.adjoint()};
}

DensityMatrix dilate_and_measure(const DilationSetup& setup, const ApparatusProjectors& proj) {
  const auto [pi0, pi1] = apparatus_projector_pair(proj);
  const ComplexMatrix k0 = tensor(pi0, identity(2));
  const ComplexMatrix k1 = tensor(pi1, identity(2));
  return DensityMatrix(k0 * setup.rho_as() * k0 + k1 * setup.rho_as() * k1);
}

double entanglement_gain(const DilationSetup& setup, const ApparatusProjectors& proj) {
  return entropy(dilate_and_measure(setup, proj)) - setup.entropy_as();
}

namespace {

// Eigenvalues of a 2x2 Hermitian block, no eigenvectors needed.
inline void block_eigenvalues(const Complex& m00, const Complex& m01, const Complex& m11,
                              double& lo, double& hi) {
  const double a = m00.real();
  const double b = m11.real();
  const double d = 0.5 * (a - b);
  const double h = std::hypot(d, std::abs(m01));
  const double mean = 0.5 * (a + b);
  lo = mean - h;
  hi = mean + h;
}

inline double entropy_term(double p) { return p > 1e-15 ? -p * std::log2(p) : 0.0; }

}  // namespace

double measured_state_entropy(const ComplexMatrix& rho_as, const ApparatusProjectors& proj) {
  const double c = std::cos(0.5 * proj.theta);
  const double s = std::sin(0.5 * proj.theta);
  const Complex phase(std::cos(proj.phi), std::sin(proj.phi));
  const Complex pi0[2] = {Complex(c, 0.0), phase * s};
  const Complex pi1[2] = {Complex(s, 0.0), -phase * c};

  // B[s,s'] = sum_{a,a'} conj(pi_a) rho[(a,s),(a',s')] pi_a'
  double eigenvalues[4];
  int filled = 0;
  for (const Complex* pi : {pi0, pi1}) {
    Complex b00(0, 0), b01(0, 0), b11(0, 0);
    for (int a = 0; a < 2; ++a) {
      for (int ap = 0; ap < 2; ++ap) {
        const Complex weight = std::conj(pi[a]) * pi[ap];
        b00 += weight * rho_as(2 * a + 0, 2 * ap + 0);
        b01 += weight * rho_as(2 * a + 0, 2 * ap + 1);
        b11 += weight * rho_as(2 * a + 1, 2 * ap + 1);
      }
    }
    block_eigenvalues(b00, b01, b11, eigenvalues[filled], eigenvalues[filled + 1]);
    filled += 2;
  }
  return entropy_term(eigenvalues[0]) + entropy_term(eigenvalues[1]) +
         entropy_term(eigenvalues[2]) + entropy_term(eigenvalues[3]);
}

EminResult e_min(const DilationSetup& setup, const EminGrid& grid) {
  if (grid.theta_steps < 2 || grid.phi_steps < 1) throw InvalidParams("e_min grid too small");
  const double dtheta = std::numbers::pi / (grid.theta_steps - 1);
  const double dphi = 2.0 * std::numbers::pi / grid.phi_steps;

  double best = std::numeric_limits<double>::infinity();
  ApparatusProjectors best_angles;
  for (int ti = 0; ti < grid.theta_steps; ++ti) {
    for (int pi_idx = 0; pi_idx < grid.phi_steps; ++pi_idx) {
      const ApparatusProjectors angles{ti * dtheta, pi_idx * dphi};
      const double value = measured_state_entropy(setup.rho_as(), angles);
      if (value < best) {
        best = value;
        best_angles = angles;
      }
    }
  }

  // Nelder-Mead style refinement on (theta, phi); the objective is periodic
  // so wandering outside the fundamental domain is harmless.
  auto objective = [&](double theta, double phi) {
    return measured_state_entropy(setup.rho_as(), {theta, phi});
  };
  struct Vertex {
    double theta, phi, value;
  };
  std::array<Vertex, 3> simplex{
      Vertex{best_angles.theta, best_angles.phi, best},
      Vertex{best_angles.theta + 0.5 * dtheta, best_angles.phi, 0.0},
      Vertex{best_angles.theta, best_angles.phi + 0.5 * dphi, 0.0}};
  simplex[1].value = objective(simplex[1].theta, simplex[1].phi);
  simplex[2].value = objective(simplex[2].theta, simplex[2].phi);
  for (int iter = 0; iter < 120; ++iter) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    const double ct = 0.5 * (simplex[0].theta + simplex[1].theta);
    const double cp = 0.5 * (simplex[0].phi + simplex[1].phi);
    Vertex reflected{2.0 * ct - simplex[2].theta, 2.0 * cp - simplex[2].phi, 0.0};
    reflected.value = objective(reflected.theta, reflected.phi);
    if (reflected.value < simplex[0].value) {
      Vertex expanded{ct + 2.0 * (reflected.theta - ct), cp + 2.0 * (reflected.phi - cp), 0.0};
      expanded.value = objective(expanded.theta, expanded.phi);
      simplex[2] = expanded.value < reflected.value ? expanded : reflected;
    } else if (reflected.value < simplex[1].value) {
      simplex[2] = reflected;
    } else {
      Vertex contracted{ct + 0.5 * (simplex[2].theta - ct), cp + 0.5 * (simplex[2].phi - cp), 0.0};
      contracted.value = objective(contracted.theta, contracted.phi);
      if (contracted.value < simplex[2].value) {
        simplex[2] = contracted;
      } else {
        for (int k = 1; k < 3; ++k) {
          simplex[k].theta = 0.5 * (simplex[k].theta + simplex[0].theta);
          simplex[k].phi = 0.5 * (simplex[k].phi + simplex[0].phi);
          simplex[k].value = objective(simplex[k].theta, simplex[k].phi);
        }
      }
    }
  }
  for (const auto& vertex : simplex) {
    if (vertex.value < best) {
      best = vertex.value;
      best_angles = {vertex.theta, vertex.phi};
    }
  }
  // canonicalize into theta in [0, pi], phi in [0, 2 pi)
  const double nx = std::sin(best_angles.theta) * std::cos(best_angles.phi);
  const double ny = std::sin(best_angles.theta) * std::sin(best_angles.phi);
  const double nz = std::cos(best_angles.theta);
  best_angles.theta = std::acos(std::clamp(nz, -1.0, 1.0));
  best_angles.phi = std::atan2(ny, nx);
  if (best_angles.phi < 0.0) best_angles.phi += 2.0 * std::numbers::pi;
  return {best - setup.entropy_as(), best_angles};
}

TradeoffReport tradeoff_report(const DilationSetup& setup, const ApparatusProjectors& proj) {
  TradeoffReport report;
  const DensityMatrix rho2m = dilate_and_measure(setup, proj);
  report.e_gain = entropy(rho2m) - setup.entropy_as();

  const DensityMatrix rho_s_after(partial_trace(rho2m.matrix(), 1, {2, 2}));
  report.c_r_system_after = c_rel_ent(rho_s_after);
  report.mixedness = entropy(setup.rho_system());
  report.lhs = report.e_gain + report.c_r_system_after + report.mixedness;
  report.rhs = 2.0;  // log2(N M) for qubit system and apparatus
  report.holds = report.lhs <= report.rhs + 1e-9;

  // Intermediate bound: dephase the post-unitary apparatus marginal in the
  // measured basis, subtract the initial apparatus entropy.
  const auto [pi0, pi1] = apparatus_projector_pair(proj);
  const ComplexMatrix apparatus_after = partial_trace(setup.rho_as(), 0, {2, 2});
  const DensityMatrix apparatus_dephased(pi0 * apparatus_after * pi0 +
                                         pi1 * apparatus_after * pi1);
  report.c_r_apparatus = entropy(apparatus_dephased) - entropy(setup.rho_apparatus());
  report.eq23_bound =
      report.c_r_apparatus + entropy(rho_s_after) - entropy(setup.rho_system());
  report.eq23_holds = report.e_gain <= report.eq23_bound + 1e-9;
  return report;
}

std::vector<ComplexMatrix> induced_system_kraus(const DilationSetup& setup,
                                                const ApparatusProjectors& proj) {
  const HermitianEigen eig = herm_eig(setup.rho_apparatus().matrix());
  if (eig.eigenvalues[1] < 1.0 - 1e-9) {
    throw InvalidParams("induced_system_kraus requires a pure apparatus state");
  }
  const Eigen::Vector2cd apparatus_ket = eig.eigenvectors.col(1);

  const double c = std::cos(0.5 * proj.theta);
  const double s = std::sin(0.5 * proj.theta);
  const Complex phase(std::cos(proj.phi), std::sin(proj.phi));
  const Eigen::Vector2cd bra0(Complex(c, 0.0), phase * s);
  const Eigen::Vector2cd bra1(Complex(s, 0.0), -phase * c);

  std::vector<ComplexMatrix> kraus;
  for (const Eigen::Vector2cd& pi_ket : {bra0, bra1}) {
    ComplexMatrix k = ComplexMatrix::Zero(2, 2);
    // K = (<pi| (x) I) U (|a> (x) I)
    for (int sys_out = 0; sys_out < 2; ++sys_out) {
      for (int sys_in = 0; sys_in < 2; ++sys_in) {
        Complex value(0, 0);
        for (int a_out = 0; a_out < 2; ++a_out) {
          for (int a_in = 0; a_in < 2; ++a_in) {
            value += std::conj(pi_ket[a_out]) * setup.unitary()(2 * a_out + sys_out, 2 * a_in + sys_in) *
                     apparatus_ket[a_in];
          }
        }
        k(sys_out, sys_in) = value;
      }
    }
    kraus.push_back(std::move(k));
  }
  return kraus;
}

ComplexMatrix random_unitary_4(std::uint64_t master_seed, std::uint64_t index) {
  Rng rng = substream(master_seed, stream_tag::unitary, index);
  ComplexMatrix g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 4; ++j) {
    const Complex diag = r(j, j);
    const double magnitude = std::abs(diag);
    const Complex phase = magnitude > 0.0 ? diag / magnitude : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace cforge
