#include "cforge/measurement.hpp"

#include <cmath>
#include <utility>

#include "cforge/coherence.hpp"
#include "cforge/errors.hpp"

namespace cforge {

Povm validate_povm(std::vector<ComplexMatrix> effects) {
  if (effects.empty()) throw DimMismatch("POVM needs at least one effect");
  const Eigen::Index dim = effects[0].rows();
  for (std::size_t i = 0; i < effects.size(); ++i) {
    if (effects[i].rows() != dim || effects[i].cols() != dim) {
      throw DimMismatch("effect " + std::to_string(i) + " has inconsistent dimensions");
    }
  }
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    const HermitianEigen eig = herm_eig(effects[i]);  // NotHermitian on failure
    if (eig.eigenvalues[0] < -kPsdClamp) throw NotPsd(i, eig.eigenvalues[0]);
    sum += effects[i];
  }
  const double completeness_dev = max_abs_diff(sum, identity(static_cast<int>(dim)));
  if (completeness_dev > kPovmCompletenessTol) throw NotComplete(completeness_dev);

  Povm povm;
  povm.dim_ = static_cast<int>(dim);
  povm.effects_ = std::move(effects);
  povm.sqrt_effects_.reserve(povm.effects_.size());
  povm.raw_quantumness_.reserve(povm.effects_.size());
  for (const ComplexMatrix& e : povm.effects_) {
    povm.sqrt_effects_.push_back(psd_sqrt(e));
    povm.raw_quantumness_.push_back(raw_quantumness_element(e));
  }
  return povm;
}

DensityMatrix luders_apply(const Povm& povm, const DensityMatrix& rho) {
  if (povm.dim() != rho.dim()) {
    throw DimMismatch("POVM dimension does not match the state");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < povm.size(); ++i) {
    const ComplexMatrix& root = povm.sqrt_effect(i);
    out += root * rho.matrix() * root;
  }
  return DensityMatrix(std::move(out));
}

SelectiveOutcome selective_outcome(const Povm& povm, const DensityMatrix& rho, std::size_t i) {
  if (i >= povm.size()) throw InvalidParams("outcome index out of range");
  if (povm.dim() != rho.dim()) throw DimMismatch("POVM dimension does not match the state");
  const double probability = (povm.effect(i) * rho.matrix()).trace().real();
  if (probability <= 1e-12) {
    throw ZeroProbabilityOutcome("outcome " + std::to_string(i) + " has probability " +
                                 std::to_string(probability));
  }
  const ComplexMatrix& root = povm.sqrt_effect(i);
  return {probability, DensityMatrix(root * rho.matrix() * root / probability)};
}

namespace {

// |psi> = alpha|0> + sqrt(1-|alpha|^2)|1>, |psi~> its orthogonal complement.
std::pair<Eigen::Vector2cd, Eigen::Vector2cd> coherent_basis(Complex alpha) {
  const double abs2 = std::norm(alpha);
  if (abs2 > 1.0 + 1e-12) throw InvalidParams("|alpha| must not exceed 1");
  const double bar = std::sqrt(std::max(0.0, 1.0 - abs2));
  Eigen::Vector2cd psi, psi_tilde;
  psi << alpha, Complex(bar, 0.0);
  psi_tilde << Complex(bar, 0.0), -std::conj(alpha);
  return {psi, psi_tilde};
}

}  // namespace

Povm coherent_basis_projectors(Complex alpha) {
  const auto [psi, psi_tilde] = coherent_basis(alpha);
  std::vector<ComplexMatrix> effects;
  effects.push_back(psi * psi.adjoint());
  effects.push_back(psi_tilde * psi_tilde.adjoint());
  return validate_povm(std::move(effects));
}

Povm one_param_povm(const OneParamPovmParams& p) {
  if (p.lambda < -1e-12 || p.lambda > 1.0 + 1e-12) {
    throw InvalidParams("sharpness lambda must lie in [0, 1]");
  }
  const auto [psi, psi_tilde] = coherent_basis(p.alpha);
  const ComplexMatrix blend = 0.5 * (1.0 - p.lambda) * identity(2);
  std::vector<ComplexMatrix> effects;
  effects.push_back(p.lambda * (psi * psi.adjoint()) + blend);
  effects.push_back(p.lambda * (psi_tilde * psi_tilde.adjoint()) + blend);
  return validate_povm(std::move(effects));
}

DensityMatrix one_param_apply_closed(const OneParamPovmParams& p, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw WrongDimension("one_param_apply_closed requires a qubit state");
  const auto [psi, psi_tilde] = coherent_basis(p.alpha);
  const ComplexMatrix p_plus = psi * psi.adjoint();
  const ComplexMatrix p_minus = psi_tilde * psi_tilde.adjoint();
  const double keep = std::sqrt(std::max(0.0, 1.0 - p.lambda * p.lambda));
  const ComplexMatrix projected =
      p_plus * rho.matrix() * p_plus + p_minus * rho.matrix() * p_minus;
  return DensityMatrix(keep * rho.matrix() + (1.0 - keep) * projected);
}

Povm two_outcome_povm(const TwoOutcomeParams& p) {
  if (p.a_plus < -1e-12 || p.a_plus > 1.0 + 1e-12) {
    throw InvalidParams("a_plus must lie in [0, 1]");
  }
  const double a_norm = p.a_vec.norm();
  if (a_norm > std::min(p.a_plus, p.a_minus()) + 1e-12) {
    throw InvalidParams("|a_vec| must not exceed min(a_plus, a_minus)");
  }
  const ComplexMatrix direction = p.a_vec.r1 * pauli::x() + p.a_vec.r2 * pauli::y() +
                                  p.a_vec.r3 * pauli::z();
  std::vector<ComplexMatrix> effects;
  effects.push_back(p.a_plus * identity(2) + direction);
  effects.push_back(p.a_minus() * identity(2) - direction);
  return validate_povm(std::move(effects));
}

namespace kernels {

Complex one_param_out01(Complex alpha, double lambda, double rho00, Complex rho01) {
  const double abs2 = std::norm(alpha);
  const double bar = std::sqrt(std::max(0.0, 1.0 - abs2));
  const double rho11 = 1.0 - rho00;
  // <psi|rho|psi> and <psi~|rho|psi~>
  const double q_plus = abs2 * rho00 + bar * bar * rho11 + 2.0 * bar * (std::conj(alpha) * rho01).real();
  const double q_minus = bar * bar * rho00 + abs2 * rho11 - 2.0 * bar * (std::conj(alpha) * rho01).real();
  const double keep = std::sqrt(std::max(0.0, 1.0 - lambda * lambda));
  return keep * rho01 + (1.0 - keep) * (q_plus - q_minus) * bar * alpha;
}

BlochVector two_outcome_evolved_bloch(const TwoOutcomeParams& p, const BlochVector& r) {
  const double a_plus = p.a_plus;
  const double a_minus = p.a_minus();
  const double a2 = p.a_vec.norm_squared();
  const double eta_plus = std::sqrt(std::max(0.0, a_plus * a_plus - a2));
  const double eta_minus = std::sqrt(std::max(0.0, a_minus * a_minus - a2));
  const double beta = eta_plus + eta_minus;
  // theta+ = (a.r / |a|^2)(1 - beta) rewritten without the |a|^2 division:
  // 1 - beta = |a|^2 (1/(a+ + eta+) + 1/(a- + eta-)).
  double coeff = 0.0;
  if (a_plus + eta_plus > 0.0) coeff += 1.0 / (a_plus + eta_plus);
  if (a_minus + eta_minus > 0.0) coeff += 1.0 / (a_minus + eta_minus);
  const double theta_plus = dot(p.a_vec, r) * coeff;
  return theta_plus * p.a_vec + beta * r;
}

}  // namespace kernels

TwoOutcomeBranches two_outcome_bloch_closed(const TwoOutcomeParams& p, const BlochVector& r) {
  if (p.a_vec.norm() <= 1e-9) {
    throw DegenerateDirection("|a_vec| <= 1e-9: closed form is singular, use luders_apply");
  }
  const BlochVector s_plus = kernels::two_outcome_evolved_bloch(p, r);
  return {s_plus, -1.0 * s_plus};
}

Povm n_outcome_povm(const NOutcomeParams& p) {
  if (p.weights.empty() || p.weights.size() != p.bloch_dirs.size()) {
    throw InvalidParams("weights and bloch_dirs must be nonempty and equal length");
  }
  double weight_sum = 0.0;
  BlochVector moment{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < p.weights.size(); ++i) {
    if (p.weights[i] < -1e-12) throw InvalidParams("weight a_i must be nonnegative");
    if (p.bloch_dirs[i].norm() > 1.0 + 1e-9) {
      throw InvalidParams("|s_i| must not exceed 1 (element " + std::to_string(i) + ")");
    }
    weight_sum += p.weights[i];
    moment = moment + p.weights[i] * p.bloch_dirs[i];
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw InvalidParams("weights must sum to 1 (got " + std::to_string(weight_sum) + ")");
  }
  if (moment.norm() > 1e-9) {
    throw InvalidParams("sum_i a_i s_i must vanish (norm " + std::to_string(moment.norm()) + ")");
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(p.weights.size());
  for (std::size_t i = 0; i < p.weights.size(); ++i) {
    const BlochVector& s = p.bloch_dirs[i];
    effects.push_back(p.weights[i] *
                      (identity(2) + s.r1 * pauli::x() + s.r2 * pauli::y() + s.r3 * pauli::z()));
  }
  return validate_povm(std::move(effects));
}

Povm trine_cnm_povm(double t) {
  if (t <= 0.0 || t >= 1.0) throw InvalidParams("t must lie in (0, 1)");
  const double b = t / (3.0 - t);
  const double side = std::sqrt(1.0 - b * b);
  NOutcomeParams p;
  p.weights = {t / 3.0, 0.5 * (1.0 - t / 3.0), 0.5 * (1.0 - t / 3.0)};
  p.bloch_dirs = {{1.0, 0.0, 0.0}, {-b, side, 0.0}, {-b, -side, 0.0}};
  return n_outcome_povm(p);
}

bool is_cnm(const Povm& povm, double tol) {
  for (int k = 0; k < povm.dim(); ++k) {
    ComplexMatrix basis_state = ComplexMatrix::Zero(povm.dim(), povm.dim());
    basis_state(k, k) = 1.0;
    if (!is_incoherent(luders_apply(povm, DensityMatrix(std::move(basis_state))), tol)) {
      return false;
    }
  }
  return true;
}

bool is_cnm_qubit(const Povm& povm, double tol) {
  if (povm.dim() != 2) throw WrongDimension("is_cnm_qubit requires a qubit POVM");
  return is_cnm(povm, tol);
}

DensityMatrix compose_channels(const Povm& m1, const Povm& m2, const DensityMatrix& rho) {
  return luders_apply(m1, luders_apply(m2, rho));
}

DensityMatrix tensor_channels(const Povm& m1, const Povm& m2, const DensityMatrix& rho_ab) {
  if (m1.dim() * m2.dim() != rho_ab.dim()) {
    throw DimMismatch("tensor_channels: product dimension does not match the state");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho_ab.dim(), rho_ab.dim());
  for (std::size_t j = 0; j < m1.size(); ++j) {
    for (std::size_t i = 0; i < m2.size(); ++i) {
      const ComplexMatrix kraus = tensor(m1.sqrt_effect(j), m2.sqrt_effect(i));
      out += kraus * rho_ab.matrix() * kraus;
    }
  }
  return DensityMatrix(std::move(out));
}

}  // namespace cforge
