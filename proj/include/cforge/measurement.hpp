#pragma once

#include <cstddef>
#include <vector>

#include "cforge/state.hpp"

namespace cforge {

inline constexpr double kPovmCompletenessTol = 1e-9;

// Validated POVM: PSD effects summing to identity. Immutable after
// construction; square roots of the effects are cached for channel use.
class Povm {
 public:
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const ComplexMatrix& effect(std::size_t i) const { return effects_[i]; }
  const ComplexMatrix& sqrt_effect(std::size_t i) const { return sqrt_effects_[i]; }
  double raw_quantumness(std::size_t i) const { return raw_quantumness_[i]; }
  std::size_t size() const { return effects_.size(); }
  int dim() const { return dim_; }

  friend Povm validate_povm(std::vector<ComplexMatrix> effects);

 private:
  Povm() = default;
  std::vector<ComplexMatrix> effects_;
  std::vector<ComplexMatrix> sqrt_effects_;
  std::vector<double> raw_quantumness_;
  int dim_ = 0;
};

// Checks PSD-ness of every effect (NotPsd with the offending index),
// completeness (NotComplete with the max deviation) and dimension
// consistency (DimMismatch).
Povm validate_povm(std::vector<ComplexMatrix> effects);

// Non-selective Luders update sum_i sqrt(E_i) rho sqrt(E_i).
DensityMatrix luders_apply(const Povm& povm, const DensityMatrix& rho);

struct SelectiveOutcome {
  double probability;
  DensityMatrix state;
};

// Selective outcome i: probability Tr[E_i rho], state sqrt(E_i) rho sqrt(E_i) / p.
SelectiveOutcome selective_outcome(const Povm& povm, const DensityMatrix& rho, std::size_t i);

// Rank-1 projectors onto |psi> = alpha|0> + sqrt(1-|alpha|^2)|1> and its
// orthogonal complement.
Povm coherent_basis_projectors(Complex alpha);

// ---------------------------------------------------------------------------
// Parametric families

struct OneParamPovmParams {
  Complex alpha;    // |alpha| <= 1
  double lambda;    // sharpness in [0, 1]
};

// E_pm = lambda P_pm + (1 - lambda)/2 I in the |psi>, |psi~> basis.
Povm one_param_povm(const OneParamPovmParams& p);

// Closed form sqrt(1-l^2) rho + (1 - sqrt(1-l^2)) (P+ rho P+ + P- rho P-).
DensityMatrix one_param_apply_closed(const OneParamPovmParams& p, const DensityMatrix& rho);

struct TwoOutcomeParams {
  double a_plus = 0.5;  // a_minus = 1 - a_plus
  BlochVector a_vec;    // |a_vec| <= min(a_plus, a_minus)

  double a_minus() const { return 1.0 - a_plus; }
};

// E_pm = a_pm I +- a_vec . sigma. Throws InvalidParams outside the domain.
Povm two_outcome_povm(const TwoOutcomeParams& p);

struct TwoOutcomeBranches {
  BlochVector s_plus;   // non-selective output Bloch vector
  BlochVector s_minus;  // algebraic mirror branch (-s_plus)
};

// Closed-form Bloch evolution s_pm = theta_pm a +- beta r. Throws
// DegenerateDirection when |a_vec| <= 1e-9 (use luders_apply instead).
TwoOutcomeBranches two_outcome_bloch_closed(const TwoOutcomeParams& p, const BlochVector& r);

struct NOutcomeParams {
  std::vector<double> weights;       // a_i >= 0, sum to 1
  std::vector<BlochVector> bloch_dirs;  // |s_i| <= 1, sum_i a_i s_i = 0
};

// E_i = a_i (I + s_i . sigma). Throws InvalidParams naming the violated
// constraint.
Povm n_outcome_povm(const NOutcomeParams& p);

// Three-outcome trine-like POVM with raw quantumness that nevertheless
// cannot create coherence in incoherent states. t in (0, 1).
Povm trine_cnm_povm(double t);

// Coherence non-generating measurement test: the channel must map every
// computational basis projector to an incoherent state.
bool is_cnm(const Povm& povm, double tol = 1e-9);
bool is_cnm_qubit(const Povm& povm, double tol = 1e-9);

// Lambda_1(Lambda_2(rho)).
DensityMatrix compose_channels(const Povm& m1, const Povm& m2, const DensityMatrix& rho);

// Product channel with Kraus operators sqrt(E_j^1) (x) sqrt(E_i^2); m1 acts
// on the first factor.
DensityMatrix tensor_channels(const Povm& m1, const Povm& m2, const DensityMatrix& rho_ab);

// ---------------------------------------------------------------------------
// Scalar fast paths used by the Monte-Carlo kernels. Each is cross-checked
// against the matrix channel in the test suite.

namespace kernels {

// (0,1) entry of the one-parameter channel output.
Complex one_param_out01(Complex alpha, double lambda, double rho00, Complex rho01);

// Non-selective output Bloch vector of the two-outcome channel, in the
// cancellation-free form theta = (a.r) (1/(a+ + eta+) + 1/(a- + eta-)).
// Well defined for every valid parameter set including |a| = 0.
BlochVector two_outcome_evolved_bloch(const TwoOutcomeParams& p, const BlochVector& r);

}  // namespace kernels

}  // namespace cforge
