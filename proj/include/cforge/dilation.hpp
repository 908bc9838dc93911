#pragma once

#include <cstdint>
#include <vector>

#include "cforge/state.hpp"

namespace cforge {

// Apparatus (x) system product state plus the global unitary that entangles
// them. The apparatus is the first tensor factor.
class DilationSetup {
 public:
  DilationSetup(DensityMatrix rho_apparatus, DensityMatrix rho_system, ComplexMatrix unitary);

  const DensityMatrix& rho_apparatus() const { return rho_apparatus_; }
  const DensityMatrix& rho_system() const { return rho_system_; }
  const ComplexMatrix& unitary() const { return unitary_; }

  // U (rho_A (x) rho_S) U^dagger
  const ComplexMatrix& rho_as() const { return rho_as_; }
  double entropy_as() const { return entropy_as_; }

 private:
  DensityMatrix rho_apparatus_;
  DensityMatrix rho_system_;
  ComplexMatrix unitary_;
  ComplexMatrix rho_as_;
  double entropy_as_;
};

// Measured basis on the apparatus qubit, by Bloch angles.
struct ApparatusProjectors {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

// The two rank-1 projectors of the measured apparatus basis.
std::pair<ComplexMatrix, ComplexMatrix> apparatus_projector_pair(const ApparatusProjectors& p);

// rho_2^M = sum_i (Pi_i (x) I) rho_AS (Pi_i (x) I)
DensityMatrix dilate_and_measure(const DilationSetup& setup, const ApparatusProjectors& proj);

// S(rho_2^M) - S(rho_AS) >= 0
double entanglement_gain(const DilationSetup& setup, const ApparatusProjectors& proj);

struct EminGrid {
  int theta_steps = 60;
  int phi_steps = 120;
};

struct EminResult {
  double value = 0.0;
  ApparatusProjectors argmin;
};

// Minimum entanglement gain over apparatus bases: grid search plus a
// Nelder-Mead style local refinement.
EminResult e_min(const DilationSetup& setup, const EminGrid& grid = {});

struct TradeoffReport {
  double e_gain = 0.0;            // entanglement created by this projector choice
  double c_r_system_after = 0.0;  // C_R of Tr_A[rho_2^M]
  double mixedness = 0.0;         // S(rho_S)
  double lhs = 0.0;               // e_gain + c_r_system_after + mixedness
  double rhs = 0.0;               // log2(N M)
  bool holds = false;
  double c_r_apparatus = 0.0;     // S(dephase_Pi(Tr_S rho_AS)) - S(rho_A)
  double eq23_bound = 0.0;        // c_r_apparatus + S(rho_S^M) - S(rho_S)
  bool eq23_holds = false;
};

// Entanglement / coherence / mixedness trade-off for one projector choice.
// The intermediate bound pairs the dephased post-unitary apparatus marginal
// with the initial apparatus entropy, which is what the subadditivity chain
// establishes.
TradeoffReport tradeoff_report(const DilationSetup& setup, const ApparatusProjectors& proj);

// System-side Kraus operators K_i = (<pi_i| (x) I) U (|a> (x) I) induced by a
// pure apparatus state. Throws InvalidParams when rho_A is not pure.
std::vector<ComplexMatrix> induced_system_kraus(const DilationSetup& setup,
                                                const ApparatusProjectors& proj);

// Haar-distributed 4x4 unitary (QR of a Ginibre matrix, phases fixed from
// the R diagonal).
ComplexMatrix random_unitary_4(std::uint64_t master_seed, std::uint64_t index);

// Fast path used by e_min: entropy of rho_2^M from the two 2x2 blocks in the
// measured basis, no 4x4 eigendecomposition.
double measured_state_entropy(const ComplexMatrix& rho_as, const ApparatusProjectors& proj);

}  // namespace cforge
