#pragma once

#include "cforge/parallel.hpp"
#include "cforge/state.hpp"

namespace cforge {

class Povm;

struct CoherenceReport {
  double c_l1 = 0.0;
  double c_rel_ent = 0.0;
  int state_dim = 0;
};

// Sum of absolute values of off-diagonal entries.
double c_l1(const DensityMatrix& rho);

// S(dephase(rho)) - S(rho), in bits.
double c_rel_ent(const DensityMatrix& rho);

CoherenceReport coherence_report(const DensityMatrix& rho);

// Trace-norm coherence for qubits; coincides with c_l1.
double c_trace_qubit(const DensityMatrix& rho);

// Qubit coherence of formation, H2((1 + sqrt(1 - C^2)) / 2) with C = c_l1.
double c_formation_qubit(const DensityMatrix& rho);

// Lower bound on the coherence of formation of a rank-2 state supported on
// span{e1, e2}: minimum diagonal entropy over the pure states
// cos(theta) e1 + e^{i phi} sin(theta) e2 on a grid with one local
// refinement pass. e1 and e2 must be orthonormal.
double c_formation_rank2_bound(const DensityMatrix& rho, const Eigen::VectorXcd& e1,
                               const Eigen::VectorXcd& e2, int theta_steps = 181,
                               int phi_steps = 360, ExecMode mode = ExecMode::parallel);

// Sum of absolute off-diagonal entries of a measurement effect.
double raw_quantumness_element(const ComplexMatrix& effect);

// True when every effect of the POVM is diagonal (raw quantumness <= 1e-10).
bool is_free_measurement(const Povm& povm);

inline constexpr double kRawQuantumnessTol = 1e-10;

}  // namespace cforge
