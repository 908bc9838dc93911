#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cforge/dilation.hpp"
#include "cforge/measurement.hpp"
#include "cforge/parallel.hpp"
#include "cforge/random_povm.hpp"

namespace cforge {

// ---------------------------------------------------------------------------
// Coherence gain of the one-parameter POVM on |0><0| (fig1)

struct Fig1Row {
  double alpha_abs;
  double lambda;
  double c_final;
};

struct Fig1Result {
  std::vector<Fig1Row> rows;
  double max_c_sharp = 0.0;  // maximum of the lambda = 1 curve
};

Fig1Result fig1_curve(int alpha_points, const std::vector<double>& lambdas);

// ---------------------------------------------------------------------------
// Maximization over the one-parameter family

struct OneParamGrid {
  int alpha_abs_steps = 400;
  int phase_steps = 90;
  int lambda_steps = 100;
};

struct OneParamMax {
  double c_max = 0.0;
  double alpha_abs = 0.0;
  double alpha_phase = 0.0;
  double lambda = 0.0;
};

OneParamMax maximize_one_param(const DensityMatrix& rho, const OneParamGrid& grid = {},
                               ExecMode mode = ExecMode::parallel);

// Closed-form maximum (C + sqrt(C^2 + r3^2)) / 2 with C the initial l1
// coherence.
double one_param_max_closed(const DensityMatrix& rho);
double one_param_max_closed(const BlochVector& r);

// ---------------------------------------------------------------------------
// Scatter of maximal final coherence vs initial coherence (fig2)

struct Fig2Row {
  std::uint64_t index;
  BlochVector r;
  double c_initial;
  double c_max;          // closed form
  double c_max_numeric;  // grid + refinement
  double alpha_abs;      // numeric argmax
  double alpha_phase;
  double lambda;
};

struct Fig2Result {
  std::vector<Fig2Row> rows;
  std::uint64_t seed = 0;
  int violations_analytic = 0;  // envelope x <= y <= (x+1)/2, slack 1e-9
  int violations_numeric = 0;   // same envelope, slack 1e-6
};

Fig2Result fig2_scatter(std::int64_t n_states, std::uint64_t seed,
                        const OneParamGrid& numeric_grid = {48, 16, 30},
                        ExecMode mode = ExecMode::parallel);

// ---------------------------------------------------------------------------
// Sampled maximization over general two-outcome POVMs

struct TwoOutcomeMax {
  double c_max = 0.0;
  TwoOutcomeParams argmax;
};

TwoOutcomeMax maximize_two_outcome(const DensityMatrix& rho, std::int64_t samples,
                                   std::uint64_t seed, std::uint64_t index_base = 0,
                                   ExecMode mode = ExecMode::parallel);

struct TwoOutcomeScatterRow {
  std::uint64_t index;
  BlochVector r;
  double c_initial;
  double c_max;
  TwoOutcomeParams argmax;
};

struct TwoOutcomeScatterResult {
  std::vector<TwoOutcomeScatterRow> rows;
  std::uint64_t seed = 0;
  std::int64_t samples_per_state = 0;
  int violations = 0;
};

TwoOutcomeScatterResult two_outcome_scatter(std::int64_t n_states, std::int64_t samples_per_state,
                                            std::uint64_t seed, ExecMode mode = ExecMode::parallel);

// ---------------------------------------------------------------------------
// Decay of maximal induced coherence with the outcome count (fig3)

struct ExpFit {
  double amplitude = 0.0;
  double rate_b = 0.0;
  double residual = 0.0;  // RMS of log residuals
};

// Least squares on (n, ln value). Throws NonPositiveValue.
ExpFit fit_exponential(const std::vector<std::pair<double, double>>& points);

struct Fig3Row {
  int n;
  double c_max;
};

struct Fig3Result {
  std::vector<Fig3Row> rows;
  ExpFit fit;
  std::uint64_t seed = 0;
  std::int64_t samples_per_n = 0;
};

Fig3Result fig3_decay(int n_max, std::int64_t samples_per_n, std::uint64_t seed,
                      ExecMode mode = ExecMode::parallel);

// ---------------------------------------------------------------------------
// Successive two-outcome measurements on |0><0| (fig4)

struct Fig4Row {
  int step;
  double c_best;
  BlochVector state;
};

struct Fig4Result {
  std::vector<Fig4Row> rows;
  double saturation = 0.0;
  std::uint64_t seed = 0;
  std::int64_t samples_per_step = 0;
};

Fig4Result fig4_successive(int steps, std::int64_t samples_per_step, std::uint64_t seed,
                           ExecMode mode = ExecMode::parallel);

// ---------------------------------------------------------------------------
// Coherence-of-formation behaviour under the printed CNM pair

struct CnmCfExample {
  double c_f_initial = 0.0;
  double c_f_final_lower_bound = 0.0;
  bool increased = false;
  bool effect_cnm[2] = {false, false};
  double support_eigenvalues[2] = {0.0, 0.0};  // the two nonzero eigenvalues of rho_f
};

CnmCfExample cnm_cf_example(int theta_steps = 181, int phi_steps = 360,
                            ExecMode mode = ExecMode::parallel);

// The printed two-outcome CNM pair (off-diagonals -+ 1/(2 sqrt 2)).
Povm cnm_example_povm();

// ---------------------------------------------------------------------------
// Entanglement / coherence / mixedness trade-off audit

struct TradeoffRow {
  std::uint64_t setup_index;
  double theta;
  double phi;
  double e_gain;
  double e_min;
  double c_r_after;
  double mixedness;
  double lhs;
  double rhs;
  bool holds;
  bool eq23_holds;
};

struct TradeoffResult {
  std::vector<TradeoffRow> rows;
  std::uint64_t seed = 0;
  int violations_eq24 = 0;
  int violations_eq23 = 0;
};

TradeoffResult tradeoff_experiment(std::int64_t n_setups, int angles_per_setup,
                                   std::uint64_t seed, ExecMode mode = ExecMode::parallel);

// Max deviation between Tr_A[rho_2^M] and the induced-Kraus application over
// random pure-apparatus dilations.
double neumark_consistency_max_dev(std::int64_t n_setups, std::uint64_t seed,
                                   ExecMode mode = ExecMode::parallel);

// ---------------------------------------------------------------------------
// CSV emission (9 significant digits, deterministic byte-for-byte)

std::string to_csv(const Fig1Result& result);
std::string to_csv(const Fig2Result& result);
std::string to_csv(const TwoOutcomeScatterResult& result);
std::string to_csv(const Fig3Result& result);
std::string to_csv(const Fig4Result& result);
std::string to_csv(const TradeoffResult& result);
std::string to_csv(const CnmCfExample& result);

}  // namespace cforge
