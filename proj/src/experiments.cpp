#include "cforge/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cforge/coherence.hpp"
#include "cforge/csv.hpp"
#include "cforge/errors.hpp"

namespace cforge {

namespace {

constexpr double kDelta0Rho00 = 1.0;  // |0><0|

double one_param_final_c(double rho00, Complex rho01, Complex alpha, double lambda) {
  return 2.0 * std::abs(kernels::one_param_out01(alpha, lambda, rho00, rho01));
}

// Two-outcome final coherence straight from the Bloch kernel.
double two_outcome_final_c(const TwoOutcomeParams& p, const BlochVector& r) {
  const BlochVector s = kernels::two_outcome_evolved_bloch(p, r);
  return std::hypot(s.r1, s.r2);
}

}  // namespace

// ---------------------------------------------------------------------------
// fig1

Fig1Result fig1_curve(int alpha_points, const std::vector<double>& lambdas) {
  if (alpha_points < 2) throw InvalidParams("fig1 needs at least two alpha points");
  Fig1Result result;
  result.rows.reserve(static_cast<std::size_t>(alpha_points) * lambdas.size());
  for (const double lambda : lambdas) {
    for (int i = 0; i < alpha_points; ++i) {
      const double alpha_abs = static_cast<double>(i) / (alpha_points - 1);
      const double c =
          one_param_final_c(kDelta0Rho00, Complex(0, 0), Complex(alpha_abs, 0.0), lambda);
      result.rows.push_back({alpha_abs, lambda, c});
      if (lambda == 1.0) result.max_c_sharp = std::max(result.max_c_sharp, c);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// one-parameter maximization

double one_param_max_closed(const BlochVector& r) {
  const double c = std::hypot(r.r1, r.r2);
  return 0.5 * (c + std::sqrt(c * c + r.r3 * r.r3));
}

double one_param_max_closed(const DensityMatrix& rho) {
  return one_param_max_closed(to_bloch(rho));
}

namespace {

struct OneParamScanBest {
  double c = -1.0;
  double alpha_abs = 0.0;
  double phase = 0.0;
  double lambda = 0.0;
};

// Scan a rectangular (|alpha|, phase, lambda) box. Ties keep the first hit
// in scan order, so results do not depend on threading. The projected
// off-diagonal is lambda-independent and hoisted out of the inner loop.
OneParamScanBest scan_one_param_box(double rho00, Complex rho01, double alpha_lo, double alpha_hi,
                                    int alpha_steps, double phase_lo, double phase_hi,
                                    int phase_steps, double lambda_lo, double lambda_hi,
                                    int lambda_steps, ExecMode mode) {
  std::vector<double> keep_factors(lambda_steps);
  std::vector<double> lambdas(lambda_steps);
  for (int li = 0; li < lambda_steps; ++li) {
    const double lambda =
        lambda_steps == 1
            ? lambda_hi
            : lambda_lo + (lambda_hi - lambda_lo) * static_cast<double>(li) / (lambda_steps - 1);
    lambdas[li] = lambda;
    keep_factors[li] = std::sqrt(std::max(0.0, 1.0 - lambda * lambda));
  }

  std::vector<OneParamScanBest> row_best(alpha_steps);
  for_each_index(alpha_steps, mode, [&](std::int64_t ai) {
    const double alpha_abs =
        alpha_steps == 1
            ? alpha_lo
            : alpha_lo + (alpha_hi - alpha_lo) * static_cast<double>(ai) / (alpha_steps - 1);
    const double abs2 = alpha_abs * alpha_abs;
    const double bar = std::sqrt(std::max(0.0, 1.0 - abs2));
    const double rho11 = 1.0 - rho00;
    OneParamScanBest best;
    for (int pi_idx = 0; pi_idx < phase_steps; ++pi_idx) {
      const double phase =
          phase_steps == 1
              ? phase_lo
              : phase_lo + (phase_hi - phase_lo) * static_cast<double>(pi_idx) / phase_steps;
      const Complex alpha = alpha_abs * Complex(std::cos(phase), std::sin(phase));
      // <psi|rho|psi> - <psi~|rho|psi~>, times the |0><1| weight of the
      // projected state
      const double q_diff = (abs2 - bar * bar) * (rho00 - rho11) +
                            4.0 * bar * (std::conj(alpha) * rho01).real();
      const Complex projected = q_diff * bar * alpha;
      for (int li = 0; li < lambda_steps; ++li) {
        const double keep = keep_factors[li];
        const double c = 2.0 * std::abs(keep * rho01 + (1.0 - keep) * projected);
        if (c > best.c) best = {c, alpha_abs, phase, lambdas[li]};
      }
    }
    row_best[ai] = best;
  });
  OneParamScanBest best;
  for (const auto& candidate : row_best) {
    if (candidate.c > best.c) best = candidate;
  }
  return best;
}

OneParamMax maximize_one_param_entries(double rho00, Complex rho01, const OneParamGrid& grid,
                                       ExecMode mode) {
  if (grid.alpha_abs_steps < 2 || grid.phase_steps < 1 || grid.lambda_steps < 2) {
    throw InvalidParams("maximize_one_param grid too small");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  OneParamScanBest best =
      scan_one_param_box(rho00, rho01, 0.0, 1.0, grid.alpha_abs_steps, 0.0, two_pi,
                         grid.phase_steps, 0.0, 1.0, grid.lambda_steps, mode);

  // One refinement pass around the incumbent.
  const double da = 1.0 / (grid.alpha_abs_steps - 1);
  const double dp = two_pi / grid.phase_steps;
  const double dl = 1.0 / (grid.lambda_steps - 1);
  const OneParamScanBest refined = scan_one_param_box(
      rho00, rho01, std::max(0.0, best.alpha_abs - da), std::min(1.0, best.alpha_abs + da), 21,
      best.phase - dp, best.phase + dp, 21, std::max(0.0, best.lambda - dl),
      std::min(1.0, best.lambda + dl), 21, mode);
  if (refined.c > best.c) best = refined;
  return {best.c, best.alpha_abs, best.phase, best.lambda};
}

}  // namespace

OneParamMax maximize_one_param(const DensityMatrix& rho, const OneParamGrid& grid, ExecMode mode) {
  if (rho.dim() != 2) throw WrongDimension("maximize_one_param requires a qubit state");
  return maximize_one_param_entries(rho.matrix()(0, 0).real(), rho.matrix()(0, 1), grid, mode);
}

// ---------------------------------------------------------------------------
// fig2

Fig2Result fig2_scatter(std::int64_t n_states, std::uint64_t seed,
                        const OneParamGrid& numeric_grid, ExecMode mode) {
  Fig2Result result;
  result.seed = seed;
  result.rows.resize(n_states);
  for_each_index(n_states, mode, [&](std::int64_t i) {
    Rng rng = substream(seed, stream_tag::bloch_state, static_cast<std::uint64_t>(i));
    const BlochVector r = sample_bloch_ball(rng);
    const double rho00 = 0.5 * (1.0 + r.r3);
    const Complex rho01(0.5 * r.r1, -0.5 * r.r2);
    const OneParamMax numeric =
        maximize_one_param_entries(rho00, rho01, numeric_grid, ExecMode::serial);
    Fig2Row& row = result.rows[i];
    row.index = static_cast<std::uint64_t>(i);
    row.r = r;
    row.c_initial = std::hypot(r.r1, r.r2);
    row.c_max = one_param_max_closed(r);
    row.c_max_numeric = numeric.c_max;
    row.alpha_abs = numeric.alpha_abs;
    row.alpha_phase = numeric.alpha_phase;
    row.lambda = numeric.lambda;
  });
  for (const Fig2Row& row : result.rows) {
    const double upper = 0.5 * (row.c_initial + 1.0);
    if (row.c_max < row.c_initial - 1e-9 || row.c_max > upper + 1e-9) ++result.violations_analytic;
    if (row.c_max_numeric < row.c_initial - 1e-6 || row.c_max_numeric > upper + 1e-6) {
      ++result.violations_numeric;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// two-outcome maximization and scatter

namespace {

TwoOutcomeParams clamp_two_outcome(TwoOutcomeParams p) {
  p.a_plus = std::clamp(p.a_plus, 0.0, 1.0);
  const double radius = std::min(p.a_plus, p.a_minus());
  const double norm = p.a_vec.norm();
  if (norm > radius) {
    const double scale = radius > 0.0 ? radius / norm : 0.0;
    p.a_vec = scale * p.a_vec;
  }
  return p;
}

}  // namespace

TwoOutcomeMax maximize_two_outcome(const DensityMatrix& rho, std::int64_t samples,
                                   std::uint64_t seed, std::uint64_t index_base, ExecMode mode) {
  if (rho.dim() != 2) throw WrongDimension("maximize_two_outcome requires a qubit state");
  if (samples < 1) throw InvalidParams("maximize_two_outcome needs at least one sample");
  const BlochVector r = to_bloch(rho);

  std::vector<double> values(samples);
  for_each_index(samples, mode, [&](std::int64_t j) {
    const TwoOutcomeParams p = sample_two_outcome_params(
        {2, 2, seed, index_base + static_cast<std::uint64_t>(j)});
    values[j] = two_outcome_final_c(p, r);
  });

  // Trivial measurement I/2 guarantees c_max >= c_l1(rho).
  TwoOutcomeMax best;
  best.argmax = TwoOutcomeParams{0.5, {0.0, 0.0, 0.0}};
  best.c_max = two_outcome_final_c(best.argmax, r);
  for (std::int64_t j = 0; j < samples; ++j) {
    if (values[j] > best.c_max) {
      best.c_max = values[j];
      best.argmax = sample_two_outcome_params({2, 2, seed, index_base + static_cast<std::uint64_t>(j)});
    }
  }

  // Shrinking Gaussian local search, projected back onto the valid domain.
  double radius = 0.12;
  for (int pass = 0; pass < 6; ++pass, radius *= 0.35) {
    Rng rng = substream(seed, stream_tag::refine, index_base + static_cast<std::uint64_t>(pass));
    for (int k = 0; k < 500; ++k) {
      TwoOutcomeParams candidate = best.argmax;
      candidate.a_plus += radius * rng.normal();
      candidate.a_vec.r1 += radius * rng.normal();
      candidate.a_vec.r2 += radius * rng.normal();
      candidate.a_vec.r3 += radius * rng.normal();
      candidate = clamp_two_outcome(candidate);
      const double c = two_outcome_final_c(candidate, r);
      if (c > best.c_max) {
        best.c_max = c;
        best.argmax = candidate;
      }
    }
  }
  return best;
}

TwoOutcomeScatterResult two_outcome_scatter(std::int64_t n_states, std::int64_t samples_per_state,
                                            std::uint64_t seed, ExecMode mode) {
  TwoOutcomeScatterResult result;
  result.seed = seed;
  result.samples_per_state = samples_per_state;
  result.rows.resize(n_states);
  for_each_index(n_states, mode, [&](std::int64_t i) {
    Rng rng = substream(seed, stream_tag::bloch_state, static_cast<std::uint64_t>(i));
    const BlochVector r = sample_bloch_ball(rng);
    const TwoOutcomeMax best = maximize_two_outcome(
        from_bloch(r), samples_per_state, seed,
        static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(samples_per_state),
        ExecMode::serial);
    TwoOutcomeScatterRow& row = result.rows[i];
    row.index = static_cast<std::uint64_t>(i);
    row.r = r;
    row.c_initial = std::hypot(r.r1, r.r2);
    row.c_max = best.c_max;
    row.argmax = best.argmax;
  });
  for (const TwoOutcomeScatterRow& row : result.rows) {
    const double upper = 0.5 * (row.c_initial + 1.0);
    if (row.c_max < row.c_initial - 1e-9 || row.c_max > upper + 1e-9) ++result.violations;
  }
  return result;
}

// ---------------------------------------------------------------------------
// fig3

ExpFit fit_exponential(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw InvalidParams("fit_exponential needs at least two points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    if (y <= 0.0) throw NonPositiveValue("fit_exponential requires positive values");
    const double ly = std::log(y);
    sx += x;
    sy += ly;
    sxx += x * x;
    sxy += x * ly;
  }
  const double count = static_cast<double>(points.size());
  const double denom = count * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) throw InvalidParams("fit_exponential: degenerate abscissae");
  const double slope = (count * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / count;
  double residual_sq = 0.0;
  for (const auto& [x, y] : points) {
    const double r = std::log(y) - (intercept + slope * x);
    residual_sq += r * r;
  }
  return {std::exp(intercept), -slope, std::sqrt(residual_sq / count)};
}

namespace {

// c_l1 of the n-outcome Luders update of |0><0|: with v_i the first column
// of sqrt(E_i), the output off-diagonal is sum_i v_i0 conj(v_i1).
double povm_coherence_on_delta0(const Povm& povm) {
  Complex off(0.0, 0.0);
  for (std::size_t i = 0; i < povm.size(); ++i) {
    const ComplexMatrix& root = povm.sqrt_effect(i);
    off += root(0, 0) * std::conj(root(1, 0));
  }
  return 2.0 * std::abs(off);
}

}  // namespace

Fig3Result fig3_decay(int n_max, std::int64_t samples_per_n, std::uint64_t seed, ExecMode mode) {
  if (n_max < 4) throw InvalidParams("fig3 needs n_max >= 4");
  if (samples_per_n < 1) throw InvalidParams("fig3 needs at least one sample per n");
  Fig3Result result;
  result.seed = seed;
  result.samples_per_n = samples_per_n;

  std::vector<double> values(samples_per_n);
  for (int n = 2; n <= n_max; ++n) {
    const std::uint64_t index_base =
        static_cast<std::uint64_t>(n - 2) * static_cast<std::uint64_t>(samples_per_n);
    for_each_index(samples_per_n, mode, [&](std::int64_t j) {
      const Povm povm = sample_povm({n, 2, seed, index_base + static_cast<std::uint64_t>(j)});
      values[j] = povm_coherence_on_delta0(povm);
    });
    double c_max = 0.0;
    for (const double v : values) c_max = std::max(c_max, v);
    result.rows.push_back({n, c_max});
  }

  std::vector<std::pair<double, double>> points;
  points.reserve(result.rows.size());
  for (const Fig3Row& row : result.rows) {
    if (row.c_max > 0.0) points.emplace_back(static_cast<double>(row.n), row.c_max);
  }
  result.fit = fit_exponential(points);
  return result;
}

// ---------------------------------------------------------------------------
// fig4

namespace {

TwoOutcomeParams povm2_to_params(const Povm& povm) {
  const ComplexMatrix& e = povm.effect(0);
  TwoOutcomeParams p;
  p.a_plus = 0.5 * (e(0, 0) + e(1, 1)).real();
  p.a_vec = {e(0, 1).real(), -e(0, 1).imag(), 0.5 * (e(0, 0) - e(1, 1)).real()};
  return p;
}

}  // namespace

Fig4Result fig4_successive(int steps, std::int64_t samples_per_step, std::uint64_t seed,
                           ExecMode mode) {
  if (steps < 0) throw InvalidParams("fig4 needs steps >= 0");
  if (samples_per_step < 1) throw InvalidParams("fig4 needs at least one sample per step");
  Fig4Result result;
  result.seed = seed;
  result.samples_per_step = samples_per_step;

  BlochVector state{0.0, 0.0, 1.0};  // |0><0|
  double c_current = 0.0;
  result.rows.push_back({0, c_current, state});

  std::vector<double> values(samples_per_step);
  for (int step = 1; step <= steps; ++step) {
    const std::uint64_t index_base =
        static_cast<std::uint64_t>(step - 1) * static_cast<std::uint64_t>(samples_per_step);
    for_each_index(samples_per_step, mode, [&](std::int64_t j) {
      const Povm povm = sample_povm({2, 2, seed, index_base + static_cast<std::uint64_t>(j)});
      values[j] = two_outcome_final_c(povm2_to_params(povm), state);
    });
    std::int64_t best_j = -1;
    double best_c = c_current;  // keep the current state unless a sample beats it
    for (std::int64_t j = 0; j < samples_per_step; ++j) {
      if (values[j] > best_c) {
        best_c = values[j];
        best_j = j;
      }
    }
    if (best_j >= 0) {
      const Povm winner =
          sample_povm({2, 2, seed, index_base + static_cast<std::uint64_t>(best_j)});
      state = kernels::two_outcome_evolved_bloch(povm2_to_params(winner), state);
      c_current = best_c;
    }
    result.rows.push_back({step, c_current, state});
  }
  result.saturation = c_current;
  return result;
}

// ---------------------------------------------------------------------------
// CNM coherence-of-formation example

Povm cnm_example_povm() {
  const double off = 1.0 / (2.0 * std::sqrt(2.0));
  ComplexMatrix e1(2, 2), e2(2, 2);
  e1 << 0.5, -off, -off, 0.5;
  e2 << 0.5, off, off, 0.5;
  return validate_povm({e1, e2});
}

CnmCfExample cnm_cf_example(int theta_steps, int phi_steps, ExecMode mode) {
  CnmCfExample result;
  const Povm povm = cnm_example_povm();

  // Each printed effect, completed to a two-outcome measurement.
  for (int i = 0; i < 2; ++i) {
    const ComplexMatrix& e = povm.effect(i);
    result.effect_cnm[i] = is_cnm_qubit(validate_povm({e, identity(2) - e}));
  }

  // |psi+><psi+| with the measurement on the second qubit.
  Eigen::Vector4cd bell;
  bell << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  const DensityMatrix psi_plus(bell * bell.adjoint());
  result.c_f_initial = entropy(dephase(psi_plus));  // pure state: C_f = diagonal entropy

  const Povm identity_measurement = validate_povm({identity(2)});
  const DensityMatrix rho_f = tensor_channels(identity_measurement, povm, psi_plus);

  // Orthonormal support basis from the spectrum of the rank-2 output.
  const HermitianEigen eig = herm_eig(rho_f.matrix());
  result.support_eigenvalues[0] = eig.eigenvalues[3];
  result.support_eigenvalues[1] = eig.eigenvalues[2];
  const Eigen::VectorXcd e1 = eig.eigenvectors.col(3);
  const Eigen::VectorXcd e2 = eig.eigenvectors.col(2);

  result.c_f_final_lower_bound =
      c_formation_rank2_bound(rho_f, e1, e2, theta_steps, phi_steps, mode);
  result.increased = result.c_f_final_lower_bound > result.c_f_initial + 1e-9;
  return result;
}

// ---------------------------------------------------------------------------
// trade-off audit

namespace {

DilationSetup sample_setup(std::uint64_t seed, std::uint64_t index, bool pure_apparatus) {
  Rng rng = substream(seed, stream_tag::bloch_state, index);
  BlochVector r_apparatus = sample_bloch_ball(rng);
  if (pure_apparatus) {
    const double norm = r_apparatus.norm();
    r_apparatus = norm > 1e-12 ? (1.0 / norm) * r_apparatus : BlochVector{0.0, 0.0, 1.0};
  }
  const BlochVector r_system = sample_bloch_ball(rng);
  return DilationSetup(from_bloch(r_apparatus), from_bloch(r_system),
                       random_unitary_4(seed, index));
}

ApparatusProjectors sample_projector_angles(Rng& rng) {
  return {std::acos(rng.uniform(-1.0, 1.0)), rng.uniform(0.0, 2.0 * std::numbers::pi)};
}

}  // namespace

TradeoffResult tradeoff_experiment(std::int64_t n_setups, int angles_per_setup,
                                   std::uint64_t seed, ExecMode mode) {
  if (n_setups < 1 || angles_per_setup < 1) throw InvalidParams("tradeoff audit needs work");
  TradeoffResult result;
  result.seed = seed;
  result.rows.resize(static_cast<std::size_t>(n_setups) * angles_per_setup);
  for_each_index(n_setups, mode, [&](std::int64_t s) {
    const DilationSetup setup = sample_setup(seed, static_cast<std::uint64_t>(s), false);
    const double setup_e_min = e_min(setup).value;
    Rng rng = substream(seed, stream_tag::projector, static_cast<std::uint64_t>(s));
    for (int a = 0; a < angles_per_setup; ++a) {
      const ApparatusProjectors proj = sample_projector_angles(rng);
      const TradeoffReport report = tradeoff_report(setup, proj);
      TradeoffRow& row = result.rows[static_cast<std::size_t>(s) * angles_per_setup + a];
      row.setup_index = static_cast<std::uint64_t>(s);
      row.theta = proj.theta;
      row.phi = proj.phi;
      row.e_gain = report.e_gain;
      row.e_min = setup_e_min;
      row.c_r_after = report.c_r_system_after;
      row.mixedness = report.mixedness;
      row.lhs = report.lhs;
      row.rhs = report.rhs;
      row.holds = report.holds;
      row.eq23_holds = report.eq23_holds;
    }
  });
  for (const TradeoffRow& row : result.rows) {
    if (!row.holds) ++result.violations_eq24;
    if (!row.eq23_holds) ++result.violations_eq23;
  }
  return result;
}

double neumark_consistency_max_dev(std::int64_t n_setups, std::uint64_t seed, ExecMode mode) {
  std::vector<double> deviations(n_setups);
  for_each_index(n_setups, mode, [&](std::int64_t s) {
    const DilationSetup setup = sample_setup(seed, static_cast<std::uint64_t>(s), true);
    Rng rng = substream(seed, stream_tag::projector, static_cast<std::uint64_t>(s));
    const ApparatusProjectors proj = sample_projector_angles(rng);
    const DensityMatrix rho2m = dilate_and_measure(setup, proj);
    const ComplexMatrix reduced = partial_trace(rho2m.matrix(), 1, {2, 2});
    ComplexMatrix via_kraus = ComplexMatrix::Zero(2, 2);
    for (const ComplexMatrix& k : induced_system_kraus(setup, proj)) {
      via_kraus += k * setup.rho_system().matrix() * k.adjoint();
    }
    deviations[s] = max_abs_diff(reduced, via_kraus);
  });
  double max_dev = 0.0;
  for (const double d : deviations) max_dev = std::max(max_dev, d);
  return max_dev;
}

// ---------------------------------------------------------------------------
// CSV emission

std::string to_csv(const Fig1Result& result) {
  std::string out = "alpha_abs,lambda,c_final\n";
  for (const Fig1Row& row : result.rows) csv_row(out, row.alpha_abs, row.lambda, row.c_final);
  return out;
}

std::string to_csv(const Fig2Result& result) {
  std::string out =
      "seed,index,r1,r2,r3,c_initial,c_max,c_max_numeric,alpha_abs,alpha_phase,lambda\n";
  for (const Fig2Row& row : result.rows) {
    csv_row(out, result.seed, row.index, row.r.r1, row.r.r2, row.r.r3, row.c_initial, row.c_max,
            row.c_max_numeric, row.alpha_abs, row.alpha_phase, row.lambda);
  }
  return out;
}

std::string to_csv(const TwoOutcomeScatterResult& result) {
  std::string out = "seed,index,r1,r2,r3,c_initial,c_max,a_plus,a1,a2,a3\n";
  for (const TwoOutcomeScatterRow& row : result.rows) {
    csv_row(out, result.seed, row.index, row.r.r1, row.r.r2, row.r.r3, row.c_initial, row.c_max,
            row.argmax.a_plus, row.argmax.a_vec.r1, row.argmax.a_vec.r2, row.argmax.a_vec.r3);
  }
  return out;
}

std::string to_csv(const Fig3Result& result) {
  std::string out = "seed,n,samples,c_max\n";
  for (const Fig3Row& row : result.rows) {
    csv_row(out, result.seed, row.n, result.samples_per_n, row.c_max);
  }
  return out;
}

std::string to_csv(const Fig4Result& result) {
  std::string out = "seed,step,samples,c_best,r1,r2,r3\n";
  for (const Fig4Row& row : result.rows) {
    csv_row(out, result.seed, row.step, result.samples_per_step, row.c_best, row.state.r1,
            row.state.r2, row.state.r3);
  }
  return out;
}

std::string to_csv(const TradeoffResult& result) {
  std::string out = "seed,index,theta,phi,e_gain,e_min,c_r_after,mixedness,lhs,rhs,holds\n";
  for (const TradeoffRow& row : result.rows) {
    csv_row(out, result.seed, row.setup_index, row.theta, row.phi, row.e_gain, row.e_min,
            row.c_r_after, row.mixedness, row.lhs, row.rhs, row.holds);
  }
  return out;
}

std::string to_csv(const CnmCfExample& result) {
  std::string out =
      "c_f_initial,c_f_lower_bound,increased,effect1_cnm,effect2_cnm,support_eig1,support_eig2\n";
  csv_row(out, result.c_f_initial, result.c_f_final_lower_bound, result.increased,
          result.effect_cnm[0], result.effect_cnm[1], result.support_eigenvalues[0],
          result.support_eigenvalues[1]);
  return out;
}

}  // namespace cforge
