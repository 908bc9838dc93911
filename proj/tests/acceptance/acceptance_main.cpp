// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "cforge/coherence.hpp"
#include "cforge/csv.hpp"
#include "cforge/dilation.hpp"
#include "cforge/errors.hpp"
#include "cforge/experiments.hpp"
#include "cforge/measurement.hpp"
#include "cforge/random_povm.hpp"

namespace {

using namespace cforge;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240718;

struct CriterionResult {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& label) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + label;
    }
  }
  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

const DensityMatrix delta0() { return from_bloch({0, 0, 1}); }

double sharp_basis_coherence(double alpha_abs) {
  return c_l1(luders_apply(coherent_basis_projectors(Complex(alpha_abs, 0.0)), delta0()));
}

// ---------------------------------------------------------------------------
// C1: projective coherence creation maxima

CriterionResult criterion1(bool) {
  CriterionResult result;
  constexpr int points = 1000;
  std::vector<double> values(points);
  for (int i = 0; i < points; ++i) {
    values[i] = sharp_basis_coherence(static_cast<double>(i) / (points - 1));
  }
  const double split = 1.0 / std::sqrt(2.0);

  auto refine_peak = [&](double lo, double hi) {
    double best_x = lo, best_v = -1.0;
    for (int pass = 0; pass < 4; ++pass) {
      best_v = -1.0;
      for (int i = 0; i <= 200; ++i) {
        const double x = lo + (hi - lo) * i / 200.0;
        const double v = sharp_basis_coherence(x);
        if (v > best_v) {
          best_v = v;
          best_x = x;
        }
      }
      const double width = (hi - lo) / 10.0;
      lo = std::max(0.0, best_x - width);
      hi = std::min(1.0, best_x + width);
    }
    return std::pair{best_x, best_v};
  };

  const auto [x1, v1] = refine_peak(0.0, split);
  const auto [x2, v2] = refine_peak(split, 1.0);

  result.require(std::abs(v1 - 0.5) <= 1e-6, "first peak value 0.5 within 1e-6");
  result.require(std::abs(v2 - 0.5) <= 1e-6, "second peak value 0.5 within 1e-6");
  result.require(std::abs(x1 - 0.38268343) <= 1e-3, "first argmax 0.38268 within 1e-3");
  result.require(std::abs(x2 - 0.92387953) <= 1e-3, "second argmax 0.92388 within 1e-3");
  result.note("peaks " + fmt9(v1) + "@" + fmt9(x1) + ", " + fmt9(v2) + "@" + fmt9(x2));
  return result;
}

// ---------------------------------------------------------------------------
// C2: one-parameter closed form vs matrix channel; sharpness proportionality

CriterionResult criterion2(bool) {
  CriterionResult result;
  double max_dev = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng = substream(kSeed, 0xC2, trial);
    const double angle = rng.uniform(0.0, 6.283185307);
    const Complex alpha = rng.uniform() * Complex(std::cos(angle), std::sin(angle));
    const double lambda = rng.uniform();
    const DensityMatrix rho = from_bloch(sample_bloch_ball(rng));
    const DensityMatrix closed = one_param_apply_closed({alpha, lambda}, rho);
    const DensityMatrix channel = luders_apply(one_param_povm({alpha, lambda}), rho);
    max_dev = std::max(max_dev, max_abs_diff(closed.matrix(), channel.matrix()));
  }
  result.require(max_dev <= 1e-9, "closed form == Luders channel within 1e-9");
  result.note("max channel deviation " + fmt9(max_dev));

  double max_prop_dev = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = substream(kSeed, 0xC2B, trial);
    const double angle = rng.uniform(0.0, 6.283185307);
    const Complex alpha = rng.uniform() * Complex(std::cos(angle), std::sin(angle));
    const double c_sharp = c_l1(one_param_apply_closed({alpha, 1.0}, delta0()));
    for (int li = 0; li <= 50; ++li) {
      const double lambda = static_cast<double>(li) / 50.0;
      const double expected = (1.0 - std::sqrt(1.0 - lambda * lambda)) * c_sharp;
      const double got = c_l1(one_param_apply_closed({alpha, lambda}, delta0()));
      max_prop_dev = std::max(max_prop_dev, std::abs(got - expected));
    }
  }
  result.require(max_prop_dev <= 1e-12, "sharpness proportionality exact to 1e-12");
  result.note("max proportionality deviation " + fmt9(max_prop_dev));
  return result;
}

// ---------------------------------------------------------------------------
// C3: numerical maximization matches the closed-form maximum

CriterionResult criterion3(bool) {
  CriterionResult result;
  double max_dev = 0.0;
  double min_lambda = 1.0;
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = substream(kSeed, 0xC3, trial);
    const BlochVector r = sample_bloch_ball(rng);
    const OneParamMax numeric = maximize_one_param(from_bloch(r), {400, 90, 100});
    max_dev = std::max(max_dev, std::abs(numeric.c_max - one_param_max_closed(r)));
    // lambda* = 1 wherever the grid resolves a gain over the identity plateau
    if (one_param_max_closed(r) - std::hypot(r.r1, r.r2) > 1e-3) {
      min_lambda = std::min(min_lambda, numeric.lambda);
    }
  }
  result.require(max_dev <= 1e-3, "numeric max matches formula within 1e-3");
  result.require(min_lambda > 0.98, "lambda* = 1 at every resolvable optimum");
  result.note("max |numeric - formula| " + fmt9(max_dev) + ", min lambda* " + fmt9(min_lambda));
  return result;
}

// ---------------------------------------------------------------------------
// C4: fig2 envelope with 15000 states

CriterionResult criterion4(bool) {
  CriterionResult result;
  const Fig2Result fig2 = fig2_scatter(15000, kSeed);
  result.require(fig2.violations_analytic == 0, "zero analytic envelope violations (1e-9)");
  result.require(fig2.violations_numeric == 0, "zero numeric envelope violations (1e-6)");
  result.note("violations analytic " + std::to_string(fig2.violations_analytic) + ", numeric " +
              std::to_string(fig2.violations_numeric));
  return result;
}

// ---------------------------------------------------------------------------
// C5: two-outcome bound on delta0

CriterionResult criterion5(bool) {
  CriterionResult result;
  double best_sampled = 0.0;
  double max_ceiling_excess = 0.0;
  double max_oracle_dev = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const TwoOutcomeParams p =
        sample_two_outcome_params({2, 2, kSeed, static_cast<std::uint64_t>(trial)});
    const BlochVector s = kernels::two_outcome_evolved_bloch(p, {0, 0, 1});
    const double c = std::hypot(s.r1, s.r2);
    best_sampled = std::max(best_sampled, c);
    max_ceiling_excess = std::max(max_ceiling_excess, c - 0.5);
    const BlochVector via_channel =
        to_bloch(luders_apply(two_outcome_povm(p), delta0()));
    max_oracle_dev = std::max({max_oracle_dev, std::abs(s.r1 - via_channel.r1),
                               std::abs(s.r2 - via_channel.r2), std::abs(s.r3 - via_channel.r3)});
  }
  result.require(max_ceiling_excess <= 1e-9, "coherence never exceeds 0.5 (slack 1e-9)");
  result.require(max_oracle_dev <= 1e-8, "closed form matches matrix oracle within 1e-8");

  const TwoOutcomeMax refined = maximize_two_outcome(delta0(), 10000, kSeed);
  result.require(refined.c_max >= 0.495, "best found >= 0.495 after refinement");
  result.note("best sampled " + fmt9(best_sampled) + ", refined " + fmt9(refined.c_max) +
              ", oracle dev " + fmt9(max_oracle_dev));
  return result;
}

// ---------------------------------------------------------------------------
// C6: fig3 decay

CriterionResult criterion6(bool paper_scale) {
  CriterionResult result;
  const std::int64_t samples = paper_scale ? 220000 : 10000;
  const int n_max = paper_scale ? 20 : 10;
  const Fig3Result fig3 = fig3_decay(n_max, samples, kSeed);

  double max_increase = 0.0;
  for (std::size_t i = 1; i < fig3.rows.size(); ++i) {
    max_increase = std::max(max_increase, fig3.rows[i].c_max - fig3.rows[i - 1].c_max);
  }
  result.require(max_increase <= 0.02, "sequence non-increasing within 0.02");
  const auto [b_lo, b_hi] = paper_scale ? std::pair{0.32, 0.42} : std::pair{0.25, 0.50};
  result.require(fig3.fit.rate_b >= b_lo && fig3.fit.rate_b <= b_hi,
                 "fitted b in [" + fmt9(b_lo) + ", " + fmt9(b_hi) + "]");
  result.require(fig3.fit.residual < 0.1, "fit residual < 0.1");
  result.note("fitted b " + fmt9(fig3.fit.rate_b) + ", residual " + fmt9(fig3.fit.residual) +
              ", C_max range [" + fmt9(fig3.rows.back().c_max) + ", " +
              fmt9(fig3.rows.front().c_max) + "]");
  return result;
}

// ---------------------------------------------------------------------------
// C7: fig4 saturation

CriterionResult criterion7(bool paper_scale) {
  CriterionResult result;
  const Fig4Result fig4 = fig4_successive(30, paper_scale ? 220000 : 10000, kSeed);
  bool monotone = true;
  for (std::size_t i = 1; i < fig4.rows.size(); ++i) {
    monotone = monotone && fig4.rows[i].c_best >= fig4.rows[i - 1].c_best;
  }
  result.require(monotone, "sequence monotone non-decreasing");
  result.require(fig4.saturation >= 0.74 && fig4.saturation <= 0.78,
                 "saturation in [0.74, 0.78]");
  result.note("saturation " + fmt9(fig4.saturation) + " (reference value 0.76525)");
  return result;
}

// ---------------------------------------------------------------------------
// C8: free measurements and the trine family

CriterionResult criterion8(bool) {
  CriterionResult result;
  double max_gain = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng = substream(kSeed, 0xC8, trial);
    const Povm free_povm = sample_free_povm(2 + trial % 3, kSeed, trial);
    const DensityMatrix rho = from_bloch(sample_bloch_ball(rng));
    max_gain = std::max(max_gain, c_l1(luders_apply(free_povm, rho)) - c_l1(rho));
  }
  result.require(max_gain <= 1e-9, "free measurements never increase c_l1 (1e-9)");

  bool trine_ok = true;
  for (int k = 1; k <= 9; ++k) {
    const Povm trine = trine_cnm_povm(0.1 * k);
    double max_raw = 0.0;
    for (std::size_t i = 0; i < trine.size(); ++i) {
      max_raw = std::max(max_raw, trine.raw_quantumness(i));
    }
    trine_ok = trine_ok && is_cnm_qubit(trine) && max_raw > 1e-10;
  }
  result.require(trine_ok, "trine family CNM with positive raw quantumness, t in {0.1..0.9}");

  bool closure_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = substream(kSeed, 0xC8B, trial);
    const Povm a = (trial % 2 == 0) ? trine_cnm_povm(0.1 + 0.8 * rng.uniform())
                                    : sample_free_povm(2 + trial % 3, kSeed + 1, trial);
    const Povm b = (trial % 3 == 0) ? trine_cnm_povm(0.1 + 0.8 * rng.uniform())
                                    : sample_free_povm(2 + (trial + 1) % 3, kSeed + 2, trial);
    for (int k = 0; k < 2 && closure_ok; ++k) {
      ComplexMatrix basis = ComplexMatrix::Zero(2, 2);
      basis(k, k) = 1.0;
      closure_ok = is_incoherent(compose_channels(a, b, DensityMatrix(basis)), 1e-9);
    }
    for (int k = 0; k < 4 && closure_ok; ++k) {
      ComplexMatrix basis = ComplexMatrix::Zero(4, 4);
      basis(k, k) = 1.0;
      closure_ok = is_incoherent(tensor_channels(a, b, DensityMatrix(basis)), 1e-9);
    }
  }
  result.require(closure_ok, "compositions and tensors of CNMs stay CNM on endpoints");
  result.note("max free-measurement gain " + fmt9(max_gain));
  return result;
}

// ---------------------------------------------------------------------------
// C9: CNM monotonicity of both measures

CriterionResult criterion9(bool) {
  CriterionResult result;
  double max_l1_gain = 0.0;
  double max_re_gain = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng = substream(kSeed, 0xC9, trial);
    const Povm cnm = (trial % 2 == 0) ? trine_cnm_povm(0.1 + 0.8 * rng.uniform())
                                      : sample_free_povm(2 + trial % 3, kSeed + 3, trial);
    const DensityMatrix rho = from_bloch(sample_bloch_ball(rng));
    const DensityMatrix out = luders_apply(cnm, rho);
    max_l1_gain = std::max(max_l1_gain, c_l1(out) - c_l1(rho));
    max_re_gain = std::max(max_re_gain, c_rel_ent(out) - c_rel_ent(rho));
  }
  result.require(max_l1_gain <= 1e-9, "c_l1 never increases under CNMs (1e-9)");
  result.require(max_re_gain <= 1e-9, "c_rel_ent never increases under CNMs (1e-9)");
  result.note("max gains l1 " + fmt9(max_l1_gain) + ", rel-ent " + fmt9(max_re_gain));
  return result;
}

// ---------------------------------------------------------------------------
// C10: coherence-of-formation example

CriterionResult criterion10(bool) {
  CriterionResult result;
  const CnmCfExample example = cnm_cf_example(181, 360);
  result.require(example.effect_cnm[0] && example.effect_cnm[1], "each printed effect is CNM");
  result.require(example.c_f_final_lower_bound - 1.0 >= 0.01,
                 "rank-2 bound exceeds 1 by at least 0.01");
  result.note("recorded bound " + fmt9(example.c_f_final_lower_bound) + ", C_f initial " +
              fmt9(example.c_f_initial) + ", increased " +
              (example.increased ? "yes" : "no"));
  return result;
}

// ---------------------------------------------------------------------------
// C11: trade-off inequality audit

CriterionResult criterion11(bool) {
  CriterionResult result;
  const TradeoffResult audit = tradeoff_experiment(500, 20, kSeed);
  result.require(audit.violations_eq24 == 0, "lhs <= 2 + 1e-9 in every sampled case");
  result.require(audit.violations_eq23 == 0, "E <= intermediate bound + 1e-9 in every case");
  const double neumark_dev = neumark_consistency_max_dev(100, kSeed);
  result.require(neumark_dev <= 1e-8, "Neumark consistency within 1e-8 on 100 pure setups");
  result.note("rows " + std::to_string(audit.rows.size()) + ", Neumark max dev " +
              fmt9(neumark_dev));
  return result;
}

// ---------------------------------------------------------------------------
// C12: byte-identical reruns under both execution modes

CriterionResult criterion12(bool) {
  CriterionResult result;
  auto check_pair = [&](const std::string& name, const std::string& a, const std::string& b,
                        const std::string& c) {
    result.require(!a.empty() && a == b, name + " rerun byte-identical");
    result.require(a == c, name + " serial == parallel bytes");
  };

  check_pair("fig2", to_csv(fig2_scatter(500, kSeed, {32, 12, 20})),
             to_csv(fig2_scatter(500, kSeed, {32, 12, 20})),
             to_csv(fig2_scatter(500, kSeed, {32, 12, 20}, ExecMode::serial)));
  check_pair("two-outcome-scatter", to_csv(two_outcome_scatter(50, 2000, kSeed)),
             to_csv(two_outcome_scatter(50, 2000, kSeed)),
             to_csv(two_outcome_scatter(50, 2000, kSeed, ExecMode::serial)));
  check_pair("fig3", to_csv(fig3_decay(5, 1000, kSeed)), to_csv(fig3_decay(5, 1000, kSeed)),
             to_csv(fig3_decay(5, 1000, kSeed, ExecMode::serial)));
  check_pair("fig4", to_csv(fig4_successive(8, 1000, kSeed)),
             to_csv(fig4_successive(8, 1000, kSeed)),
             to_csv(fig4_successive(8, 1000, kSeed, ExecMode::serial)));
  check_pair("tradeoff", to_csv(tradeoff_experiment(30, 5, kSeed)),
             to_csv(tradeoff_experiment(30, 5, kSeed)),
             to_csv(tradeoff_experiment(30, 5, kSeed, ExecMode::serial)));
  check_pair("cnm-example", to_csv(cnm_cf_example(61, 60)), to_csv(cnm_cf_example(61, 60)),
             to_csv(cnm_cf_example(61, 60, ExecMode::serial)));
  return result;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<CriterionResult(bool)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "projective coherence creation maxima", 1.0, criterion1},
      {2, "one-parameter closed form equivalence", 5.0, criterion2},
      {3, "analytic maximum formula", 60.0, criterion3},
      {4, "scatter envelope (15000 states)", 120.0, criterion4},
      {5, "two-outcome 1/2 bound", 60.0, criterion5},
      {6, "n-outcome decay fit", 600.0, criterion6},
      {7, "successive-measurement saturation", 600.0, criterion7},
      {8, "free measurements and trine family", 120.0, criterion8},
      {9, "CNM monotonicity", 120.0, criterion9},
      {10, "coherence-of-formation example", 30.0, criterion10},
      {11, "entanglement-coherence-mixedness trade-off", 300.0, criterion11},
      {12, "deterministic artifacts", 300.0, criterion12},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool paper_scale = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--paper-scale") == 0) {
      paper_scale = true;
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N] [--paper-scale]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  for (const Criterion& criterion : criteria()) {
    if (only != 0 && criterion.id != only) continue;
    const auto start = Clock::now();
    CriterionResult result;
    try {
      result = criterion.run(paper_scale);
    } catch (const Error& e) {
      result.pass = false;
      result.note(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
      result.pass = false;
      result.note("runtime " + fmt9(elapsed) + "s exceeds budget " +
                  fmt9(criterion.budget_seconds) + "s");
    }
    if (!result.pass) ++failures;
    std::printf("[C%02d] %s  %s (%.2fs) %s\n", criterion.id, result.pass ? "PASS" : "FAIL",
                criterion.title, elapsed, result.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
