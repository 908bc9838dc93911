// coherence-forge: experiment runner and POVM inspector for coherence
// creation under non-selective measurements.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cforge/csv.hpp"
#include "cforge/errors.hpp"
#include "cforge/experiments.hpp"
#include "cforge/povm_io.hpp"

namespace {

using namespace cforge;

struct RunConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  std::int64_t samples = 0;  // 0 = experiment default
  std::int64_t states = 0;
  int nmax = 0;
  int steps = 0;
  std::int64_t setups = 0;
  int angles = 0;
  std::string out;
  std::string band;  // "lo:hi" override for the experiment's headline band
  bool paper_scale = false;
  bool serial = false;
};

// Parses "lo:hi"; falls back to the given defaults when unset.
std::pair<double, double> band_or(const RunConfig& cfg, double lo, double hi) {
  if (cfg.band.empty()) return {lo, hi};
  const std::size_t colon = cfg.band.find(':');
  if (colon == std::string::npos) throw ConfigError("--band expects lo:hi");
  try {
    return {std::stod(cfg.band.substr(0, colon)), std::stod(cfg.band.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ConfigError("--band expects numeric lo:hi");
  }
}

// Returns true when the file provided a seed.
bool apply_json_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw ConfigError("config must be a JSON object");
  bool saw_seed = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "experiment") cfg.experiment = value.get<std::string>();
    else if (key == "seed") { cfg.seed = value.get<std::uint64_t>(); saw_seed = true; }
    else if (key == "samples") cfg.samples = value.get<std::int64_t>();
    else if (key == "states") cfg.states = value.get<std::int64_t>();
    else if (key == "nmax") cfg.nmax = value.get<int>();
    else if (key == "steps") cfg.steps = value.get<int>();
    else if (key == "setups") cfg.setups = value.get<std::int64_t>();
    else if (key == "angles") cfg.angles = value.get<int>();
    else if (key == "out") cfg.out = value.get<std::string>();
    else if (key == "band") cfg.band = value.get<std::string>();
    else if (key == "paper_scale") cfg.paper_scale = value.get<bool>();
    else throw ConfigError("unknown config key '" + key + "'");
  }
  return saw_seed;
}

void write_artifact(const std::string& path, const std::string& csv) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << csv;
}

int run_experiment(RunConfig cfg) {
  const ExecMode mode = cfg.serial ? ExecMode::serial : ExecMode::parallel;
  if (cfg.out.empty()) cfg.out = cfg.experiment + ".csv";
  bool bands_ok = true;

  if (cfg.experiment == "fig1") {
    const Fig1Result result = fig1_curve(201, {0.25, 0.5, 0.75, 1.0});
    write_artifact(cfg.out, to_csv(result));
    bands_ok = result.max_c_sharp <= 0.5 + 1e-9;
    std::cout << "fig1: rows=" << result.rows.size() << " max_c_sharp=" << fmt9(result.max_c_sharp)
              << " out=" << cfg.out << "\n";
  } else if (cfg.experiment == "fig2") {
    const std::int64_t states = cfg.states > 0 ? cfg.states : 15000;
    const Fig2Result result = fig2_scatter(states, cfg.seed, {48, 16, 30}, mode);
    write_artifact(cfg.out, to_csv(result));
    bands_ok = result.violations_analytic == 0 && result.violations_numeric == 0;
    std::cout << "fig2: states=" << states << " violations_analytic=" << result.violations_analytic
              << " violations_numeric=" << result.violations_numeric << " out=" << cfg.out << "\n";
  } else if (cfg.experiment == "fig3") {
    const std::int64_t samples = cfg.samples > 0 ? cfg.samples : (cfg.paper_scale ? 220000 : 10000);
    const int nmax = cfg.nmax > 0 ? cfg.nmax : (cfg.paper_scale ? 20 : 10);
    const Fig3Result result = fig3_decay(nmax, samples, cfg.seed, mode);
    write_artifact(cfg.out, to_csv(result));
    const auto [b_lo, b_hi] =
        cfg.paper_scale ? band_or(cfg, 0.32, 0.42) : band_or(cfg, 0.25, 0.50);
    bands_ok = result.fit.rate_b >= b_lo && result.fit.rate_b <= b_hi &&
               result.fit.residual < 0.1;
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
      bands_ok = bands_ok && result.rows[i].c_max <= result.rows[i - 1].c_max + 0.02;
    }
    std::cout << "fig3: nmax=" << nmax << " samples_per_n=" << samples
              << " fitted_b=" << fmt9(result.fit.rate_b)
              << " residual=" << fmt9(result.fit.residual) << " out=" << cfg.out << "\n";
  } else if (cfg.experiment == "fig4") {
    const std::int64_t samples = cfg.samples > 0 ? cfg.samples : (cfg.paper_scale ? 220000 : 10000);
    const int steps = cfg.steps > 0 ? cfg.steps : 30;
    const Fig4Result result = fig4_successive(steps, samples, cfg.seed, mode);
    write_artifact(cfg.out, to_csv(result));
    const auto [sat_lo, sat_hi] = band_or(cfg, 0.74, 0.78);
    bands_ok = result.saturation >= sat_lo && result.saturation <= sat_hi;
    std::cout << "fig4: steps=" << steps << " samples_per_step=" << samples
              << " saturation=" << fmt9(result.saturation) << " out=" << cfg.out << "\n";
  } else if (cfg.experiment == "two-outcome-scatter") {
    const std::int64_t states = cfg.states > 0 ? cfg.states : 2000;
    const std::int64_t samples = cfg.samples > 0 ? cfg.samples : 10000;
    const TwoOutcomeScatterResult result = two_outcome_scatter(states, samples, cfg.seed, mode);
    write_artifact(cfg.out, to_csv(result));
    bands_ok = result.violations == 0;
    std::cout << "two-outcome-scatter: states=" << states << " samples_per_state=" << samples
              << " violations=" << result.violations << " out=" << cfg.out << "\n";
  } else if (cfg.experiment == "tradeoff") {
    const std::int64_t setups = cfg.setups > 0 ? cfg.setups : 500;
    const int angles = cfg.angles > 0 ? cfg.angles : 20;
    const TradeoffResult result = tradeoff_experiment(setups, angles, cfg.seed, mode);
    write_artifact(cfg.out, to_csv(result));
    bands_ok = result.violations_eq24 == 0 && result.violations_eq23 == 0;
    std::cout << "tradeoff: setups=" << setups << " angles=" << angles
              << " violations=" << result.violations_eq24 + result.violations_eq23
              << " out=" << cfg.out << "\n";
  } else if (cfg.experiment == "cnm-example") {
    const CnmCfExample result = cnm_cf_example(181, 360, mode);
    write_artifact(cfg.out, to_csv(result));
    bands_ok = result.effect_cnm[0] && result.effect_cnm[1] &&
               result.c_f_final_lower_bound >= 1.0 - 1e-9;
    std::cout << "cnm-example: c_f_initial=" << fmt9(result.c_f_initial)
              << " lower_bound=" << fmt9(result.c_f_final_lower_bound)
              << " increased=" << (result.increased ? 1 : 0) << " out=" << cfg.out << "\n";
  } else {
    throw ConfigError("unknown experiment '" + cfg.experiment + "'");
  }
  return bands_ok ? 0 : 1;
}

int run_validate(const std::string& path) {
  const Povm povm = load_povm_json(path);
  const PovmValidationReport report = inspect_povm(povm);
  std::cout << "dim=" << report.dim << " effects=" << report.n_effects << "\n";
  std::cout << "completeness_deviation=" << fmt9(report.completeness_deviation) << "\n";
  for (std::size_t i = 0; i < report.n_effects; ++i) {
    std::cout << "effect " << i << ": min_eigenvalue=" << fmt9(report.min_eigenvalues[i])
              << " raw_quantumness=" << fmt9(report.raw_quantumness[i]) << "\n";
  }
  std::cout << "free=" << (report.free_measurement ? "true" : "false") << "\n";
  std::cout << "cnm=" << (report.cnm ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence creation under non-selective quantum measurements"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  bool seed_given = false;

  CLI::App* run = app.add_subcommand("run", "run an experiment and emit its CSV artifact");
  run->add_option("experiment", cfg.experiment,
                  "one of fig1|fig2|fig3|fig4|two-outcome-scatter|tradeoff|cnm-example")
      ->required();
  run->add_option("--seed", cfg.seed, "master seed (env COHERENCE_FORGE_SEED used if unset)")
      ->each([&](const std::string&) { seed_given = true; });
  run->add_option("--samples", cfg.samples, "Monte-Carlo samples (per n / per step / per state)");
  run->add_option("--states", cfg.states, "number of sampled states (fig2, two-outcome-scatter)");
  run->add_option("--nmax", cfg.nmax, "largest outcome count (fig3)");
  run->add_option("--steps", cfg.steps, "number of successive measurement steps (fig4)");
  run->add_option("--setups", cfg.setups, "number of dilation setups (tradeoff)");
  run->add_option("--angles", cfg.angles, "projector samples per setup (tradeoff)");
  run->add_option("--out", cfg.out, "output CSV path (default <experiment>.csv)");
  run->add_option("--band", cfg.band,
                  "lo:hi override of the headline acceptance band (fig3 fitted b, fig4 saturation)");
  run->add_flag("--paper-scale", cfg.paper_scale, "use the publication sample counts");
  run->add_flag("--serial", cfg.serial, "run the serial reference kernels");
  run->add_option("--config", config_path, "JSON config; explicit flags win");

  std::string povm_path;
  CLI::App* validate = app.add_subcommand("validate", "validate and inspect a POVM JSON file");
  validate->add_option("povm", povm_path, "path to a POVM JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      bool config_gave_seed = false;
      if (!config_path.empty()) {
        RunConfig merged = cfg;
        config_gave_seed = apply_json_config(config_path, merged);
        // Explicit flags win over file values.
        if (seed_given) merged.seed = cfg.seed;
        if (run->count("--samples")) merged.samples = cfg.samples;
        if (run->count("--states")) merged.states = cfg.states;
        if (run->count("--nmax")) merged.nmax = cfg.nmax;
        if (run->count("--steps")) merged.steps = cfg.steps;
        if (run->count("--setups")) merged.setups = cfg.setups;
        if (run->count("--angles")) merged.angles = cfg.angles;
        if (run->count("--out")) merged.out = cfg.out;
        if (run->count("--band")) merged.band = cfg.band;
        if (run->count("--paper-scale")) merged.paper_scale = cfg.paper_scale;
        merged.experiment = cfg.experiment;
        merged.serial = cfg.serial;
        cfg = merged;
      }
      if (!seed_given && !config_gave_seed) {
        if (const char* env_seed = std::getenv("COHERENCE_FORGE_SEED")) {
          cfg.seed = std::strtoull(env_seed, nullptr, 10);
        }
      }
      return run_experiment(cfg);
    }
    return run_validate(povm_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
