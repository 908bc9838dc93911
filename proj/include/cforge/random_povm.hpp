#pragma once

#include <cstdint>

#include "cforge/measurement.hpp"
#include "cforge/rng.hpp"

namespace cforge {

// (master_seed, sample_index) fully determines a sample; sampling is safe to
// fan out across threads.
struct SamplerConfig {
  int n = 2;
  int dim = 2;
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
};

// Ginibre -> Wishart -> symmetric normalization ensemble:
// A_i = G_i G_i^dagger, E_i = S^{-1/2} A_i S^{-1/2} with S = sum_i A_i.
Povm sample_povm(const SamplerConfig& cfg);

// a_plus uniform on [0,1]; a_vec uniform in the ball of radius
// min(a_plus, 1 - a_plus), by rejection from the bounding cube.
TwoOutcomeParams sample_two_outcome_params(const SamplerConfig& cfg);

// Uniform density in the Bloch ball (cube-root radial law).
BlochVector sample_bloch_ball(Rng& rng);

// Random diagonal (free) n-outcome qubit measurement: each basis column of
// outcome weights is an independent uniform point on the simplex.
Povm sample_free_povm(int n_outcomes, std::uint64_t master_seed, std::uint64_t sample_index);

}  // namespace cforge
