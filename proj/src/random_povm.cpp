#include "cforge/random_povm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cforge/errors.hpp"

namespace cforge {

namespace {

ComplexMatrix ginibre(Rng& rng, int dim) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  return g;
}

}  // namespace

Povm sample_povm(const SamplerConfig& cfg) {
  if (cfg.n < 1 || cfg.dim < 1) throw InvalidParams("sample_povm needs n >= 1 and dim >= 1");
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    Rng rng = substream(cfg.master_seed, stream_tag::povm + attempt, cfg.sample_index);
    std::vector<ComplexMatrix> wisharts;
    wisharts.reserve(cfg.n);
    ComplexMatrix normalizer = ComplexMatrix::Zero(cfg.dim, cfg.dim);
    for (int i = 0; i < cfg.n; ++i) {
      const ComplexMatrix g = ginibre(rng, cfg.dim);
      wisharts.push_back(g * g.adjoint());
      normalizer += wisharts.back();
    }
    const HermitianEigen eig = herm_eig(normalizer);
    if (eig.eigenvalues[0] < 1e-12) continue;  // resample with the next substream
    RealVector inv_roots(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
      inv_roots[k] = 1.0 / std::sqrt(eig.eigenvalues[k]);
    }
    const ComplexMatrix whitener =
        eig.eigenvectors * inv_roots.asDiagonal() * eig.eigenvectors.adjoint();
    std::vector<ComplexMatrix> effects;
    effects.reserve(cfg.n);
    for (const ComplexMatrix& w : wisharts) {
      ComplexMatrix e = whitener * w * whitener;
      e = 0.5 * (e + e.adjoint());  // strip rounding skew
      effects.push_back(std::move(e));
    }
    return validate_povm(std::move(effects));
  }
  throw SingularNormalizer("sample_povm: normalizer persistently singular");
}

TwoOutcomeParams sample_two_outcome_params(const SamplerConfig& cfg) {
  Rng rng = substream(cfg.master_seed, stream_tag::two_outcome, cfg.sample_index);
  TwoOutcomeParams p;
  p.a_plus = rng.uniform();
  const double radius = std::min(p.a_plus, 1.0 - p.a_plus);
  p.a_vec = {0.0, 0.0, 0.0};
  if (radius > 1e-12) {
    for (;;) {
      const BlochVector candidate{rng.uniform(-radius, radius), rng.uniform(-radius, radius),
                                  rng.uniform(-radius, radius)};
      if (candidate.norm() <= radius) {
        p.a_vec = candidate;
        break;
      }
    }
  }
  return p;
}

BlochVector sample_bloch_ball(Rng& rng) {
  const double cos_theta = rng.uniform(-1.0, 1.0);
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double radius = std::cbrt(rng.uniform());
  return {radius * sin_theta * std::cos(phi), radius * sin_theta * std::sin(phi),
          radius * cos_theta};
}

Povm sample_free_povm(int n_outcomes, std::uint64_t master_seed, std::uint64_t sample_index) {
  if (n_outcomes < 1) throw InvalidParams("sample_free_povm needs n >= 1");
  Rng rng = substream(master_seed, stream_tag::diag_povm, sample_index);
  // Two independent simplex points via sorted-uniform gaps.
  std::vector<ComplexMatrix> effects(n_outcomes, ComplexMatrix::Zero(2, 2));
  for (int col = 0; col < 2; ++col) {
    std::vector<double> cuts(n_outcomes - 1);
    for (double& c : cuts) c = rng.uniform();
    std::sort(cuts.begin(), cuts.end());
    double previous = 0.0;
    for (int i = 0; i < n_outcomes; ++i) {
      const double next = (i + 1 < n_outcomes) ? cuts[i] : 1.0;
      effects[i](col, col) = next - previous;
      previous = next;
    }
  }
  return validate_povm(std::move(effects));
}

}  // namespace cforge
