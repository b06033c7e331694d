#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "younglab/distribution.hpp"
#include "younglab/hermitian.hpp"

namespace younglab {

/// Deterministic random source: std::mt19937_64 (algorithmically pinned by
/// the C++ standard) seeded through the SplitMix64 finalizer, with uniform
/// and normal variates derived by fixed arithmetic (53-bit mantissa scaling,
/// Box-Muller) rather than the implementation-defined standard
/// distributions. Identical seeds therefore reproduce identical streams on
/// any conforming platform. Substreams for independent workers come from
/// split(), which mixes a stream index into the seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal via Box-Muller on uniform(); pairs are cached.
  double normal();

  /// Circular complex standard normal, E|xi|^2 = 1.
  Complex circular_normal();

  /// Independent deterministic substream for the given index.
  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// One realization of the complex amplitudes at the two apertures.
struct FieldSample {
  Complex e1;
  Complex e_m1;
};

/// Draw n field realizations with second moments prescribed by gamma:
/// E = L xi with L the PSD factor of gamma and xi a pair of independent
/// circular complex standard normals. Deterministic per seed.
std::vector<FieldSample> sample_fields(const HMatrix2& gamma, std::size_t n, std::uint64_t seed);

struct EmpiricalGamma {
  HMatrix2 gamma;   ///< sample average of |E><E|, renormalized to unit trace
  double raw_trace; ///< trace of the raw (unnormalized) sample average
};

/// Sample-average estimator of the cross-spectral density; compensated
/// summation keeps the reduction reproducible across accumulation orders.
/// Requires at least 2 samples.
EmpiricalGamma empirical_gamma(std::span<const FieldSample> samples);

/// Nearest physical state: eigenvalues clipped at 0, trace renormalized to 1.
/// Finite-sample estimates can leave the PSD cone by rounding; this puts
/// them back before they enter the inversion pipeline.
HMatrix2 project_to_state(const HMatrix2& m);

/// Multinomial outcome counts over the 2 x n_grid cells of a joint
/// distribution.
struct OutcomeCounts {
  PhiGrid grid;
  std::vector<std::uint64_t> counts_plus;
  std::vector<std::uint64_t> counts_minus;
  std::uint64_t total;
};

/// Multinomial draw of n outcomes with cell probabilities value x weight.
/// The joint must be a physically observed (nonnegative) distribution:
/// cells below -1e-12 are rejected, since a negative quasi-probability has
/// no sampling interpretation; rounding-level negatives are clipped to 0.
/// Deterministic per seed.
OutcomeCounts sample_outcomes(const JointDistribution& joint, std::size_t n, std::uint64_t seed);

/// Density estimate count / (total x weight); polarizer-labeled, since only
/// observed joints are samplable. Total mass is 1 by construction.
JointDistribution empirical_joint(const OutcomeCounts& counts);

} // namespace younglab
