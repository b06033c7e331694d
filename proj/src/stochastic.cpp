#include "younglab/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace younglab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// SplitMix64 finalizer (Steele, Lea, Flood 2014); used only to decorrelate
// seeds and stream indices before they reach the generator.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

double Rng::uniform() {
  // 53 high bits, scaled into [0, 1)
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted into (0, 1] so the log is finite.
  const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = kTwoPi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::circular_normal() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double re = normal();
  const double im = normal();
  return Complex(re * inv_sqrt2, im * inv_sqrt2);
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632BE59BD9B4E019ull)));
}

std::vector<FieldSample> sample_fields(const HMatrix2& gamma, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample_fields: sample count must be >= 1");
  const Lower2 L = cholesky_psd(gamma); // rejects non-PSD input
  Rng rng(seed);
  std::vector<FieldSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex xi1 = rng.circular_normal();
    const Complex xi2 = rng.circular_normal();
    out.push_back({L.l00 * xi1, L.l10 * xi1 + L.l11 * xi2});
  }
  return out;
}

EmpiricalGamma empirical_gamma(std::span<const FieldSample> samples) {
  if (samples.size() < 2)
    throw InvalidArgument("empirical_gamma: at least 2 samples are required");
  Kahan d0, d1, off_re, off_im;
  for (const FieldSample& s : samples) {
    d0.add(std::norm(s.e1));
    d1.add(std::norm(s.e_m1));
    const Complex cross = s.e1 * std::conj(s.e_m1);
    off_re.add(cross.real());
    off_im.add(cross.imag());
  }
  const double inv_n = 1.0 / static_cast<double>(samples.size());
  const HMatrix2 raw(d0.sum * inv_n, d1.sum * inv_n,
                     Complex(off_re.sum * inv_n, off_im.sum * inv_n));
  const double trace = raw.trace();
  if (trace <= 0.0) throw InvalidArgument("empirical_gamma: sample average has nonpositive trace");
  return {HMatrix2(raw.diag0() / trace, raw.diag1() / trace, raw.off() / trace), trace};
}

HMatrix2 project_to_state(const HMatrix2& m) {
  const auto [lo, hi] = m.eigenvalues();
  HMatrix2 clipped = m;
  if (lo < 0.0) {
    // Remove the negative eigenvalue's rank-1 component.
    if (hi <= 0.0) throw InvalidArgument("project_to_state: matrix has no positive part");
    // Eigenvector of hi: (off, hi - d0) unless the matrix is diagonal.
    const Complex off = m.off();
    if (std::abs(off) == 0.0) {
      clipped = m.diag0() >= m.diag1() ? HMatrix2(hi, 0.0, Complex(0.0, 0.0))
                                       : HMatrix2(0.0, hi, Complex(0.0, 0.0));
    } else {
      const Complex v0 = off;
      const double v1 = hi - m.diag0();
      const double n2 = std::norm(v0) + v1 * v1;
      clipped = HMatrix2(hi * std::norm(v0) / n2, hi * v1 * v1 / n2, hi * v0 * v1 / n2);
    }
  }
  const double trace = clipped.trace();
  if (trace <= 0.0) throw InvalidArgument("project_to_state: trace must be positive");
  return HMatrix2(clipped.diag0() / trace, clipped.diag1() / trace, clipped.off() / trace);
}

OutcomeCounts sample_outcomes(const JointDistribution& joint, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample_outcomes: sample count must be >= 1");
  const int m = joint.grid.size();
  const double w = joint.grid.weight();

  // Cell probabilities; reject genuine negativity, clip rounding noise.
  std::vector<double> cdf(2 * m);
  double acc = 0.0;
  for (int c = 0; c < 2 * m; ++c) {
    const double v = c < m ? joint.row_plus[c] : joint.row_minus[c - m];
    if (v < -1e-12)
      throw NegativeDistribution(
          "sample_outcomes: joint has negative cells and is not samplable; only an "
          "observed (nonnegative) distribution admits a sampling interpretation");
    acc += std::max(v, 0.0) * w;
    cdf[c] = acc;
  }
  if (std::abs(acc - 1.0) > 1e-9)
    throw InvalidArgument("sample_outcomes: joint must have total mass 1");
  for (double& x : cdf) x /= acc;
  cdf.back() = 1.0;

  OutcomeCounts counts{joint.grid, std::vector<std::uint64_t>(m, 0),
                       std::vector<std::uint64_t>(m, 0), n};
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    const int cell =
        static_cast<int>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (cell < m)
      ++counts.counts_plus[cell];
    else
      ++counts.counts_minus[cell - m];
  }
  return counts;
}

JointDistribution empirical_joint(const OutcomeCounts& counts) {
  if (counts.total == 0) throw InvalidArgument("empirical_joint: total count must be >= 1");
  const int m = counts.grid.size();
  if (static_cast<int>(counts.counts_plus.size()) != m ||
      static_cast<int>(counts.counts_minus.size()) != m)
    throw DimensionMismatch("empirical_joint: count rows must match grid size");
  const double scale = 1.0 / (static_cast<double>(counts.total) * counts.grid.weight());
  std::vector<double> plus(m), minus(m);
  for (int k = 0; k < m; ++k) {
    plus[k] = static_cast<double>(counts.counts_plus[k]) * scale;
    minus[k] = static_cast<double>(counts.counts_minus[k]) * scale;
  }
  return JointDistribution(counts.grid, std::move(plus), std::move(minus),
                           OutcomeLabel::polarizer);
}

} // namespace younglab
