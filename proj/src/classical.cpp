#include "younglab/classical.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace younglab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod can round back up to the period itself
  if (w >= kTwoPi) w = 0.0;
  return w;
}

} // namespace

CoherenceSpec::CoherenceSpec(double i1_in, double mu, double d)
    : i1(i1_in), i_m1(1.0 - i1_in), mu_abs(mu), delta(0.0) {
  if (!std::isfinite(i1_in) || i1_in < 0.0 || i1_in > 1.0)
    throw InvalidArgument("CoherenceSpec: i1 must lie in [0, 1] (intensities are normalized)");
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0)
    throw InvalidArgument("CoherenceSpec: mu_abs must lie in [0, 1]");
  if (!std::isfinite(d)) throw InvalidArgument("CoherenceSpec: delta must be finite");
  delta = wrap_angle(d);
}

MarkingConfig::MarkingConfig(double th, double vth, bool enforce)
    : theta(th), vartheta(vth), enforce_optimal(enforce) {
  if (!std::isfinite(th) || !std::isfinite(vth))
    throw InvalidArgument("MarkingConfig: angles must be finite");
  if (enforce && std::abs(2.0 * vth - th - kPi / 2.0) > 1e-12)
    throw InvalidArgument("MarkingConfig: optimal pairing requires 2*vartheta - theta = pi/2");
  for (double s : {0.0, kPi / 4.0, kPi / 2.0}) {
    if (std::abs(vth - s) < 1e-6) {
      std::ostringstream os;
      os << "MarkingConfig: vartheta = " << vth << " is within 1e-6 of the singular angle " << s;
      throw InvalidArgument(os.str());
    }
  }
}

MarkingConfig MarkingConfig::optimal(double vartheta) {
  return MarkingConfig(2.0 * vartheta - kPi / 2.0, vartheta, true);
}

HMatrix2 gamma_from_spec(const CoherenceSpec& spec) {
  const double root = std::sqrt(spec.i1 * spec.i_m1);
  const Complex mu = spec.mu_abs * Complex(std::cos(spec.delta), std::sin(spec.delta));
  return HMatrix2(spec.i1, spec.i_m1, mu * root);
}

std::pair<double, double> aperture_intensities(const HMatrix2& gamma) {
  if (std::abs(gamma.trace() - 1.0) > 1e-10)
    throw InvalidArgument("aperture_intensities: gamma must have unit trace");
  return {gamma.diag0(), gamma.diag1()};
}

Coherence degree_of_coherence(const HMatrix2& gamma) {
  if (gamma.diag0() <= 0.0 || gamma.diag1() <= 0.0)
    throw UndefinedCoherence("degree_of_coherence: both diagonal intensities must be > 0");
  const double mag = std::abs(gamma.off());
  const double mu = mag / std::sqrt(gamma.diag0() * gamma.diag1());
  const double delta = mag == 0.0 ? 0.0 : wrap_angle(std::arg(gamma.off()));
  return {mu, delta};
}

Vec2c phase_state(double phi) {
  const double norm = 1.0 / std::sqrt(kTwoPi);
  return {Complex(norm, 0.0), norm * Complex(std::cos(phi), std::sin(phi))};
}

Vec2c polarizer_state(double vartheta, int p) {
  const double c = std::cos(vartheta);
  const double s = std::sin(vartheta);
  if (p == 1) return {Complex(c, 0.0), Complex(s, 0.0)};
  if (p == -1) return {Complex(-s, 0.0), Complex(c, 0.0)};
  throw InvalidArgument("polarizer_state: outcome must be +1 or -1");
}

AngularDistribution interference_pattern(const HMatrix2& gamma, const PhiGrid& grid) {
  std::vector<double> values(grid.size());
  for (int k = 0; k < grid.size(); ++k) values[k] = sandwich(gamma, phase_state(grid.node(k)));
  return AngularDistribution(grid, std::move(values));
}

HMatrix4 marked_state(const HMatrix2& gamma, double theta) {
  // u_{+1} = cos(theta)|h> + sin(theta)|v>, u_{-1} = |h>
  const std::array<std::array<Complex, 2>, 2> u = {{
      {Complex(std::cos(theta), 0.0), Complex(std::sin(theta), 0.0)},
      {Complex(1.0, 0.0), Complex(0.0, 0.0)},
  }};
  std::array<Complex, 16> e;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          e[4 * (2 * i + a) + (2 * j + b)] = gamma.entry(i, j) * u[i][a] * std::conj(u[j][b]);
  return HMatrix4(e);
}

namespace {

Vec4c product_state(const Vec2c& s, const Vec2c& p) {
  return {s[0] * p[0], s[0] * p[1], s[1] * p[0], s[1] * p[1]};
}

} // namespace

JointDistribution marked_joint_intensity(const HMatrix4& gtilde, double vartheta,
                                         const PhiGrid& grid) {
  const Vec2c pol_plus = polarizer_state(vartheta, 1);
  const Vec2c pol_minus = polarizer_state(vartheta, -1);
  std::vector<double> plus(grid.size()), minus(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const Vec2c ph = phase_state(grid.node(k));
    plus[k] = sandwich(gtilde, product_state(ph, pol_plus));
    minus[k] = sandwich(gtilde, product_state(ph, pol_minus));
  }
  return JointDistribution(grid, std::move(plus), std::move(minus), OutcomeLabel::polarizer);
}

std::pair<double, double> polarization_marginal(const JointDistribution& joint) {
  if (joint.label != OutcomeLabel::polarizer)
    throw InvalidArgument("polarization_marginal: joint must carry polarizer outcomes");
  const double w = joint.grid.weight();
  double a = 0.0, b = 0.0;
  for (double v : joint.row_plus) a += v;
  for (double v : joint.row_minus) b += v;
  return {a * w, b * w};
}

AngularDistribution phase_marginal(const JointDistribution& joint) {
  std::vector<double> values(joint.grid.size());
  for (int k = 0; k < joint.grid.size(); ++k) values[k] = joint.row_plus[k] + joint.row_minus[k];
  return AngularDistribution(joint.grid, std::move(values));
}

} // namespace younglab
