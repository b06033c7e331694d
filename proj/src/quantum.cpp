#include "younglab/quantum.hpp"

#include <cmath>
#include <numbers>

namespace younglab {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

void check_density(const HMatrix2& rho, const char* what) {
  if (std::abs(rho.trace() - 1.0) > 1e-10)
    throw InvalidArgument(std::string(what) + ": density matrix must have unit trace");
  if (!is_psd(rho, 1e-10))
    throw NotPositiveSemidefinite(std::string(what) + ": density matrix must be PSD");
}

} // namespace

double BlochVector::norm() const { return std::sqrt(sx * sx + sy * sy + sz * sz); }

HMatrix2 rho_from_bloch(const BlochVector& s) {
  if (!std::isfinite(s.sx) || !std::isfinite(s.sy) || !std::isfinite(s.sz))
    throw InvalidArgument("rho_from_bloch: Bloch components must be finite");
  if (s.sx * s.sx + s.sy * s.sy + s.sz * s.sz > 1.0 + 1e-12)
    throw InvalidArgument("rho_from_bloch: Bloch vector must satisfy |s| <= 1");
  return HMatrix2(0.5 * (1.0 + s.sz), 0.5 * (1.0 - s.sz), 0.5 * Complex(s.sx, -s.sy));
}

BlochVector bloch_from_rho(const HMatrix2& rho) {
  check_density(rho, "bloch_from_rho");
  return {2.0 * rho.off().real(), -2.0 * rho.off().imag(), rho.diag0() - rho.diag1()};
}

std::pair<double, double> path_probabilities(const HMatrix2& rho) {
  check_density(rho, "path_probabilities");
  return {rho.diag0(), rho.diag1()};
}

AngularDistribution phase_distribution(const HMatrix2& rho, const PhiGrid& grid) {
  check_density(rho, "phase_distribution");
  return interference_pattern(rho, grid);
}

JointDistribution marked_joint_probability(const HMatrix2& rho, double vartheta,
                                           const PhiGrid& grid) {
  check_density(rho, "marked_joint_probability");
  const BlochVector s = bloch_from_rho(rho);
  const double sin2 = std::sin(2.0 * vartheta);
  const double cos2 = std::cos(2.0 * vartheta);
  std::vector<double> plus(grid.size()), minus(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const double phi = grid.node(k);
    const double fringe = sin2 * (std::cos(phi) * s.sx + std::sin(phi) * s.sy);
    plus[k] = (1.0 + fringe - cos2 * s.sz) / kFourPi;
    minus[k] = (1.0 + fringe + cos2 * s.sz) / kFourPi;
  }
  return JointDistribution(grid, std::move(plus), std::move(minus), OutcomeLabel::polarizer);
}

double coherence_of_state(const HMatrix2& rho) {
  if (rho.diag0() <= 0.0 || rho.diag1() <= 0.0)
    throw UndefinedCoherence(
        "coherence_of_state: undefined for pure path states (a diagonal entry vanishes)");
  return std::norm(rho.off()) / (rho.diag0() * rho.diag1());
}

double phase_povm_defect(const PhiGrid& grid) {
  // Accumulate sum_k w |phi_k><phi_k| entrywise and compare with identity.
  const double w = grid.weight();
  double diag = 0.0;
  Complex off(0.0, 0.0);
  for (int k = 0; k < grid.size(); ++k) {
    const Vec2c ph = phase_state(grid.node(k));
    diag += w * std::norm(ph[0]);
    off += w * ph[0] * std::conj(ph[1]);
  }
  return std::max(std::abs(diag - 1.0), std::abs(off));
}

BlochVector bloch_from_spec(const CoherenceSpec& spec) {
  const HMatrix2 gamma = gamma_from_spec(spec);
  return {2.0 * gamma.off().real(), -2.0 * gamma.off().imag(), gamma.diag0() - gamma.diag1()};
}

CoherenceSpec spec_from_bloch(const BlochVector& s) {
  const HMatrix2 rho = rho_from_bloch(s);
  if (rho.diag0() <= 0.0 || rho.diag1() <= 0.0)
    throw UndefinedCoherence("spec_from_bloch: |s_z| = 1 leaves the degree of coherence undefined");
  const Coherence c = degree_of_coherence(rho);
  return CoherenceSpec(rho.diag0(), c.mu_abs, c.delta);
}

} // namespace younglab
