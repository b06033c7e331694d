#pragma once

#include <utility>

#include "younglab/distribution.hpp"
#include "younglab/hermitian.hpp"

namespace younglab {

/// Second-order description of the field at the two apertures: normalized
/// intensities i1 + i_m1 = 1, degree of coherence mu_abs in [0,1] with
/// phase delta in [0, 2pi).
struct CoherenceSpec {
  double i1;
  double i_m1;
  double mu_abs;
  double delta;

  /// i_m1 is fixed to 1 - i1 by the normalization convention. delta is
  /// wrapped into [0, 2pi).
  CoherenceSpec(double i1, double mu_abs, double delta);
};

/// Marking geometry: wave-plate rotation theta at aperture z = +1 and
/// polarizer basis angle vartheta. When enforce_optimal is set the pair
/// must satisfy 2*vartheta - theta = pi/2 (the setting under which the
/// inversion kernels are exact). vartheta may not sit within 1e-6 of
/// 0, pi/4 or pi/2 where one of the kernels becomes singular.
struct MarkingConfig {
  double theta;
  double vartheta;
  bool enforce_optimal;

  MarkingConfig(double theta, double vartheta, bool enforce_optimal);

  /// The optimal pairing for a given polarizer angle: theta = 2*vartheta - pi/2.
  static MarkingConfig optimal(double vartheta);
};

/// Cross-spectral density matrix from its parametrization: diagonal
/// (i1, i_m1), off-diagonal mu * sqrt(i1 * i_m1). PSD by construction
/// for mu_abs <= 1.
HMatrix2 gamma_from_spec(const CoherenceSpec& spec);

/// Diagonal readout (I_Z(+1), I_Z(-1)) of a unit-trace gamma.
std::pair<double, double> aperture_intensities(const HMatrix2& gamma);

struct Coherence {
  double mu_abs;
  double delta;
};

/// |mu| = |gamma_01| / sqrt(gamma_00 * gamma_11) and its phase. Throws
/// UndefinedCoherence when a diagonal intensity vanishes; delta is 0 by
/// convention when the off-diagonal vanishes.
Coherence degree_of_coherence(const HMatrix2& gamma);

/// Phase state (1, e^{i phi}) / sqrt(2 pi).
Vec2c phase_state(double phi);

/// Polarizer analyzer state for outcome p = +/-1 at basis angle vartheta.
Vec2c polarizer_state(double vartheta, int p);

/// Far-field interference pattern I_Phi(phi) = <phi|gamma|phi> sampled on
/// the grid; quadrature mass 1 for unit-trace gamma.
AngularDistribution interference_pattern(const HMatrix2& gamma, const PhiGrid& grid);

/// 4x4 cross-spectral density of the polarization-marked field:
/// sum_ij gamma_ij |i><j| (x) |u_i><u_j| with u_{+1} rotated by theta and
/// u_{-1} left horizontal. Trace and positivity of gamma are preserved.
HMatrix4 marked_state(const HMatrix2& gamma, double theta);

/// Observed joint intensity Itilde(p, phi) = <p|<phi| gtilde |phi>|p>,
/// computed by the general 4-dimensional sandwich (valid for any
/// (theta, vartheta) pairing, optimal or not). Rows are polarizer-labeled.
JointDistribution marked_joint_intensity(const HMatrix4& gtilde, double vartheta,
                                         const PhiGrid& grid);

/// Quadrature row sums (Itilde_P(+1), Itilde_P(-1)) of a polarizer-labeled joint.
std::pair<double, double> polarization_marginal(const JointDistribution& joint);

/// Node-wise row sum Itilde_Phi(phi); fringe visibility is damped relative
/// to the unmarked pattern by the polarization overlap of the two apertures.
AngularDistribution phase_marginal(const JointDistribution& joint);

} // namespace younglab
