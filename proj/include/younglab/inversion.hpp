#pragma once

#include <array>
#include <utility>

#include "younglab/classical.hpp"
#include "younglab/distribution.hpp"
#include "younglab/quantum.hpp"

namespace younglab {

/// 2x2 inversion kernel over a binary outcome. Rows sum to 1, so applying
/// it preserves total mass.
struct DiscreteKernel {
  std::array<std::array<double, 2>, 2> entries;

  /// Kernel application: out(a) = sum_a' entries[a][a'] in(a').
  std::pair<double, double> apply(std::pair<double, double> in) const;
};

/// Angular inversion kernel M(phi, phi') = constant + cosine_amplitude *
/// cos(phi - phi'). Stored by its two Fourier coefficients, which is the
/// exact content of the kernel and makes its quadrature application exact
/// for first-harmonic integrands on any midpoint grid with n >= 3.
struct AngularKernel {
  double constant;         ///< 1/(2pi) for every kernel produced here
  double cosine_amplitude; ///< coefficient of cos(phi - phi')

  double operator()(double phi, double phi_prime) const;
};

/// Response matrix of the polarization readout: maps (I_Z(+1), I_Z(-1)) to
/// the observed (Itilde_P(+1), Itilde_P(-1)).
DiscreteKernel path_response(double vartheta);

/// Exact inverse of path_response: M_Z = (1/cos 2vartheta) [[-sin^2, cos^2],
/// [cos^2, -sin^2]]. Throws SingularKernel when |cos 2vartheta| <= 1e-6.
DiscreteKernel path_kernel(double vartheta);

/// Phase inversion kernel M_Phi(phi, phi') = (1/2pi)(1 + (2/sin 2vartheta)
/// cos(phi - phi')). Throws SingularKernel when |sin 2vartheta| <= 1e-6.
AngularKernel phase_kernel(double vartheta);

/// Recover the sharp binary marginal from the observed one. The observed
/// pair must sum to 1 (within 1e-9); the output sums to 1 as well though
/// its entries may leave [0,1] for inconsistent noisy input.
std::pair<double, double> invert_path_marginal(const DiscreteKernel& kernel,
                                               std::pair<double, double> observed);

/// Recover the sharp angular marginal: quadrature of the kernel against the
/// observed distribution. Exact for first-harmonic distributions on n >= 3.
AngularDistribution invert_phase_marginal(const AngularKernel& kernel,
                                          const AngularDistribution& observed);

/// Joint inversion W(a, phi) = sum_a' integral dphi' M_Z(a,a') M_Phi(phi,phi')
/// Wtilde(a', phi'), evaluated through the angular kernel's Fourier
/// coefficients. Marginals of the output equal the separately inverted
/// marginals; total mass is preserved. Output rows are path-labeled.
JointDistribution invert_joint(const DiscreteKernel& kz, const AngularKernel& kphi,
                               const JointDistribution& joint);

/// Closed-form reconstructed joint for a classical field:
/// I(z, phi) = (1/2pi) [I_Z(z) + |mu| sqrt(I_Z(1) I_Z(-1)) cos(phi + delta)].
/// Serves as the oracle for invert_joint.
JointDistribution reconstructed_joint_closed_form(const CoherenceSpec& spec, const PhiGrid& grid);

/// Closed-form reconstructed joint for a photon state:
/// P(z, phi) = (1/4pi) [1 + cos(phi) s_x + sin(phi) s_y + z s_z].
JointDistribution reconstructed_joint_closed_form(const BlochVector& s, const PhiGrid& grid);

/// First-harmonic content of a sampled row: value(phi) = mean + cos_coef *
/// cos(phi) + sin_coef * sin(phi). Extraction by discrete quadrature is
/// exact for rows of that form when n >= 3 — which every kernel-inverted
/// row is, since the angular kernel projects onto {1, cos, sin}.
struct FirstHarmonic {
  double mean = 0.0;
  double cos_coef = 0.0;
  double sin_coef = 0.0;

  double amplitude() const;
  double eval(double phi) const;
  double min_value() const;
  /// Angle in [0, 2pi) where the minimum is attained.
  double argmin() const;
};

FirstHarmonic first_harmonic(const PhiGrid& grid, const std::vector<double>& values);

/// Evaluate a first-harmonic joint row anywhere, not just at grid nodes.
double eval_row_harmonic(const JointDistribution& joint, int outcome, double phi);

/// Negativity diagnostics of a reconstructed joint. min_value is the
/// continuum minimum obtained from the rows' first-harmonic form, so a
/// coarse grid cannot hide negativity; the raw grid scan is carried
/// alongside. negative_mass is an artifact-defined severity measure, the
/// quadrature mass of the negative part over the grid.
struct PathologyReport {
  double min_value = 0.0;       ///< continuum minimum over both rows
  int argmin_outcome = 1;       ///< row (+1/-1) attaining the minimum
  double argmin_phi = 0.0;      ///< continuum angle of the minimum
  double grid_min_value = 0.0;  ///< smallest grid cell value
  int grid_argmin_outcome = 1;
  double grid_argmin_phi = 0.0;
  double negative_mass = 0.0;
  double threshold_mu2 = 0.0;   ///< min intensity ratio; 0 when degenerate
  bool threshold_defined = false;
  bool is_pathological = false; ///< min_value < -tol (strict criterion)
};

PathologyReport pathology_report(const JointDistribution& joint, double tol = 1e-10);

/// Negativity threshold for |mu|^2: min{I_Z(1)/I_Z(-1), I_Z(-1)/I_Z(1)}.
/// Throws UndefinedCoherence when an intensity vanishes.
double pathology_threshold(std::pair<double, double> pz);

/// Generic joint inversion of Appendix-style form for two binary
/// observables: W(a,b) = sum_{a',b'} M_A(a,a') M_B(b,b') Wtilde(a',b').
using JointTable22 = std::array<std::array<double, 2>, 2>;
JointTable22 generic_invert(const DiscreteKernel& ma, const DiscreteKernel& mb,
                            const JointTable22& wtilde);

/// Generic binary x angular joint inversion by dense double quadrature,
/// evaluating the angular kernel pointwise. invert_joint is the
/// Fourier-coefficient specialization of this contraction; the two routes
/// agree to rounding and cross-check each other.
JointDistribution generic_invert(const DiscreteKernel& ma, const AngularKernel& mb,
                                 const JointDistribution& wtilde);

} // namespace younglab
