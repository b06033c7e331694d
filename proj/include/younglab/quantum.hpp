#pragma once

#include <utility>

#include "younglab/classical.hpp"
#include "younglab/distribution.hpp"
#include "younglab/hermitian.hpp"

namespace younglab {

/// Bloch parametrization of a single-photon (qubit) state, |s| <= 1.
struct BlochVector {
  double sx;
  double sy;
  double sz;

  double norm() const;
};

/// rho = (identity + s . sigma) / 2; rejects |s| > 1 (beyond 1e-12 slack).
HMatrix2 rho_from_bloch(const BlochVector& s);

/// s = tr(rho sigma); inverse of rho_from_bloch. rho must be a valid
/// density matrix (unit trace, PSD within 1e-10).
BlochVector bloch_from_rho(const HMatrix2& rho);

/// (P_Z(+1), P_Z(-1)) = ((1 + s_z)/2, (1 - s_z)/2).
std::pair<double, double> path_probabilities(const HMatrix2& rho);

/// Phase POVM statistics P_Phi(phi) = <phi|rho|phi>; nonnegative, mass 1.
AngularDistribution phase_distribution(const HMatrix2& rho, const PhiGrid& grid);

/// Observed joint probability of the marked measurement,
/// Ptilde(p, phi) = (1/4pi) [1 + sin(2 vartheta)(cos(phi) s_x + sin(phi) s_y)
///                             - p cos(2 vartheta) s_z].
/// Nonnegative for every valid state and angle; rows are polarizer-labeled.
JointDistribution marked_joint_probability(const HMatrix2& rho, double vartheta,
                                           const PhiGrid& grid);

/// |mu|^2 = |rho_01|^2 / (rho_00 rho_11) = (s_x^2 + s_y^2) / (1 - s_z^2);
/// throws UndefinedCoherence for pure path states (s_z = +/-1).
double coherence_of_state(const HMatrix2& rho);

/// Max entrywise deviation of sum_k weight |phi_k><phi_k| from the identity.
/// Zero (to rounding) for every grid with n >= 3; run at scenario setup to
/// certify the grid/weight pairing.
double phase_povm_defect(const PhiGrid& grid);

/// Bloch vector of the state whose density matrix equals gamma_from_spec(spec).
BlochVector bloch_from_spec(const CoherenceSpec& spec);

/// CoherenceSpec of the classical field whose gamma equals rho_from_bloch(s);
/// requires |s_z| < 1 so the coherence is defined.
CoherenceSpec spec_from_bloch(const BlochVector& s);

} // namespace younglab
