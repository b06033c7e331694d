#pragma once

#include <vector>

#include "younglab/errors.hpp"

namespace younglab {

/// Uniform midpoint grid over [0, 2pi): nodes phi_k = (k + 1/2) * 2pi/n with
/// quadrature weight 2pi/n. Midpoint quadrature on this grid integrates
/// first-harmonic trigonometric polynomials exactly for n >= 3, which keeps
/// grid error out of every distribution this library produces.
class PhiGrid {
public:
  explicit PhiGrid(int n);

  int size() const { return n_; }
  double weight() const;
  double node(int k) const;
  std::vector<double> nodes() const;

  bool operator==(const PhiGrid&) const = default;

private:
  int n_;
};

/// Real-valued function of phi sampled on a PhiGrid.
struct AngularDistribution {
  PhiGrid grid;
  std::vector<double> values;

  AngularDistribution(PhiGrid g, std::vector<double> v);

  /// Quadrature mass: sum of values times the grid weight.
  double mass() const;
};

/// Which binary observable labels the rows of a JointDistribution.
enum class OutcomeLabel {
  path,      ///< aperture index z = +/-1 (exact or reconstructed joints)
  polarizer, ///< polarizer outcome p = +/-1 (observed joints)
};

/// Real 2 x N table over (binary outcome, phi node): the observed joint,
/// its empirical estimate, and the kernel-reconstructed joint all use this
/// shape. row_plus holds outcome +1, row_minus outcome -1.
struct JointDistribution {
  PhiGrid grid;
  std::vector<double> row_plus;
  std::vector<double> row_minus;
  OutcomeLabel label;

  JointDistribution(PhiGrid g, std::vector<double> plus, std::vector<double> minus,
                    OutcomeLabel lab);

  const std::vector<double>& row(int outcome) const;

  /// Quadrature mass of both rows.
  double mass() const;

  /// Smallest cell value over both rows.
  double min_cell() const;
};

} // namespace younglab
