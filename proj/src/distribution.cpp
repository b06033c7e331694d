#include "younglab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace younglab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + ": values must be finite");
}

// Compensated (Kahan) sum so reductions agree to ~1e-15 across orders.
double kahan_sum(const std::vector<double>& v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

} // namespace

PhiGrid::PhiGrid(int n) : n_(n) {
  if (n < 3) throw InvalidArgument("PhiGrid: node count must be >= 3");
}

double PhiGrid::weight() const { return kTwoPi / n_; }

double PhiGrid::node(int k) const {
  if (k < 0 || k >= n_) throw DimensionMismatch("PhiGrid::node: index out of range");
  return (k + 0.5) * kTwoPi / n_;
}

std::vector<double> PhiGrid::nodes() const {
  std::vector<double> out(n_);
  for (int k = 0; k < n_; ++k) out[k] = node(k);
  return out;
}

AngularDistribution::AngularDistribution(PhiGrid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.size())
    throw DimensionMismatch("AngularDistribution: value count must match grid size");
  check_finite(values, "AngularDistribution");
}

double AngularDistribution::mass() const { return kahan_sum(values) * grid.weight(); }

JointDistribution::JointDistribution(PhiGrid g, std::vector<double> plus,
                                     std::vector<double> minus, OutcomeLabel lab)
    : grid(g), row_plus(std::move(plus)), row_minus(std::move(minus)), label(lab) {
  if (static_cast<int>(row_plus.size()) != grid.size() ||
      static_cast<int>(row_minus.size()) != grid.size())
    throw DimensionMismatch("JointDistribution: row length must match grid size");
  check_finite(row_plus, "JointDistribution");
  check_finite(row_minus, "JointDistribution");
}

const std::vector<double>& JointDistribution::row(int outcome) const {
  if (outcome == 1) return row_plus;
  if (outcome == -1) return row_minus;
  throw InvalidArgument("JointDistribution::row: outcome must be +1 or -1");
}

double JointDistribution::mass() const {
  return (kahan_sum(row_plus) + kahan_sum(row_minus)) * grid.weight();
}

double JointDistribution::min_cell() const {
  const double a = *std::min_element(row_plus.begin(), row_plus.end());
  const double b = *std::min_element(row_minus.begin(), row_minus.end());
  return std::min(a, b);
}

} // namespace younglab
