#include "younglab/inversion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace younglab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingularTrig = 1e-6;
constexpr double kMassSlack = 1e-9;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

void check_unit_mass(double mass, const char* what) {
  if (std::abs(mass - 1.0) > kMassSlack) {
    std::ostringstream os;
    os << what << ": input must have total mass 1 (got " << mass << ")";
    throw InvalidArgument(os.str());
  }
}

} // namespace

std::pair<double, double> DiscreteKernel::apply(std::pair<double, double> in) const {
  return {entries[0][0] * in.first + entries[0][1] * in.second,
          entries[1][0] * in.first + entries[1][1] * in.second};
}

double AngularKernel::operator()(double phi, double phi_prime) const {
  return constant + cosine_amplitude * std::cos(phi - phi_prime);
}

DiscreteKernel path_response(double vartheta) {
  const double s2 = std::sin(vartheta) * std::sin(vartheta);
  const double c2 = std::cos(vartheta) * std::cos(vartheta);
  return {{{{s2, c2}, {c2, s2}}}};
}

DiscreteKernel path_kernel(double vartheta) {
  const double cos2t = std::cos(2.0 * vartheta);
  if (std::abs(cos2t) <= kSingularTrig)
    throw SingularKernel("path_kernel: |cos(2*vartheta)| <= 1e-6, response not invertible");
  const double s2 = std::sin(vartheta) * std::sin(vartheta);
  const double c2 = std::cos(vartheta) * std::cos(vartheta);
  return {{{{-s2 / cos2t, c2 / cos2t}, {c2 / cos2t, -s2 / cos2t}}}};
}

AngularKernel phase_kernel(double vartheta) {
  const double sin2t = std::sin(2.0 * vartheta);
  if (std::abs(sin2t) <= kSingularTrig)
    throw SingularKernel("phase_kernel: |sin(2*vartheta)| <= 1e-6, response not invertible");
  return {1.0 / kTwoPi, 1.0 / (kPi * sin2t)};
}

std::pair<double, double> invert_path_marginal(const DiscreteKernel& kernel,
                                               std::pair<double, double> observed) {
  check_unit_mass(observed.first + observed.second, "invert_path_marginal");
  return kernel.apply(observed);
}

namespace {

// Quadrature moments (mass, cos moment, sin moment) of a sampled row.
struct RowMoments {
  double m0 = 0.0;
  double mc = 0.0;
  double ms = 0.0;
};

RowMoments row_moments(const PhiGrid& grid, const std::vector<double>& values) {
  RowMoments m;
  const double w = grid.weight();
  for (int k = 0; k < grid.size(); ++k) {
    const double phi = grid.node(k);
    m.m0 += w * values[k];
    m.mc += w * values[k] * std::cos(phi);
    m.ms += w * values[k] * std::sin(phi);
  }
  return m;
}

std::vector<double> apply_angular(const AngularKernel& kernel, const PhiGrid& grid,
                                  const RowMoments& m) {
  std::vector<double> out(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const double phi = grid.node(k);
    out[k] = kernel.constant * m.m0 +
             kernel.cosine_amplitude * (m.mc * std::cos(phi) + m.ms * std::sin(phi));
  }
  return out;
}

} // namespace

AngularDistribution invert_phase_marginal(const AngularKernel& kernel,
                                          const AngularDistribution& observed) {
  check_unit_mass(observed.mass(), "invert_phase_marginal");
  return AngularDistribution(observed.grid,
                             apply_angular(kernel, observed.grid, row_moments(observed.grid, observed.values)));
}

JointDistribution invert_joint(const DiscreteKernel& kz, const AngularKernel& kphi,
                               const JointDistribution& joint) {
  check_unit_mass(joint.mass(), "invert_joint");
  const RowMoments mp = row_moments(joint.grid, joint.row_plus);
  const RowMoments mm = row_moments(joint.grid, joint.row_minus);
  // Combine the binary kernel at the moment level; the angular kernel then
  // acts once per output row.
  RowMoments top, bottom;
  top.m0 = kz.entries[0][0] * mp.m0 + kz.entries[0][1] * mm.m0;
  top.mc = kz.entries[0][0] * mp.mc + kz.entries[0][1] * mm.mc;
  top.ms = kz.entries[0][0] * mp.ms + kz.entries[0][1] * mm.ms;
  bottom.m0 = kz.entries[1][0] * mp.m0 + kz.entries[1][1] * mm.m0;
  bottom.mc = kz.entries[1][0] * mp.mc + kz.entries[1][1] * mm.mc;
  bottom.ms = kz.entries[1][0] * mp.ms + kz.entries[1][1] * mm.ms;
  return JointDistribution(joint.grid, apply_angular(kphi, joint.grid, top),
                           apply_angular(kphi, joint.grid, bottom), OutcomeLabel::path);
}

JointDistribution reconstructed_joint_closed_form(const CoherenceSpec& spec, const PhiGrid& grid) {
  const double root = spec.mu_abs * std::sqrt(spec.i1 * spec.i_m1);
  std::vector<double> plus(grid.size()), minus(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const double fringe = root * std::cos(grid.node(k) + spec.delta);
    plus[k] = (spec.i1 + fringe) / kTwoPi;
    minus[k] = (spec.i_m1 + fringe) / kTwoPi;
  }
  return JointDistribution(grid, std::move(plus), std::move(minus), OutcomeLabel::path);
}

JointDistribution reconstructed_joint_closed_form(const BlochVector& s, const PhiGrid& grid) {
  if (s.norm() > 1.0 + 1e-12)
    throw InvalidArgument("reconstructed_joint_closed_form: Bloch vector must satisfy |s| <= 1");
  std::vector<double> plus(grid.size()), minus(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const double phi = grid.node(k);
    const double fringe = std::cos(phi) * s.sx + std::sin(phi) * s.sy;
    plus[k] = (1.0 + fringe + s.sz) / (2.0 * kTwoPi);
    minus[k] = (1.0 + fringe - s.sz) / (2.0 * kTwoPi);
  }
  return JointDistribution(grid, std::move(plus), std::move(minus), OutcomeLabel::path);
}

double FirstHarmonic::amplitude() const { return std::hypot(cos_coef, sin_coef); }

double FirstHarmonic::eval(double phi) const {
  return mean + cos_coef * std::cos(phi) + sin_coef * std::sin(phi);
}

double FirstHarmonic::min_value() const { return mean - amplitude(); }

double FirstHarmonic::argmin() const {
  if (amplitude() == 0.0) return 0.0;
  return wrap_angle(std::atan2(sin_coef, cos_coef) + kPi);
}

FirstHarmonic first_harmonic(const PhiGrid& grid, const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != grid.size())
    throw DimensionMismatch("first_harmonic: value count must match grid size");
  const RowMoments m = row_moments(grid, values);
  return {m.m0 / kTwoPi, m.mc / kPi, m.ms / kPi};
}

double eval_row_harmonic(const JointDistribution& joint, int outcome, double phi) {
  return first_harmonic(joint.grid, joint.row(outcome)).eval(phi);
}

PathologyReport pathology_report(const JointDistribution& joint, double tol) {
  if (tol < 0.0) throw InvalidArgument("pathology_report: tol must be >= 0");
  PathologyReport rep;

  const FirstHarmonic hp = first_harmonic(joint.grid, joint.row_plus);
  const FirstHarmonic hm = first_harmonic(joint.grid, joint.row_minus);
  if (hp.min_value() <= hm.min_value()) {
    rep.min_value = hp.min_value();
    rep.argmin_outcome = 1;
    rep.argmin_phi = hp.argmin();
  } else {
    rep.min_value = hm.min_value();
    rep.argmin_outcome = -1;
    rep.argmin_phi = hm.argmin();
  }

  rep.grid_min_value = joint.row_plus[0];
  rep.grid_argmin_outcome = 1;
  rep.grid_argmin_phi = joint.grid.node(0);
  const double w = joint.grid.weight();
  double neg = 0.0;
  for (int outcome : {1, -1}) {
    const std::vector<double>& row = joint.row(outcome);
    for (int k = 0; k < joint.grid.size(); ++k) {
      if (row[k] < rep.grid_min_value) {
        rep.grid_min_value = row[k];
        rep.grid_argmin_outcome = outcome;
        rep.grid_argmin_phi = joint.grid.node(k);
      }
      if (row[k] < 0.0) neg -= row[k] * w;
    }
  }
  rep.negative_mass = neg;

  const double pz_plus = hp.mean * kTwoPi;
  const double pz_minus = hm.mean * kTwoPi;
  if (pz_plus > 0.0 && pz_minus > 0.0) {
    rep.threshold_mu2 = pathology_threshold({pz_plus, pz_minus});
    rep.threshold_defined = true;
  } else {
    rep.threshold_mu2 = 0.0;
    rep.threshold_defined = false;
  }

  rep.is_pathological = rep.min_value < -tol;
  return rep;
}

double pathology_threshold(std::pair<double, double> pz) {
  if (pz.first <= 0.0 || pz.second <= 0.0)
    throw UndefinedCoherence("pathology_threshold: degenerate for vanishing intensities");
  return std::min(pz.first / pz.second, pz.second / pz.first);
}

JointTable22 generic_invert(const DiscreteKernel& ma, const DiscreteKernel& mb,
                            const JointTable22& wtilde) {
  JointTable22 out{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double acc = 0.0;
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp)
          acc += ma.entries[a][ap] * mb.entries[b][bp] * wtilde[ap][bp];
      out[a][b] = acc;
    }
  return out;
}

JointDistribution generic_invert(const DiscreteKernel& ma, const AngularKernel& mb,
                                 const JointDistribution& wtilde) {
  const PhiGrid& grid = wtilde.grid;
  const double w = grid.weight();
  const std::vector<double>* rows[2] = {&wtilde.row_plus, &wtilde.row_minus};
  std::vector<double> out_plus(grid.size()), out_minus(grid.size());
  std::vector<double>* out[2] = {&out_plus, &out_minus};
  for (int a = 0; a < 2; ++a) {
    for (int k = 0; k < grid.size(); ++k) {
      const double phi = grid.node(k);
      double acc = 0.0;
      for (int ap = 0; ap < 2; ++ap)
        for (int j = 0; j < grid.size(); ++j)
          acc += ma.entries[a][ap] * mb(phi, grid.node(j)) * (*rows[ap])[j] * w;
      (*out[a])[k] = acc;
    }
  }
  return JointDistribution(grid, std::move(out_plus), std::move(out_minus), OutcomeLabel::path);
}

} // namespace younglab
