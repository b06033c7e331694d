#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "younglab/inversion.hpp"

using namespace younglab;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

CoherenceSpec random_spec(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return CoherenceSpec(0.05 + 0.9 * u(gen), u(gen), kTwoPi * u(gen));
}

// Valid polarizer angle away from the kernel singularities.
double random_vartheta(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.02, kPi / 2.0 - 0.02);
  double v = u(gen);
  while (std::abs(v - kPi / 4.0) < 0.02) v = u(gen);
  return v;
}

JointDistribution observe(const CoherenceSpec& spec, double vartheta, const PhiGrid& grid) {
  return marked_joint_intensity(
      marked_state(gamma_from_spec(spec), 2.0 * vartheta - kPi / 2.0), vartheta, grid);
}

JointDistribution reconstruct(const CoherenceSpec& spec, double vartheta, const PhiGrid& grid) {
  return invert_joint(path_kernel(vartheta), phase_kernel(vartheta),
                      observe(spec, vartheta, grid));
}

} // namespace

TEST_CASE("path kernel values and singularity guard") {
  const DiscreteKernel k = path_kernel(kPi / 3.0);
  CHECK(k.entries[0][0] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(k.entries[0][1] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(k.entries[1][0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(k.entries[1][1] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK_THROWS_AS(path_kernel(kPi / 4.0), SingularKernel);
}

TEST_CASE("path kernel inverts the response matrix") {
  std::mt19937_64 gen(67);
  for (int t = 0; t < 50; ++t) {
    const double vartheta = random_vartheta(gen);
    const DiscreteKernel m = path_kernel(vartheta);
    const DiscreteKernel r = path_response(vartheta);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        double acc = 0.0;
        for (int l = 0; l < 2; ++l) acc += m.entries[i][l] * r.entries[l][j];
        CHECK(acc == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
      }
      CHECK(m.entries[i][0] + m.entries[i][1] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("phase kernel values and singularity guard") {
  const AngularKernel k = phase_kernel(kPi / 3.0);
  CHECK(k(1.3, 1.3) == doctest::Approx(0.5267075400397567).epsilon(1e-12));
  CHECK(k.constant == doctest::Approx(1.0 / kTwoPi).epsilon(1e-14));

  const AngularKernel balanced = phase_kernel(kPi / 4.0);
  CHECK(balanced.cosine_amplitude == doctest::Approx(1.0 / kPi).epsilon(1e-14));

  CHECK_THROWS_AS(phase_kernel(1e-9), SingularKernel);
  CHECK_THROWS_AS(phase_kernel(kPi / 2.0), SingularKernel);
}

TEST_CASE("invert_path_marginal") {
  const auto [i1, im1] = invert_path_marginal(path_kernel(kPi / 3.0), {0.65, 0.35});
  CHECK(i1 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(im1 == doctest::Approx(0.2).epsilon(1e-12));

  std::mt19937_64 gen(71);
  for (int t = 0; t < 50; ++t) {
    const double vartheta = random_vartheta(gen);
    // balanced input is a fixed point for every valid angle
    const auto [a, b] = invert_path_marginal(path_kernel(vartheta), {0.5, 0.5});
    CHECK(a == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b == doctest::Approx(0.5).epsilon(1e-12));

    // kernel undoes the response on random distributions
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x = u(gen);
    const auto obs = path_response(vartheta).apply({x, 1.0 - x});
    const auto [rx, rm] = invert_path_marginal(path_kernel(vartheta), obs);
    CHECK(rx == doctest::Approx(x).epsilon(1e-12));
    CHECK(rm == doctest::Approx(1.0 - x).epsilon(1e-12));
  }

  CHECK_THROWS_AS(invert_path_marginal(path_kernel(kPi / 3.0), {0.6, 0.6}), InvalidArgument);
}

TEST_CASE("invert_phase_marginal") {
  const PhiGrid grid(64);

  SUBCASE("uniform stays uniform") {
    const AngularDistribution uniform(grid,
                                      std::vector<double>(grid.size(), 1.0 / kTwoPi));
    const AngularDistribution out = invert_phase_marginal(phase_kernel(kPi / 3.0), uniform);
    for (double v : out.values) CHECK(v == doctest::Approx(1.0 / kTwoPi).epsilon(1e-12));
  }

  SUBCASE("restores the damped fringe") {
    const CoherenceSpec spec(0.5, 1.0, 0.0);
    const double vartheta = kPi / 3.0;
    const AngularDistribution damped = phase_marginal(observe(spec, vartheta, grid));
    const AngularDistribution restored = invert_phase_marginal(phase_kernel(vartheta), damped);
    const AngularDistribution exact = interference_pattern(gamma_from_spec(spec), grid);
    for (int k = 0; k < grid.size(); ++k)
      CHECK(restored.values[k] == doctest::Approx(exact.values[k]).epsilon(1e-12));
  }

  SUBCASE("mass is preserved") {
    std::mt19937_64 gen(73);
    for (int t = 0; t < 20; ++t) {
      const AngularDistribution obs =
          phase_marginal(observe(random_spec(gen), random_vartheta(gen), grid));
      const AngularDistribution out =
          invert_phase_marginal(phase_kernel(random_vartheta(gen)), obs);
      CHECK(std::abs(out.mass() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("invert_joint frozen negativity values") {
  const PhiGrid grid(256);

  const JointDistribution classical = reconstruct(CoherenceSpec(0.8, 1.0, 0.0), kPi / 3.0, grid);
  CHECK(classical.label == OutcomeLabel::path);
  CHECK(eval_row_harmonic(classical, -1, kPi) ==
        doctest::Approx(-0.03183098861837907).epsilon(1e-12));

  const JointDistribution quantum = invert_joint(
      path_kernel(kPi / 3.0), phase_kernel(kPi / 3.0),
      marked_joint_probability(rho_from_bloch({0.8, 0.0, 0.6}), kPi / 3.0, grid));
  CHECK(eval_row_harmonic(quantum, -1, kPi) ==
        doctest::Approx(-0.03183098861837907).epsilon(1e-12));

  const JointDistribution incoherent = reconstruct(CoherenceSpec(0.8, 0.0, 0.0), kPi / 3.0, grid);
  for (double v : incoherent.row_plus) CHECK(v == doctest::Approx(0.8 / kTwoPi).epsilon(1e-12));
  for (double v : incoherent.row_minus) CHECK(v == doctest::Approx(0.2 / kTwoPi).epsilon(1e-12));
  CHECK(incoherent.min_cell() >= 0.0);
}

TEST_CASE("invert_joint equals the closed-form reconstruction") {
  std::mt19937_64 gen(79);
  for (int n : {3, 8, 64}) {
    const PhiGrid grid(n);
    for (int t = 0; t < 15; ++t) {
      const CoherenceSpec spec = random_spec(gen);
      const double vartheta = random_vartheta(gen);
      const JointDistribution rec = reconstruct(spec, vartheta, grid);
      const JointDistribution oracle = reconstructed_joint_closed_form(spec, grid);
      for (int k = 0; k < grid.size(); ++k) {
        CHECK(rec.row_plus[k] == doctest::Approx(oracle.row_plus[k]).epsilon(1e-10));
        CHECK(rec.row_minus[k] == doctest::Approx(oracle.row_minus[k]).epsilon(1e-10));
      }
      CHECK(std::abs(rec.mass() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("joint inversion marginals equal the separately inverted marginals") {
  const PhiGrid grid(32);
  std::mt19937_64 gen(83);
  for (int t = 0; t < 20; ++t) {
    const CoherenceSpec spec = random_spec(gen);
    const double vartheta = random_vartheta(gen);
    const JointDistribution obs = observe(spec, vartheta, grid);
    const JointDistribution rec =
        invert_joint(path_kernel(vartheta), phase_kernel(vartheta), obs);

    const auto [op, om] = polarization_marginal(obs);
    const auto [ip, im] = invert_path_marginal(path_kernel(vartheta), {op, om});
    const double w = grid.weight();
    double rp = 0.0, rm = 0.0;
    for (double v : rec.row_plus) rp += v * w;
    for (double v : rec.row_minus) rm += v * w;
    CHECK(rp == doctest::Approx(ip).epsilon(1e-12));
    CHECK(rm == doctest::Approx(im).epsilon(1e-12));

    const AngularDistribution iphi =
        invert_phase_marginal(phase_kernel(vartheta), phase_marginal(obs));
    for (int k = 0; k < grid.size(); ++k)
      CHECK(rec.row_plus[k] + rec.row_minus[k] == doctest::Approx(iphi.values[k]).epsilon(1e-12));
  }
}

TEST_CASE("reconstruction is independent of vartheta") {
  const PhiGrid grid(64);
  std::mt19937_64 gen(89);
  for (int t = 0; t < 10; ++t) {
    const CoherenceSpec spec = random_spec(gen);
    const JointDistribution a = reconstruct(spec, kPi / 6.0, grid);
    const JointDistribution b = reconstruct(spec, kPi / 3.0, grid);
    for (int k = 0; k < grid.size(); ++k) {
      CHECK(a.row_plus[k] == doctest::Approx(b.row_plus[k]).epsilon(1e-10));
      CHECK(a.row_minus[k] == doctest::Approx(b.row_minus[k]).epsilon(1e-10));
    }
  }
}

TEST_CASE("closed-form reconstruction values and marginals") {
  const PhiGrid grid(64);
  const JointDistribution j = reconstructed_joint_closed_form(CoherenceSpec(0.8, 1.0, 0.0), grid);
  CHECK(eval_row_harmonic(j, 1, 0.0) == doctest::Approx(0.1909859317102744).epsilon(1e-12));

  const JointDistribution flat =
      reconstructed_joint_closed_form(BlochVector{0.0, 0.0, 0.0}, grid);
  for (double v : flat.row_plus)
    CHECK(v == doctest::Approx(1.0 / (2.0 * kTwoPi)).epsilon(1e-13));

  std::mt19937_64 gen(97);
  for (int t = 0; t < 20; ++t) {
    const CoherenceSpec spec = random_spec(gen);
    const JointDistribution rec = reconstructed_joint_closed_form(spec, grid);
    const double w = grid.weight();
    double rp = 0.0, rm = 0.0;
    for (double v : rec.row_plus) rp += v * w;
    for (double v : rec.row_minus) rm += v * w;
    CHECK(rp == doctest::Approx(spec.i1).epsilon(1e-12));
    CHECK(rm == doctest::Approx(spec.i_m1).epsilon(1e-12));

    const AngularDistribution pattern = interference_pattern(gamma_from_spec(spec), grid);
    for (int k = 0; k < grid.size(); ++k)
      CHECK(rec.row_plus[k] + rec.row_minus[k] ==
            doctest::Approx(pattern.values[k]).epsilon(1e-12));
  }
}

TEST_CASE("classical and quantum reconstructions coincide for mapped states") {
  const PhiGrid grid(64);
  std::mt19937_64 gen(101);
  for (int t = 0; t < 20; ++t) {
    const CoherenceSpec spec = random_spec(gen);
    const JointDistribution c = reconstructed_joint_closed_form(spec, grid);
    const JointDistribution q = reconstructed_joint_closed_form(bloch_from_spec(spec), grid);
    for (int k = 0; k < grid.size(); ++k) {
      CHECK(c.row_plus[k] == doctest::Approx(q.row_plus[k]).epsilon(1e-12));
      CHECK(c.row_minus[k] == doctest::Approx(q.row_minus[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("pathology report on the frozen example") {
  const PhiGrid grid(256);
  const PathologyReport rep =
      pathology_report(reconstruct(CoherenceSpec(0.8, 1.0, 0.0), kPi / 3.0, grid));
  CHECK(rep.min_value == doctest::Approx(-0.03183098861837907).epsilon(1e-10));
  CHECK(rep.argmin_outcome == -1);
  CHECK(rep.argmin_phi == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(rep.threshold_mu2 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rep.threshold_defined);
  CHECK(rep.is_pathological);
  CHECK(rep.negative_mass > 0.0);
  // the grid minimum sits at the node nearest pi and is slightly shallower
  CHECK(rep.grid_min_value >= rep.min_value);
  CHECK(std::abs(rep.grid_argmin_phi - kPi) < grid.weight());
}

TEST_CASE("pathology report edge cases") {
  const PhiGrid grid(64);

  const PathologyReport incoherent =
      pathology_report(reconstruct(CoherenceSpec(0.8, 0.0, 0.0), kPi / 3.0, grid));
  CHECK(incoherent.min_value == doctest::Approx(0.2 / kTwoPi).epsilon(1e-12));
  CHECK_FALSE(incoherent.is_pathological);
  CHECK(incoherent.negative_mass == 0.0);

  // |mu|^2 exactly at the threshold: minimum 0, strict criterion says no
  const PathologyReport boundary =
      pathology_report(reconstruct(CoherenceSpec(0.8, 0.5, 0.0), kPi / 3.0, grid));
  CHECK(std::abs(boundary.min_value) < 1e-10);
  CHECK_FALSE(boundary.is_pathological);

  // pure path state: degenerate threshold, no negativity
  const PathologyReport degenerate =
      pathology_report(reconstructed_joint_closed_form(BlochVector{0.0, 0.0, 1.0}, grid));
  CHECK_FALSE(degenerate.threshold_defined);
  CHECK(degenerate.threshold_mu2 == 0.0);
  CHECK_FALSE(degenerate.is_pathological);
}

TEST_CASE("negativity onset agrees with the threshold law") {
  const PhiGrid grid(32);
  std::mt19937_64 gen(103);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 60; ++t) {
    const CoherenceSpec spec(0.05 + 0.9 * u(gen), u(gen), kTwoPi * u(gen));
    const double threshold = pathology_threshold({spec.i1, spec.i_m1});
    const double margin = spec.mu_abs * spec.mu_abs - threshold;
    if (std::abs(margin) < 1e-8) continue; // razor-edge draws prove nothing
    const PathologyReport rep = pathology_report(reconstruct(spec, kPi / 3.0, grid));
    CHECK(rep.is_pathological == (margin > 0.0));
    CHECK(rep.threshold_mu2 == doctest::Approx(threshold).epsilon(1e-12));
  }
}

TEST_CASE("pathology_threshold") {
  CHECK(pathology_threshold({0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(pathology_threshold({0.8, 0.2}) == doctest::Approx(0.25).epsilon(1e-12));
  const auto pz = path_probabilities(rho_from_bloch({0.0, 0.0, 0.6}));
  CHECK(pathology_threshold(pz) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(pathology_threshold({1.0, 0.0}), UndefinedCoherence);
}

TEST_CASE("generic_invert: identity kernels reproduce a first-harmonic input") {
  const PhiGrid grid(32);
  const DiscreteKernel identity{{{{1.0, 0.0}, {0.0, 1.0}}}};
  const AngularKernel harmonic_identity{1.0 / kTwoPi, 1.0 / kPi};
  const JointDistribution in = observe(CoherenceSpec(0.7, 0.8, 0.4), 0.9, grid);
  const JointDistribution out = generic_invert(identity, harmonic_identity, in);
  for (int k = 0; k < grid.size(); ++k) {
    CHECK(out.row_plus[k] == doctest::Approx(in.row_plus[k]).epsilon(1e-12));
    CHECK(out.row_minus[k] == doctest::Approx(in.row_minus[k]).epsilon(1e-12));
  }
}

TEST_CASE("generic_invert specializes to invert_joint") {
  const PhiGrid grid(48);
  std::mt19937_64 gen(107);
  for (int t = 0; t < 10; ++t) {
    const CoherenceSpec spec = random_spec(gen);
    const double vartheta = random_vartheta(gen);
    const JointDistribution obs = observe(spec, vartheta, grid);
    // dense double-quadrature route vs the moment route
    const JointDistribution dense =
        generic_invert(path_kernel(vartheta), phase_kernel(vartheta), obs);
    const JointDistribution fast = invert_joint(path_kernel(vartheta), phase_kernel(vartheta), obs);
    for (int k = 0; k < grid.size(); ++k) {
      CHECK(dense.row_plus[k] == doctest::Approx(fast.row_plus[k]).epsilon(1e-12));
      CHECK(dense.row_minus[k] == doctest::Approx(fast.row_minus[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("generic_invert on two binary observables") {
  const DiscreteKernel ma = path_kernel(1.1);
  const DiscreteKernel mb = path_kernel(0.6);
  const DiscreteKernel ra = path_response(1.1);
  const DiscreteKernel rb = path_response(0.6);

  // blur a table on both axes, then invert both axes
  const JointTable22 w{{{0.4, 0.1}, {0.2, 0.3}}};
  JointTable22 blurred{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double acc = 0.0;
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp)
          acc += ra.entries[a][ap] * rb.entries[b][bp] * w[ap][bp];
      blurred[a][b] = acc;
    }
  const JointTable22 back = generic_invert(ma, mb, blurred);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(back[a][b] == doctest::Approx(w[a][b]).epsilon(1e-12));
}

TEST_CASE("generic_invert is bilinear on factorized tables") {
  const DiscreteKernel ma = path_kernel(1.1);
  const DiscreteKernel mb = path_kernel(0.6);
  const std::pair<double, double> wa{0.7, 0.3};
  const std::pair<double, double> wb{0.45, 0.55};
  const JointTable22 w{{{wa.first * wb.first, wa.first * wb.second},
                        {wa.second * wb.first, wa.second * wb.second}}};
  const JointTable22 out = generic_invert(ma, mb, w);
  const auto ia = ma.apply(wa);
  const auto ib = mb.apply(wb);
  CHECK(out[0][0] == doctest::Approx(ia.first * ib.first).epsilon(1e-12));
  CHECK(out[0][1] == doctest::Approx(ia.first * ib.second).epsilon(1e-12));
  CHECK(out[1][0] == doctest::Approx(ia.second * ib.first).epsilon(1e-12));
  CHECK(out[1][1] == doctest::Approx(ia.second * ib.second).epsilon(1e-12));
}
