#include <cmath>
#include <random>

#include "doctest.h"
#include "younglab/hermitian.hpp"

using namespace younglab;

namespace {

HMatrix2 random_psd(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  // L L^dagger with a random lower factor is PSD by construction.
  Lower2 L{std::abs(u(gen)) + 0.05, Complex(u(gen), u(gen)), std::abs(u(gen))};
  return L.gram();
}

} // namespace

TEST_CASE("kron identity and diagonal cases") {
  const HMatrix2 eye(1.0, 1.0, Complex(0.0, 0.0));
  const HMatrix4 i4 = kron(eye, eye);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(i4.entry(r, c) == Complex(r == c ? 1.0 : 0.0, 0.0));

  const HMatrix2 proj(1.0, 0.0, Complex(0.0, 0.0));
  const HMatrix2 diag(0.7, 0.3, Complex(0.0, 0.0));
  const HMatrix4 d = kron(proj, diag);
  CHECK(d.entry(0, 0) == Complex(0.7, 0.0));
  CHECK(d.entry(1, 1) == Complex(0.3, 0.0));
  CHECK(d.entry(2, 2) == Complex(0.0, 0.0));
  CHECK(d.entry(3, 3) == Complex(0.0, 0.0));
}

TEST_CASE("kron of sigma_x and sigma_z has the block structure") {
  const HMatrix2 sx(0.0, 0.0, Complex(1.0, 0.0));
  const HMatrix2 sz(1.0, -1.0, Complex(0.0, 0.0));
  const HMatrix4 k = kron(sx, sz);
  // [[0, sz], [sz, 0]]
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      CHECK(k.entry(r, c) == Complex(0.0, 0.0));
      CHECK(k.entry(2 + r, 2 + c) == Complex(0.0, 0.0));
      CHECK(k.entry(r, 2 + c) == sz.entry(r, c));
      CHECK(k.entry(2 + r, c) == sz.entry(r, c));
    }
}

TEST_CASE("kron preserves Hermiticity exactly and multiplies traces") {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 50; ++trial) {
    const HMatrix2 a = random_psd(gen);
    const HMatrix2 b = random_psd(gen);
    const HMatrix4 k = kron(a, b);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) CHECK(k.entry(c, r) == std::conj(k.entry(r, c)));
    CHECK(k.trace() == doctest::Approx(a.trace() * b.trace()).epsilon(1e-12));
  }
}

TEST_CASE("sandwich basics") {
  const HMatrix2 eye(1.0, 1.0, Complex(0.0, 0.0));
  const Vec2c unit{Complex(0.6, 0.0), Complex(0.0, 0.8)};
  CHECK(sandwich(eye, unit) == doctest::Approx(1.0).epsilon(1e-14));

  const HMatrix2 proj(1.0, 0.0, Complex(0.0, 0.0));
  const Vec2c z1{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  CHECK(sandwich(proj, z1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sandwich with a phase state matches the closed-form pattern value") {
  // gamma = [[0.8, 0.4], [0.4, 0.2]] probed at phi = pi
  const HMatrix2 gamma(0.8, 0.2, Complex(0.4, 0.0));
  const double pi = 3.14159265358979323846;
  const double norm = 1.0 / std::sqrt(2.0 * pi);
  const Vec2c phase{Complex(norm, 0.0), norm * Complex(std::cos(pi), std::sin(pi))};
  CHECK(sandwich(gamma, phase) == doctest::Approx(0.03183098861837907).epsilon(1e-12));
}

TEST_CASE("sandwich is real for random Hermitian matrices") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const HMatrix2 m(u(gen), u(gen), Complex(u(gen), u(gen)));
    const Vec2c v{Complex(u(gen), u(gen)), Complex(u(gen), u(gen))};
    CHECK_NOTHROW(sandwich(m, v)); // the 1e-12 imaginary-residue assertion
  }
}

TEST_CASE("is_psd") {
  CHECK(is_psd(HMatrix2(1.0, 1.0, Complex(0.0, 0.0)), 1e-10));
  CHECK(is_psd(HMatrix2(1.0, 0.0, Complex(0.0, 0.0)), 1e-10)); // boundary
  // eigenvalues 0.9 and -0.1
  CHECK_FALSE(is_psd(HMatrix2(0.4, 0.4, Complex(0.5, 0.0)), 1e-10));
  CHECK_THROWS_AS(is_psd(HMatrix2(1.0, 1.0, Complex(0.0, 0.0)), -1.0), InvalidArgument);
}

TEST_CASE("eigenvalues closed form") {
  const auto [lo, hi] = HMatrix2(0.4, 0.4, Complex(0.5, 0.0)).eigenvalues();
  CHECK(lo == doctest::Approx(-0.1).epsilon(1e-14));
  CHECK(hi == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("cholesky_psd identity and frozen example") {
  const Lower2 eye = cholesky_psd(HMatrix2(1.0, 1.0, Complex(0.0, 0.0)));
  CHECK(eye.l00 == doctest::Approx(1.0));
  CHECK(eye.l10 == Complex(0.0, 0.0));
  CHECK(eye.l11 == doctest::Approx(1.0));

  // gamma for intensities (0.8, 0.2), |mu| = 0.5, delta = 0: off-diagonal 0.2
  const HMatrix2 gamma(0.8, 0.2, Complex(0.2, 0.0));
  const Lower2 L = cholesky_psd(gamma);
  CHECK(L.l00 == doctest::Approx(0.8944271909999159).epsilon(1e-12));
  CHECK(L.l10.real() == doctest::Approx(0.223606797749979).epsilon(1e-12));
  CHECK(L.l10.imag() == 0.0);
  CHECK(L.l11 == doctest::Approx(0.3872983346207417).epsilon(1e-12));
  const HMatrix2 back = L.gram();
  CHECK(std::abs(back.diag0() - gamma.diag0()) < 1e-10);
  CHECK(std::abs(back.diag1() - gamma.diag1()) < 1e-10);
  CHECK(std::abs(back.off() - gamma.off()) < 1e-10);
}

TEST_CASE("cholesky_psd rank-deficient input yields a zero column") {
  const Lower2 L = cholesky_psd(HMatrix2(0.5, 0.5, Complex(0.5, 0.0)));
  CHECK(L.l00 == doctest::Approx(0.7071067811865476).epsilon(1e-12));
  CHECK(L.l10.real() == doctest::Approx(0.7071067811865476).epsilon(1e-12));
  CHECK(L.l11 == 0.0);
}

TEST_CASE("cholesky_psd reproduces random PSD matrices") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    const HMatrix2 m = random_psd(gen);
    const HMatrix2 back = cholesky_psd(m).gram();
    CHECK(back.diag0() == doctest::Approx(m.diag0()).epsilon(1e-10));
    CHECK(back.diag1() == doctest::Approx(m.diag1()).epsilon(1e-10));
    CHECK(std::abs(back.off() - m.off()) < 1e-10);
  }
}

TEST_CASE("cholesky_psd rejects indefinite input") {
  CHECK_THROWS_AS(cholesky_psd(HMatrix2(0.4, 0.4, Complex(0.5, 0.0))), NotPositiveSemidefinite);
}

TEST_CASE("HMatrix4 validates Hermiticity") {
  std::array<Complex, 16> e{};
  e[1] = Complex(0.0, 1.0);
  e[4] = Complex(0.0, 1.0); // should be -i
  CHECK_THROWS_AS(HMatrix4{e}, InvalidArgument);
  e[4] = Complex(0.0, -1.0);
  CHECK_NOTHROW(HMatrix4{e});
}

TEST_CASE("constructors reject non-finite entries") {
  CHECK_THROWS_AS(HMatrix2(std::nan(""), 0.0, Complex(0.0, 0.0)), InvalidArgument);
  CHECK_THROWS_AS(HMatrix2(0.0, 0.0, Complex(0.0, std::numeric_limits<double>::infinity())),
                  InvalidArgument);
}
