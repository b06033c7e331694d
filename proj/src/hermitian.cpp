#include "younglab/hermitian.hpp"

#include <cmath>
#include <sstream>

namespace younglab {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

[[noreturn]] void fail(const std::string& msg) { throw InvalidArgument(msg); }

} // namespace

HMatrix2::HMatrix2(double d0, double d1, Complex off) : d0_(d0), d1_(d1), off_(off) {
  if (!std::isfinite(d0) || !std::isfinite(d1) || !finite(off))
    fail("HMatrix2: entries must be finite");
}

Complex HMatrix2::entry(int r, int c) const {
  if (r < 0 || r > 1 || c < 0 || c > 1) throw DimensionMismatch("HMatrix2::entry: index out of range");
  if (r == c) return r == 0 ? Complex(d0_, 0.0) : Complex(d1_, 0.0);
  return r == 0 ? off_ : std::conj(off_);
}

std::pair<double, double> HMatrix2::eigenvalues() const {
  const double mean = 0.5 * (d0_ + d1_);
  const double rad = std::hypot(0.5 * (d0_ - d1_), std::abs(off_));
  return {mean - rad, mean + rad};
}

HMatrix4::HMatrix4() { e_.fill(Complex(0.0, 0.0)); }

HMatrix4::HMatrix4(const std::array<Complex, 16>& entries, double tol) {
  for (const Complex& z : entries)
    if (!finite(z)) fail("HMatrix4: entries must be finite");
  for (int r = 0; r < 4; ++r) {
    for (int c = r; c < 4; ++c) {
      const Complex a = entries[4 * r + c];
      const Complex b = std::conj(entries[4 * c + r]);
      if (std::abs(a - b) > tol) {
        std::ostringstream os;
        os << "HMatrix4: not Hermitian within " << tol << " at (" << r << "," << c << ")";
        fail(os.str());
      }
      // Store the Hermitian average so downstream sandwiches are exactly real.
      const Complex h = 0.5 * (a + b);
      e_[4 * r + c] = h;
      e_[4 * c + r] = std::conj(h);
    }
  }
  for (int r = 0; r < 4; ++r) e_[4 * r + r] = Complex(e_[4 * r + r].real(), 0.0);
}

double HMatrix4::trace() const {
  double t = 0.0;
  for (int r = 0; r < 4; ++r) t += e_[4 * r + r].real();
  return t;
}

HMatrix4 kron(const HMatrix2& a, const HMatrix2& b) {
  std::array<Complex, 16> e;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          e[4 * (2 * i + k) + (2 * j + l)] = a.entry(i, j) * b.entry(k, l);
  return HMatrix4(e);
}

namespace {

double take_real(Complex acc, const char* what) {
  if (std::abs(acc.imag()) >= 1e-12)
    throw Error(std::string(what) + ": imaginary residue exceeds 1e-12");
  return acc.real();
}

} // namespace

double sandwich(const HMatrix2& m, const Vec2c& v) {
  Complex acc(0.0, 0.0);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) acc += std::conj(v[r]) * m.entry(r, c) * v[c];
  return take_real(acc, "sandwich(HMatrix2)");
}

double sandwich(const HMatrix4& m, const Vec4c& v) {
  Complex acc(0.0, 0.0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) acc += std::conj(v[r]) * m.entry(r, c) * v[c];
  return take_real(acc, "sandwich(HMatrix4)");
}

bool is_psd(const HMatrix2& m, double tol) {
  if (tol < 0.0) fail("is_psd: tol must be >= 0");
  return m.eigenvalues().first >= -tol;
}

HMatrix2 Lower2::gram() const {
  return HMatrix2(l00 * l00, std::norm(l10) + l11 * l11, l00 * std::conj(l10));
}

Lower2 cholesky_psd(const HMatrix2& m, double tol) {
  if (!is_psd(m, tol))
    throw NotPositiveSemidefinite("cholesky_psd: matrix is not positive semidefinite");
  Lower2 L;
  if (m.diag0() > tol) {
    L.l00 = std::sqrt(m.diag0());
    L.l10 = std::conj(m.off()) / L.l00; // entry (1,0) of m
    const double rem = m.diag1() - std::norm(L.l10);
    L.l11 = rem > tol ? std::sqrt(rem) : 0.0;
  } else {
    // Zero pivot: PSD forces the off-diagonal to vanish as well.
    L.l00 = 0.0;
    L.l10 = Complex(0.0, 0.0);
    L.l11 = m.diag1() > tol ? std::sqrt(m.diag1()) : 0.0;
  }
  return L;
}

} // namespace younglab
