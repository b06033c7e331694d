#pragma once

#include <array>
#include <complex>
#include <utility>

#include "younglab/errors.hpp"

namespace younglab {

using Complex = std::complex<double>;

using Vec2c = std::array<Complex, 2>;
using Vec4c = std::array<Complex, 4>;

/// 2x2 Hermitian matrix, Hermitian by construction: only the real diagonal
/// and the upper off-diagonal entry are stored, entry(1,0) is the conjugate
/// of entry(0,1). Constructors reject non-finite components.
class HMatrix2 {
public:
  HMatrix2() : d0_(0.0), d1_(0.0), off_(0.0, 0.0) {}

  /// d0, d1: diagonal; off: entry (0,1).
  HMatrix2(double d0, double d1, Complex off);

  double diag0() const { return d0_; }
  double diag1() const { return d1_; }
  Complex off() const { return off_; }

  Complex entry(int r, int c) const;
  double trace() const { return d0_ + d1_; }

  /// Closed-form eigenvalues, ascending.
  std::pair<double, double> eigenvalues() const;

private:
  double d0_, d1_;
  Complex off_;
};

/// 4x4 Hermitian matrix held as a checked general container: the
/// constructor validates Hermiticity entrywise and then stores the exact
/// Hermitian average (m + m^dagger)/2.
class HMatrix4 {
public:
  HMatrix4();

  /// entries: row-major 4x4. Throws InvalidArgument if any entry deviates
  /// from Hermiticity by more than tol, or is not finite.
  explicit HMatrix4(const std::array<Complex, 16>& entries, double tol = 1e-12);

  Complex entry(int r, int c) const { return e_[4 * r + c]; }
  double trace() const;

private:
  std::array<Complex, 16> e_;
};

/// Kronecker product; Hermitian exactly because conjugate-symmetric entry
/// pairs of the factors multiply to conjugate-symmetric products.
HMatrix4 kron(const HMatrix2& a, const HMatrix2& b);

/// v^dagger M v for Hermitian M. The imaginary residue must be below 1e-12
/// (checked); the real part is returned.
double sandwich(const HMatrix2& m, const Vec2c& v);
double sandwich(const HMatrix4& m, const Vec4c& v);

/// True iff both closed-form eigenvalues are >= -tol.
bool is_psd(const HMatrix2& m, double tol = 1e-10);

/// Lower-triangular Cholesky-type factor of a PSD 2x2 Hermitian matrix,
/// L such that L L^dagger reproduces the input. l00 and l11 are real and
/// nonnegative.
struct Lower2 {
  double l00 = 0.0;
  Complex l10{0.0, 0.0};
  double l11 = 0.0;

  /// L L^dagger, for factorization checks.
  HMatrix2 gram() const;
};

/// Factor a PSD matrix; pivots at or below tol are treated as zero, so
/// rank-deficient inputs yield a zero column. Throws
/// NotPositiveSemidefinite when is_psd(m, tol) fails.
Lower2 cholesky_psd(const HMatrix2& m, double tol = 1e-10);

} // namespace younglab
