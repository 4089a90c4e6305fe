#pragma once

#include "ntpack/matrix.hpp"
#include "ntpack/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ntpack {

/// A real root of a square-free monic polynomial, isolated in [lo, hi].
/// lo == hi marks a rational root hit exactly.
class RealAlgebraic {
 public:
  /// Throws std::invalid_argument unless [lo, hi] isolates exactly one root.
  RealAlgebraic(Polynomial poly, Rational lo, Rational hi);
  static RealAlgebraic from_rational(const Rational& r);

  const Polynomial& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational_point() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }

  /// One bisection step.
  void bisect();

 private:
  RealAlgebraic() = default;
  friend RealAlgebraic negate(const RealAlgebraic& a);
  friend RealAlgebraic with_factor(const RealAlgebraic& a, const Polynomial& factor);

  Polynomial poly_;
  Rational lo_, hi_;
};

std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots in (lo, hi). Throws EndpointIsRoot.
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// All real roots of the square-free part of p, ascending.
std::vector<RealAlgebraic> isolate_real_roots(const Polynomial& p);

std::optional<RealAlgebraic> largest_real_root_gt(const Polynomial& p, const Rational& bound);

/// -1, 0 or +1: the exact sign of q at a.
int sign_at(const Polynomial& q, const RealAlgebraic& a);

RealAlgebraic refine(RealAlgebraic a, const Rational& width);

int compare(const RealAlgebraic& a, const Rational& r);
int compare(const RealAlgebraic& a, const RealAlgebraic& b);

RealAlgebraic negate(const RealAlgebraic& a);

/// The same root described by a factor of its polynomial; the factor must vanish at a.
RealAlgebraic with_factor(const RealAlgebraic& a, const Polynomial& factor);

/// q(a) truncated to `digits` significant digits, e.g. "4.79128...".
std::string to_decimal(const Polynomial& q, const RealAlgebraic& a, int digits = 30);
std::string to_decimal(const RealAlgebraic& a, int digits = 30);

/// Vector whose entries are polynomials in a real algebraic point, reduced modulo its polynomial.
class AlgVector {
 public:
  AlgVector(std::vector<Polynomial> entries, RealAlgebraic point);
  static AlgVector from_rational(std::span<const Rational> v, const RealAlgebraic& point);

  std::size_t dim() const { return entries_.size(); }
  const std::vector<Polynomial>& entries() const { return entries_; }
  const Polynomial& operator[](std::size_t i) const { return entries_[i]; }
  const RealAlgebraic& point() const { return point_; }
  const Polynomial& modulus() const { return point_.poly(); }

  int sign(std::size_t i) const { return sign_at(entries_[i], point_); }
  bool is_zero() const;

  AlgVector scaled(const Polynomial& s) const;
  /// Re-expresses the vector over a factor of the modulus that still vanishes at the point.
  AlgVector over_factor(const Polynomial& factor) const;

 private:
  std::vector<Polynomial> entries_;
  RealAlgebraic point_;
};

AlgVector operator*(const RatMatrix& a, const AlgVector& v);

/// Entrywise zero test of v - w at the shared point.
bool equal_at_point(const AlgVector& v, const AlgVector& w);

struct SymbolicKernel {
  RealAlgebraic point;                          // possibly over a factor of the input polynomial
  std::vector<std::vector<Polynomial>> basis;   // kernel of (a - x I) at the point
};

/// Kernel of a - xI over Q[x]/(m), eliminating with pivots decided by their value at the point.
/// The modulus splits whenever a pivot candidate is a zero divisor.
SymbolicKernel symbolic_kernel(const RatMatrix& a, const RealAlgebraic& point);

}  // namespace ntpack
