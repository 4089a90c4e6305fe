#pragma once

#include "ntpack/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ntpack {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;

  Rational operator()(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(Polynomial a, const Polynomial& b);
Polynomial operator*(const Rational& s, Polynomial a);

/// (quotient, remainder); throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<Polynomial> inverse_mod(const Polynomial& a, const Polynomial& m);

/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

RatMatrix evaluate_at_matrix(const Polynomial& p, const RatMatrix& a);

/// Monic det(xI - a) by Faddeev-LeVerrier.
Polynomial char_poly(const RatMatrix& a);

/// Human-readable form, e.g. "x^2 - 5x + 1".
std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace ntpack
