#include "ntpack/polynomial.hpp"

#include "ntpack/errors.hpp"

#include <stdexcept>

namespace ntpack {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::x() { return Polynomial{0, 1}; }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.c_) c *= inv;
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }
Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(a.degree() - db + 1);
  Rational inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[k + db] * inv;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coefficients()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    Polynomial r = u % v;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

std::optional<Polynomial> inverse_mod(const Polynomial& a, const Polynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  Polynomial r0 = m, r1 = a % m;
  Polynomial s0, s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (Rational(1) / r0.leading()) * s0 % m;
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_constant()) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

RatMatrix evaluate_at_matrix(const Polynomial& p, const RatMatrix& a) {
  if (!a.square()) throw DimensionMismatch("polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix acc(n, n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it * RatMatrix::identity(n);
  return acc;
}

Polynomial char_poly(const RatMatrix& a) {
  if (!a.square()) throw DimensionMismatch("char_poly of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * RatMatrix::identity(n);
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) {
      std::string s = to_string(mag);
      out += (i > 0 && !is_integer(mag)) ? "(" + s + ")" : s;
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ntpack
