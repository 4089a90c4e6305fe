#include "ntpack/algebraic.hpp"

#include "ntpack/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ntpack {

namespace {

struct Interval {
  Rational lo, hi;
};

Interval mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval interval_eval(const Polynomial& q, const Rational& lo, const Rational& hi) {
  const auto& c = q.coefficients();
  Interval acc{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, Interval{lo, hi});
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

int sign_changes(const std::vector<Polynomial>& seq, const Rational& t) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(p(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coefficients()[i] / p.leading())));
  return m + 2;
}

Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Rational pow10(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Polynomial reduce(const Polynomial& q, const Polynomial& m) { return m.degree() >= 1 ? q % m : q; }

}  // namespace

RealAlgebraic::RealAlgebraic(Polynomial poly, Rational lo, Rational hi)
    : poly_(square_free_part(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 1) throw std::invalid_argument("algebraic number needs a nonconstant polynomial");
  if (lo_ > hi_) throw std::invalid_argument("isolating interval has lo > hi");
  if (lo_ == hi_) {
    if (poly_(lo_) != 0) throw std::invalid_argument("degenerate interval is not a root");
  } else if (sturm_count(poly_, lo_, hi_) != 1) {
    throw std::invalid_argument("interval does not isolate exactly one root");
  }
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& r) {
  RealAlgebraic a;
  a.poly_ = Polynomial(std::vector<Rational>{-r, 1});
  a.lo_ = a.hi_ = r;
  return a;
}

void RealAlgebraic::bisect() {
  if (lo_ == hi_) return;
  Rational mid = (lo_ + hi_) / 2;
  int sm = sgn(poly_(mid));
  if (sm == 0) {
    lo_ = hi_ = mid;
  } else if (sgn(poly_(lo_)) != sm) {
    hi_ = mid;
  } else {
    lo_ = mid;
  }
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p(lo) == 0 || p(hi) == 0) throw EndpointIsRoot("sturm_count endpoint is a root");
  if (p.degree() < 1) return 0;
  auto seq = sturm_sequence(p);
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<RealAlgebraic> isolate_real_roots(const Polynomial& p) {
  std::vector<RealAlgebraic> roots;
  if (p.is_zero()) return roots;
  const Polynomial sf = square_free_part(p);
  if (sf.degree() < 1) return roots;
  const auto seq = sturm_sequence(sf);
  auto count = [&](const Rational& lo, const Rational& hi) {
    return sign_changes(seq, lo) - sign_changes(seq, hi);
  };

  std::function<void(const Rational&, const Rational&, int)> split = [&](const Rational& lo,
                                                                          const Rational& hi, int n) {
    if (n == 0) return;
    if (n == 1) {
      roots.emplace_back(sf, lo, hi);
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (sf(mid) != 0) {
      split(lo, mid, count(lo, mid));
      split(mid, hi, count(mid, hi));
      return;
    }
    Rational eps = (hi - lo) / 4;
    while (sf(mid - eps) == 0 || sf(mid + eps) == 0 || count(mid - eps, mid + eps) != 1) eps /= 2;
    split(lo, mid - eps, count(lo, mid - eps));
    roots.emplace_back(sf, mid, mid);
    split(mid + eps, hi, count(mid + eps, hi));
  };

  Rational b = cauchy_bound(sf);
  split(-b, b, count(-b, b));
  return roots;
}

std::optional<RealAlgebraic> largest_real_root_gt(const Polynomial& p, const Rational& bound) {
  auto roots = isolate_real_roots(p);
  if (roots.empty() || compare(roots.back(), bound) <= 0) return std::nullopt;
  return roots.back();
}

int sign_at(const Polynomial& q, const RealAlgebraic& a) {
  Polynomial r = reduce(q, a.poly());
  if (r.is_constant()) return r.is_zero() ? 0 : sgn(r.leading());
  if (a.is_rational_point()) return sgn(r(a.lo()));
  Polynomial g = gcd(r, a.poly());
  if (g.degree() >= 1 && sturm_count(g, a.lo(), a.hi()) >= 1) return 0;
  RealAlgebraic b = a;
  for (;;) {
    if (b.is_rational_point()) return sgn(r(b.lo()));
    Interval v = interval_eval(r, b.lo(), b.hi());
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    b.bisect();
  }
}

RealAlgebraic refine(RealAlgebraic a, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine width must be positive");
  while (a.width() > width) a.bisect();
  return a;
}

int compare(const RealAlgebraic& a, const Rational& r) {
  if (a.is_rational_point()) return sgn(a.lo() - r);
  if (r < a.lo()) return 1;
  if (r > a.hi()) return -1;
  int sr = sgn(a.poly()(r));
  if (sr == 0) return 0;
  return sgn(a.poly()(a.lo())) != sr ? -1 : 1;
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational_point()) return -compare(b, a.lo());
  if (b.is_rational_point()) return compare(a, b.lo());
  if (compare(a, b.lo()) >= 0 && compare(a, b.hi()) <= 0 && sign_at(b.poly(), a) == 0) return 0;
  RealAlgebraic x = a, y = b;
  for (;;) {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    x.bisect();
    y.bisect();
    if (x.is_rational_point() || y.is_rational_point()) return compare(x, y);
  }
}

RealAlgebraic negate(const RealAlgebraic& a) {
  std::vector<Rational> c = a.poly().coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  RealAlgebraic n;
  n.poly_ = Polynomial(std::move(c)).monic();
  n.lo_ = -a.hi_;
  n.hi_ = -a.lo_;
  return n;
}

RealAlgebraic with_factor(const RealAlgebraic& a, const Polynomial& factor) {
  RealAlgebraic n = a;
  n.poly_ = factor.monic();
  return n;
}

std::string to_decimal(const Polynomial& q, const RealAlgebraic& a, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  const int s = sign_at(q, a);
  if (s == 0) return "0";
  const Polynomial v = Rational(s) * reduce(q, a.poly());

  RealAlgebraic b = a;
  auto bounds = [&] {
    if (b.is_rational_point()) {
      Rational exact = v(b.lo());
      return Interval{exact, exact};
    }
    return interval_eval(v, b.lo(), b.hi());
  };
  Interval y = bounds();
  while (y.lo <= 0) {
    b.bisect();
    y = bounds();
  }

  long e = 0;
  while (pow10(e) > y.lo) --e;
  while (pow10(e + 1) <= y.lo) ++e;
  while (sign_at(v - Polynomial::constant(pow10(e + 1)), b) >= 0) ++e;

  const Rational scale = pow10(digits - 1 - e);
  Integer n;
  for (;;) {
    Rational yl = y.lo * scale, yh = y.hi * scale;
    Integer fl = floor_of(yl), fh = floor_of(yh);
    if (fl == fh) {
      n = fl;
      break;
    }
    if (ceil_of(yl) == fh) {
      n = sign_at(scale * v - Polynomial::constant(Rational(fh)), b) < 0 ? Integer(fh - 1) : fh;
      break;
    }
    b.bisect();
    y = bounds();
  }

  std::string d = n.get_str();
  const long point = e + 1;
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + d;
  } else if (point >= static_cast<long>(d.size())) {
    out = d + std::string(static_cast<std::size_t>(point) - d.size(), '0');
  } else {
    out = d.substr(0, point) + "." + d.substr(point);
  }
  if (out.find('.') != std::string::npos) {
    out.erase(out.find_last_not_of('0') + 1);
    if (out.back() == '.') out.pop_back();
  }
  return s < 0 ? "-" + out : out;
}

std::string to_decimal(const RealAlgebraic& a, int digits) { return to_decimal(Polynomial::x(), a, digits); }

AlgVector::AlgVector(std::vector<Polynomial> entries, RealAlgebraic point)
    : entries_(std::move(entries)), point_(std::move(point)) {
  for (auto& e : entries_) e = reduce(e, point_.poly());
}

AlgVector AlgVector::from_rational(std::span<const Rational> v, const RealAlgebraic& point) {
  std::vector<Polynomial> entries;
  for (const auto& q : v) entries.push_back(Polynomial::constant(q));
  return AlgVector(std::move(entries), point);
}

bool AlgVector::is_zero() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (sign(i) != 0) return false;
  return true;
}

AlgVector AlgVector::scaled(const Polynomial& s) const {
  std::vector<Polynomial> out;
  for (const auto& e : entries_) out.push_back(e * s);
  return AlgVector(std::move(out), point_);
}

AlgVector AlgVector::over_factor(const Polynomial& factor) const {
  return AlgVector(entries_, with_factor(point_, factor));
}

AlgVector operator*(const RatMatrix& a, const AlgVector& v) {
  if (a.cols() != v.dim()) throw DimensionMismatch("matrix times algebraic vector");
  std::vector<Polynomial> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * v[j];
  return AlgVector(std::move(out), v.point());
}

bool equal_at_point(const AlgVector& v, const AlgVector& w) {
  if (v.dim() != w.dim()) throw DimensionMismatch("algebraic vector comparison");
  if (!(v.modulus() == w.modulus())) throw std::invalid_argument("algebraic vectors over different moduli");
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (sign_at(v[i] - w[i], v.point()) != 0) return false;
  return true;
}

SymbolicKernel symbolic_kernel(const RatMatrix& a, const RealAlgebraic& point) {
  if (!a.square()) throw DimensionMismatch("symbolic_kernel of a non-square matrix");
  const std::size_t n = a.rows();
  RealAlgebraic p = point;
  Polynomial m = p.poly();

  std::vector<std::vector<Polynomial>> rows(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = reduce(Polynomial::constant(a(i, j)) - (i == j ? Polynomial::x() : Polynomial()), m);

  auto shrink = [&](Polynomial factor) {
    m = factor.monic();
    p = with_factor(p, m);
    for (auto& r : rows)
      for (auto& e : r) e = reduce(e, m);
  };
  // Decides whether e is nonzero at the point, and splits m so that e becomes zero or a unit.
  auto usable_pivot = [&](const Polynomial& e) {
    if (e.is_zero()) return false;
    Polynomial g = gcd(e, m);
    if (sign_at(e, p) == 0) {
      shrink(g);
      return false;
    }
    if (g.degree() >= 1) shrink(divmod(m, g).first);
    return true;
  };

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t r = row;
    while (r < n && !usable_pivot(rows[r][col])) ++r;
    if (r == n) continue;
    std::swap(rows[row], rows[r]);
    Polynomial inv = *inverse_mod(rows[row][col], m);
    for (auto& e : rows[row]) e = reduce(e * inv, m);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || rows[i][col].is_zero()) continue;
      Polynomial f = rows[i][col];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = reduce(rows[i][k] - f * rows[row][k], m);
    }
    pivots.push_back(col);
    ++row;
  }

  SymbolicKernel out{p, {}};
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Polynomial> v(n);
    v[free] = Polynomial::constant(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = reduce(-rows[i][free], m);
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace ntpack
