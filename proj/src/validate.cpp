#include "ntpack/validate.hpp"

#include "ntpack/algorithms.hpp"
#include "ntpack/errors.hpp"

#include <algorithm>
#include <random>

namespace ntpack {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

Rational cross(const RatVector& u, const RatVector& v) { return u[0] * v[1] - u[1] * v[0]; }

bool parallel(const RatVector& u, const RatVector& v) { return cross(u, v) == 0 && dot(u, v) > 0; }

RatVector primitive(RatVector v) {
  Integer den = 1, num = 0;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  for (auto& q : v) q *= den;
  for (const auto& q : v) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  if (num > 1)
    for (auto& q : v) q /= num;
  return v;
}

std::vector<RatVector> boundary_candidates(const Cone& cone) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < cone.inequalities.rows(); ++i) {
    RatVector d{-cone.inequalities(i, 1), cone.inequalities(i, 0)};
    if (is_zero(d)) continue;
    for (int s : {1, -1}) {
      RatVector e{d[0] * s, d[1] * s};
      if (cone_contains(cone, e) && std::none_of(out.begin(), out.end(), [&](const RatVector& o) { return parallel(o, e); }))
        out.push_back(primitive(e));
    }
  }
  return out;
}

void sort_by_angle(std::vector<RatVector>& rays) {
  std::sort(rays.begin(), rays.end(), [](const RatVector& u, const RatVector& v) { return cross(u, v) > 0; });
  rays.erase(std::unique(rays.begin(), rays.end(), parallel), rays.end());
}

std::string point_text(const Ledger& l, const PLPoint& p) {
  return to_string(p.coords) + "∈" + l.cells.at(p.cell).name;
}

struct Recorder {
  CheckResult& check;
  void pass() { ++check.cases; }
  void fail(std::string witness) {
    ++check.cases;
    check.passed = false;
    if (check.witnesses.size() < kMaxWitnesses) check.witnesses.push_back(std::move(witness));
  }
};

PLPoint apply_letter(const Ledger& l, SignedGen g, const PLPoint& p) {
  return apply_piece(l.pieces[find_piece(l.pieces, g, p)], p);
}

std::vector<SignedGen> signed_generators(const Ledger& l) {
  std::vector<SignedGen> out;
  for (std::size_t i = 0; i < l.generators.size(); ++i) {
    out.push_back({i, false});
    out.push_back({i, true});
  }
  return out;
}

std::vector<std::size_t> pieces_of(const Ledger& l, SignedGen g, std::size_t cell) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.pieces.size(); ++i)
    if (l.pieces[i].gen == g && l.pieces[i].domain_cell == cell) out.push_back(i);
  return out;
}

/// Cell extreme rays plus every piece boundary ray inside the cell, in angular order.
std::optional<std::vector<RatVector>> breakpoints(const Ledger& l, SignedGen g, std::size_t cell) {
  auto ext = extreme_rays_2d(l.cells[cell].cone);
  if (!ext) return std::nullopt;
  std::vector<RatVector> rays{ext->first, ext->second};
  for (std::size_t k : pieces_of(l, g, cell)) {
    if (l.pieces[k].domain_cone.ambient_dim != 2 || l.pieces[k].domain_cone.equalities.rows()) return std::nullopt;
    for (auto& r : boundary_candidates(l.pieces[k].domain_cone))
      if (cone_contains(l.cells[cell].cone, r)) rays.push_back(r);
  }
  sort_by_angle(rays);
  return rays;
}

void check_containment(const Ledger& l, const ValidateOptions& o, CheckResult& out) {
  Recorder rec{out};
  for (std::size_t i = 0; i < l.pieces.size(); ++i) {
    const Piece& p = l.pieces[i];
    for (const auto& x : sample_cone(p.domain_cone, o.samples, o.seed + i)) {
      RatVector y = p.matrix * x;
      if (cone_contains(p.codomain_cone, y)) {
        rec.pass();
      } else {
        rec.fail(l.generator_name(p.gen) + " piece " + l.piece_label(i) + " maps " + to_string(x) + " to " +
                 to_string(y) + " outside " + l.cells[p.codomain_cell].name);
      }
    }
  }
  for (const PLPoint* b : {&l.basepoint, l.vertex_basepoint ? &*l.vertex_basepoint : nullptr}) {
    if (!b) continue;
    if (b->cell < l.cells.size() && cone_contains(l.cells[b->cell].cone, b->coords)) {
      rec.pass();
    } else {
      rec.fail("basepoint " + to_string(b->coords) + " lies outside its cell");
    }
  }
}

void check_coverage(const Ledger& l, const ValidateOptions& o, CheckResult& out) {
  Recorder rec{out};
  for (SignedGen g : signed_generators(l)) {
    for (std::size_t c = 0; c < l.cells.size(); ++c) {
      const auto idx = pieces_of(l, g, c);
      auto covered = [&](const RatVector& x) {
        return std::any_of(idx.begin(), idx.end(), [&](std::size_t k) { return cone_contains(l.pieces[k].domain_cone, x); });
      };
      const std::string where = l.generator_name(g) + " on " + l.cells[c].name;
      if (auto rays = breakpoints(l, g, c)) {
        for (std::size_t i = 0; i < rays->size(); ++i) {
          std::vector<RatVector> probes{(*rays)[i]};
          if (i + 1 < rays->size()) {
            RatVector mid = (*rays)[i];
            for (std::size_t j = 0; j < 2; ++j) mid[j] += (*rays)[i + 1][j];
            probes.push_back(mid);
          }
          for (const auto& x : probes) {
            if (covered(x)) {
              rec.pass();
            } else {
              rec.fail(where + ": direction " + to_string(x) + " is in no piece");
            }
          }
        }
      } else {
        for (const auto& x : sample_cone(l.cells[c].cone, o.samples, o.seed + 7 * c + g.index)) {
          if (covered(x)) {
            rec.pass();
          } else {
            rec.fail(where + ": point " + to_string(x) + " is in no piece");
          }
        }
      }
    }
  }
}

void check_agreement(const Ledger& l, CheckResult& out) {
  Recorder rec{out};
  for (SignedGen g : signed_generators(l)) {
    for (std::size_t c = 0; c < l.cells.size(); ++c) {
      auto rays = breakpoints(l, g, c);
      if (!rays) continue;
      for (const auto& r : *rays) {
        std::optional<PLPoint> first;
        std::size_t first_piece = 0;
        for (std::size_t k : pieces_of(l, g, c)) {
          const Piece& p = l.pieces[k];
          if (!cone_contains(p.domain_cone, r)) continue;
          PLPoint img{p.codomain_cell, p.matrix * r};
          if (!first) {
            first = img;
            first_piece = k;
          } else if (points_equal(l, *first, img)) {
            rec.pass();
          } else {
            rec.fail(l.generator_name(g) + " on ray " + to_string(r) + " of " + l.cells[c].name + ": piece " +
                     l.piece_label(first_piece) + " gives " + point_text(l, *first) + ", piece " + l.piece_label(k) +
                     " gives " + point_text(l, img));
          }
        }
      }
    }
  }

  for (const auto& glue : l.gluings) {
    if (l.cell_dim(glue.cell_a) != 2) continue;
    RowEchelon e = row_reduce(glue.map);
    if (e.rank != 1) continue;
    RatVector r = e.reduced.row(0);
    if (!cone_contains(l.cells[glue.cell_a].cone, r)) {
      for (auto& x : r) x = -x;
      if (!cone_contains(l.cells[glue.cell_a].cone, r)) continue;
    }
    PLPoint pa{glue.cell_a, r}, pb{glue.cell_b, glue.map * r};
    for (SignedGen g : signed_generators(l)) {
      try {
        PLPoint ia = apply_letter(l, g, pa), ib = apply_letter(l, g, pb);
        if (points_equal(l, ia, ib)) {
          rec.pass();
        } else {
          rec.fail(l.generator_name(g) + " on glued ray " + point_text(l, pa) + " ~ " + point_text(l, pb) + " gives " +
                   point_text(l, ia) + " and " + point_text(l, ib));
        }
      } catch (const std::runtime_error& err) {
        rec.fail(l.generator_name(g) + " on glued ray " + point_text(l, pa) + ": " + err.what());
      }
    }
  }
}

void check_inverses(const Ledger& l, const ValidateOptions& o, CheckResult& out) {
  Recorder rec{out};
  for (SignedGen g : signed_generators(l)) {
    for (std::size_t c = 0; c < l.cells.size(); ++c) {
      for (const auto& x : sample_cone(l.cells[c].cone, o.samples, o.seed + 31 * c + 2 * g.index + g.inverse, true)) {
        PLPoint p{c, x};
        try {
          PLPoint back = apply_letter(l, g.inverted(), apply_letter(l, g, p));
          if (back == p) {
            rec.pass();
          } else {
            rec.fail(l.generator_name(g.inverted()) + "·" + l.generator_name(g) + " sends " + point_text(l, p) +
                     " to " + point_text(l, back));
          }
        } catch (const std::runtime_error& err) {
          rec.fail(l.generator_name(g.inverted()) + "·" + l.generator_name(g) + " at " + point_text(l, p) + ": " +
                   err.what());
        }
      }
    }
  }
}

void check_relators(const Ledger& l, const std::vector<Relator>& relators, const ValidateOptions& o,
                    CheckResult& out) {
  Recorder rec{out};
  const EvalOptions untracked{false, nullptr};
  for (std::size_t i = 0; i < relators.size(); ++i) {
    const Relator& rel = relators[i];
    const std::string name = to_string(l, rel.lhs) + " = " + to_string(l, rel.rhs);
    for (std::size_t c = 0; c < l.cells.size(); ++c) {
      for (const auto& x : sample_cone(l.cells[c].cone, o.samples, o.seed + 101 * i + c)) {
        PLPoint p{c, x};
        try {
          PLPoint a = basic_computation(l, rel.lhs, p, untracked).end;
          PLPoint b = basic_computation(l, rel.rhs, p, untracked).end;
          if (points_equal(l, a, b)) {
            rec.pass();
          } else {
            rec.fail(name + " at " + point_text(l, p) + ": " + point_text(l, a) + " vs " + point_text(l, b));
          }
        } catch (const std::runtime_error& err) {
          rec.fail(name + " at " + point_text(l, p) + ": " + err.what());
        }
      }
    }
  }
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<std::pair<RatVector, RatVector>> extreme_rays_2d(const Cone& cone) {
  if (cone.ambient_dim != 2 || cone.equalities.rows() != 0) return std::nullopt;
  auto cand = boundary_candidates(cone);
  if (cand.size() < 2) return std::nullopt;
  RatVector lo = cand[0], hi = cand[0];
  for (const auto& c : cand) {
    if (cross(c, lo) > 0) lo = c;
    if (cross(hi, c) > 0) hi = c;
  }
  if (cross(lo, hi) <= 0) return std::nullopt;
  for (const auto& c : cand)
    if (cross(lo, c) < 0 || cross(c, hi) < 0) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::vector<RatVector> sample_cone(const Cone& cone, std::size_t count, std::uint64_t seed, bool interior_only) {
  std::mt19937_64 rng(seed);
  std::vector<RatVector> out;
  if (auto rays = extreme_rays_2d(cone)) {
    if (!interior_only) {
      out.push_back(rays->first);
      out.push_back(rays->second);
    }
    std::uniform_int_distribution<long> coef(1, 1000);
    while (out.size() < count + (interior_only ? 0 : 2)) {
      Rational a = coef(rng), b = coef(rng);
      out.push_back({a * rays->first[0] + b * rays->second[0], a * rays->first[1] + b * rays->second[1]});
    }
    return out;
  }
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  for (std::size_t attempt = 0; attempt < 200 * count && out.size() < count; ++attempt) {
    RatVector x(cone.ambient_dim);
    for (auto& v : x) v = coord(rng);
    if (interior_only ? cone_contains_interior(cone, x) : cone_contains(cone, x)) out.push_back(std::move(x));
  }
  return out;
}

Relator parse_relator(const Ledger& ledger, const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
    throw WordParseError("relator must have the form <word>=<word>");
  return Relator{parse_word(ledger, text.substr(0, eq)), parse_word(ledger, text.substr(eq + 1))};
}

ValidationReport validate_ledger(const Ledger& ledger, const std::vector<Relator>& relators,
                                 const ValidateOptions& opts) {
  ValidationReport report;
  report.checks = {{"containment"}, {"coverage"}, {"agreement"}, {"inverse"}, {"relators"}};
  check_containment(ledger, opts, report.checks[0]);
  check_coverage(ledger, opts, report.checks[1]);
  check_agreement(ledger, report.checks[2]);
  check_inverses(ledger, opts, report.checks[3]);
  check_relators(ledger, relators, opts, report.checks[4]);
  return report;
}

}  // namespace ntpack
