#include "properties.hpp"

#include "ntpack/algorithms.hpp"
#include "ntpack/cli.hpp"
#include "ntpack/errors.hpp"
#include "ntpack/subspace.hpp"

namespace proptest {

using namespace ntpack;

namespace {

const Ledger& b3() {
  static const Ledger l = builtin_b3();
  return l;
}

const Ledger& ydelta() {
  static const Ledger l = builtin_ydelta();
  return l;
}

const Ledger& rotated() {
  static const Ledger l = ydelta_with_rotation();
  return l;
}

const Ledger& any_ledger(Gen& g) { return g.coin() ? b3() : ydelta(); }

struct KnownWord {
  const Ledger* ledger;
  const char* text;
};

const std::vector<KnownWord>& pseudo_anosov_words() {
  static const std::vector<KnownWord> words = {
      {&b3(), "s2 s1' s2 s1 s1 s1"}, {&b3(), "s1' s1' s1' s2' s1 s2'"}, {&b3(), "s1 s2'"},
      {&b3(), "s2' s1"},            {&ydelta(), "b' a"},                {&ydelta(), "a b'"},
      {&ydelta(), "a' b"},          {&ydelta(), "b' a b' a"},
  };
  return words;
}

std::vector<RatVector> random_vectors(Gen& g, std::size_t d, std::size_t k) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < k; ++i) {
    RatVector v(d);
    for (auto& x : v) x = g.integer(-5, 5);
    out.push_back(std::move(v));
  }
  return out;
}

bool canonical(const RatMatrix& m) {
  for (const auto& q : m.entries())
    if (!is_canonical(q)) return false;
  return true;
}

std::optional<RealAlgebraic> random_root(Gen& g) {
  Polynomial p = g.int_polynomial(static_cast<int>(g.integer(1, 4)), 12);
  auto roots = isolate_real_roots(p);
  if (roots.empty()) return std::nullopt;
  return roots[static_cast<std::size_t>(g.integer(0, static_cast<long>(roots.size()) - 1))];
}

/// Positive coordinates, with a coordinate zeroed a quarter of the time to land on a face.
PLPoint random_point(Gen& g, const Ledger& l) {
  PLPoint p = g.interior_point(l);
  if (g.integer(0, 3) == 0) p.coords[static_cast<std::size_t>(g.integer(0, static_cast<long>(p.coords.size()) - 1))] = 0;
  return p;
}

PLPoint scaled(const PLPoint& p, const Rational& c) {
  PLPoint q = p;
  for (auto& x : q.coords) x *= c;
  return q;
}

}  // namespace

Ledger ydelta_with_rotation() {
  Ledger l = builtin_ydelta();
  l.name = "ydelta-r";
  l.generators.push_back("r");
  const SignedGen r{2, false}, rinv{2, true};
  for (std::size_t i = 0; i < 3; ++i) {
    l.add_piece(r, (i + 1) % 3, RatMatrix(0, 2), i, RatMatrix::identity(2));
    l.add_piece(rinv, i, RatMatrix(0, 2), (i + 1) % 3, RatMatrix::identity(2));
  }
  return l;
}

std::vector<Property> all_properties() {
  return {
      {"triple_consistency", 500, 1000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         const Ledger& l = any_ledger(g);
         Word w = g.word(l, 50);
         PLPoint p = random_point(g, l);
         note = l.name + " " + to_string(l, w);
         auto ev = basic_computation(l, w, p);
         return ev.triple.matrix * p.coords == ev.end.coords && ev.triple.domain_cell == p.cell &&
                ev.triple.codomain_cell == ev.end.cell;
       }},
      {"inverse_round_trip", 500, 2000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         const Ledger& l = any_ledger(g);
         Word w = g.word(l, 50);
         PLPoint p = g.interior_point(l);
         note = l.name + " " + to_string(l, w);
         PLPoint q = basic_computation(l, w, p, {false, nullptr}).end;
         return basic_computation(l, w.inverse(), q, {false, nullptr}).end == p;
       }},
      {"generator_inverse", 500, 3000,
       [](Gen& g, std::string&) -> std::optional<bool> {
         const Ledger& l = any_ledger(g);
         PLPoint p = g.interior_point(l);
         SignedGen s{static_cast<std::size_t>(g.integer(0, 1)), g.coin()};
         Word w{{s, s.inverted()}};
         return basic_computation(l, w, p).end == p;
       }},
      {"cayley_hamilton", 500, 4000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
         RatMatrix a = g.int_matrix(n, n, 9);
         note = to_string(a);
         Polynomial cp = char_poly(a);
         return cp.degree() == static_cast<int>(n) && cp.leading() == 1 && evaluate_at_matrix(cp, a).is_zero() &&
                cp.coeff(0) == (n % 2 ? -1 : 1) * determinant(a);
       }},
      {"projection_idempotence", 500, 5000,
       [](Gen& g, std::string&) -> std::optional<bool> {
         std::size_t d = static_cast<std::size_t>(g.integer(1, 6));
         Subspace w = Subspace::span(d, random_vectors(g, d, static_cast<std::size_t>(g.integer(0, d))));
         RatMatrix b = projection_matrix(w);
         if (!(b * b == b) || !(b.transpose() == b)) return false;
         for (const auto& v : w.basis())
           if (b * v != v) return false;
         return row_reduce(b).rank == w.dim() && canonical(b);
       }},
      {"sign_at_multiplicativity", 500, 6000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         auto a = random_root(g);
         if (!a) return std::nullopt;
         Polynomial q = g.int_polynomial(static_cast<int>(g.integer(0, 5)), 20);
         Polynomial r = g.int_polynomial(static_cast<int>(g.integer(0, 5)), 20);
         if (g.integer(0, 3) == 0) q = q * a->poly();
         if (g.integer(0, 3) == 0) r = r + a->poly();
         note = to_string(q) + " · " + to_string(r) + " at root of " + to_string(a->poly());
         return sign_at(q * r, *a) == sign_at(q, *a) * sign_at(r, *a);
       }},
      {"foliation_homogeneity", 500, 7000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         const auto& known = pseudo_anosov_words()[static_cast<std::size_t>(g.integer(0, 7))];
         const Ledger& l = *known.ledger;
         Word w = parse_word(l, known.text);
         Rational c = g.positive_rational(1000000, 1000);
         note = std::string(known.text) + " scaled by " + to_string(c);
         auto base = guess_and_check(l, w, 16);
         auto moved = guess_and_check(l, w, 16, scaled(l.basepoint, c));
         return moved.sink.cell == base.sink.cell && compare(moved.eigen.lambda, base.eigen.lambda) == 0 &&
                moved.eigen.vector.entries() == base.eigen.vector.entries() &&
                moved.eigen.lambda.poly() == base.eigen.lambda.poly();
       }},
      {"intersection_dimension", 500, 8000,
       [](Gen& g, std::string&) -> std::optional<bool> {
         std::size_t d = static_cast<std::size_t>(g.integer(1, 5));
         Subspace u = Subspace::span(d, random_vectors(g, d, static_cast<std::size_t>(g.integer(0, 3))));
         Subspace v = Subspace::span(d, random_vectors(g, d, static_cast<std::size_t>(g.integer(0, 3))));
         Subspace meet = subspace_intersect(u, v);
         for (const auto& b : meet.basis())
           if (!u.contains(b) || !v.contains(b)) return false;
         std::vector<RatVector> all = u.basis();
         all.insert(all.end(), v.basis().begin(), v.basis().end());
         std::size_t sum_dim = all.empty() ? 0 : row_reduce(RatMatrix::from_rows(all, d)).rank;
         return meet.dim() == u.dim() + v.dim() - sum_dim && subspace_sum(u, v).dim() == sum_dim;
       }},
      {"mat_mul_associativity", 500, 9000,
       [](Gen& g, std::string&) -> std::optional<bool> {
         auto dim = [&] { return static_cast<std::size_t>(g.integer(1, 5)); };
         std::size_t a = dim(), b = dim(), c = dim(), d = dim();
         RatMatrix x = g.int_matrix(a, b, 50), y = g.int_matrix(b, c, 50), z = g.int_matrix(c, d, 50);
         return (x * y) * z == x * (y * z);
       }},
      {"normalization_audit", 500, 10000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
         RatMatrix a = g.int_matrix(n, n, 7);
         RatMatrix r(n, n);
         for (std::size_t i = 0; i < n; ++i)
           for (std::size_t j = 0; j < n; ++j) r(i, j) = g.rational(20, 12);
         note = to_string(r);
         std::vector<RatMatrix> outputs = {a * r, r * r, r - a, pseudo_inverse(r), row_reduce(r).reduced,
                                           projection_matrix(Subspace::span(n, {r.row(0)}))};
         if (determinant(r) != 0) outputs.push_back(inverse(r));
         for (const auto& v : kernel_basis(r * a)) outputs.push_back(RatMatrix::from_rows({v}, n));
         for (const auto& m : outputs)
           if (!canonical(m)) return false;
         Polynomial cp = char_poly(r);
         for (const auto& q : cp.coefficients())
           if (!is_canonical(q)) return false;
         return is_canonical(determinant(r));
       }},
      {"kernel_multiplies_to_zero", 500, 11000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         std::size_t rank = static_cast<std::size_t>(g.integer(0, 5));
         RatMatrix m = rank == 0 ? RatMatrix(5, 5) : g.int_matrix(5, rank, 6) * g.int_matrix(rank, 5, 6);
         note = to_string(m);
         RowEchelon e = row_reduce(m);
         auto k = kernel_basis(m);
         if (k.size() != 5 - e.rank) return false;
         for (const auto& v : k)
           if (!is_zero(m * v) || !is_zero(e.reduced * v)) return false;
         return true;
       }},
      {"algebraic_roots_certified", 500, 12000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         Polynomial p = g.int_polynomial(static_cast<int>(g.integer(1, 6)), 15);
         if (g.coin()) p = p * p;
         note = to_string(p);
         auto roots = isolate_real_roots(p);
         for (std::size_t i = 0; i < roots.size(); ++i) {
           const auto& a = roots[i];
           if (sign_at(a.poly(), a) != 0 || sign_at(p, a) != 0) return false;
           if (!a.is_rational_point() && sturm_count(a.poly(), a.lo(), a.hi()) != 1) return false;
           if (i > 0 && compare(roots[i - 1], a) >= 0) return false;
         }
         auto lam = largest_real_root_gt(p, 1);
         if (lam && (sign_at(lam->poly(), *lam) != 0 || compare(*lam, Rational(1)) <= 0)) return false;
         return true;
       }},
      {"compare_stable_under_refinement", 500, 13000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         auto a = random_root(g);
         auto b = g.integer(0, 4) == 0 ? a : random_root(g);
         if (!a || !b) return std::nullopt;
         note = to_string(a->poly()) + " vs " + to_string(b->poly());
         int before = compare(*a, *b);
         Rational w(1, g.integer(2, 1000000));
         return compare(refine(*a, w), *b) == before && compare(*a, refine(*b, w * w)) == before &&
                compare(*b, *a) == -before;
       }},
      {"find_piece_coverage", 500, 14000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         const Ledger& l = any_ledger(g);
         PLPoint p = random_point(g, l);
         note = l.name + " " + to_string(p.coords);
         for (std::size_t i = 0; i < l.generators.size(); ++i)
           for (bool inv : {false, true}) {
             SignedGen s{i, inv};
             const Piece& piece = l.pieces[find_piece(l.pieces, s, p)];
             if (!(piece.gen == s) || !cone_contains(piece.domain_cone, p.coords)) return false;
             (void)apply_piece(piece, p);
           }
         return true;
       }},
      {"apply_piece_homogeneity", 500, 15000,
       [](Gen& g, std::string&) -> std::optional<bool> {
         const Ledger& l = any_ledger(g);
         PLPoint p = random_point(g, l);
         Rational c = g.positive_rational(1000, 1000);
         SignedGen s{static_cast<std::size_t>(g.integer(0, 1)), g.coin()};
         const Piece& piece = l.pieces[find_piece(l.pieces, s, p)];
         return apply_piece(piece, scaled(p, c)) == scaled(apply_piece(piece, p), c);
       }},
      {"word_grammar_round_trip", 500, 16000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         const Ledger& l = any_ledger(g);
         Word w = g.word(l, 30);
         std::string text = to_string(l, w);
         note = text;
         std::string caret;
         for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
           if (!caret.empty()) caret += g.coin() ? " " : "  ";
           caret += l.generators[it->index] + (it->inverse ? "^-1" : "");
         }
         return parse_word(l, text).letters == w.letters && parse_word(l, caret).letters == w.letters &&
                to_string(l, parse_word(l, text)) == text && w.inverse().inverse().letters == w.letters;
       }},
      {"json_record_round_trip", 100, 17000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         const auto& known = pseudo_anosov_words()[static_cast<std::size_t>(g.integer(0, 7))];
         int digits = static_cast<int>(g.integer(1, 60));
         note = std::string(known.text) + " digits " + std::to_string(digits);
         auto r = guess_and_check(*known.ledger, parse_word(*known.ledger, known.text), 16);
         std::string first = cli::analysis_record(*known.ledger, known.text, r, digits, 0.0).dump(2);
         std::string again = nlohmann::ordered_json::parse(first).dump(2);
         Ledger reread = ledger_from_json(nlohmann::ordered_json::parse(dump_compact(ledger_to_json(*known.ledger))));
         return first == again && dump_compact(ledger_to_json(reread)) == dump_compact(ledger_to_json(*known.ledger));
       }},
      {"results_verify", 200, 18000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         const Ledger& l = any_ledger(g);
         Word w = g.word(l, 6);
         if (w.empty()) return std::nullopt;
         note = l.name + " " + to_string(l, w);
         std::optional<AnalysisResult> found;
         try {
           found = guess_and_check(l, w, 12);
         } catch (const BudgetExhausted&) {
           return std::nullopt;
         }
         const AnalysisResult& r = *found;
         const AlgVector& v = r.eigen.vector;
         for (std::size_t i = 0; i < v.dim(); ++i)
           if (v.sign(i) < 0) return false;
         AlgVector dv = r.sink.d_matrix * v;
         return compare(r.eigen.lambda, Rational(1)) > 0 && equal_at_point(dv, v.scaled(Polynomial::x())) &&
                verify_pl_eigenvector(l, w, r.eigen.lambda, v, r.sink.cell);
       }},
      {"q_ladder_closed_form", 100, 20000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         int xi = static_cast<int>(g.integer(1, 100));
         int genus = static_cast<int>(g.integer(0, (xi + 3) / 3));
         int punctures = xi + 3 - 3 * genus;
         note = "g=" + std::to_string(genus) + " p=" + std::to_string(punctures);
         QConstants q = compute_Q(genus, punctures);
         return q.xi == xi && q.Q == q_closed_form(xi);
       }},
      {"conjugacy_invariance", 200, 19000,
       [](Gen& g, std::string& note) -> std::optional<bool> {
         const Ledger& l = rotated();
         Word base = parse_word(l, g.coin() ? "b' a" : "a' b");
         Word u = g.word(l, 4);
         Word conj;
         conj.letters = u.inverse().letters;
         conj.letters.insert(conj.letters.end(), base.letters.begin(), base.letters.end());
         conj.letters.insert(conj.letters.end(), u.letters.begin(), u.letters.end());
         note = to_string(l, conj);
         auto a = guess_and_check(l, base, 16);
         auto b = guess_and_check(l, conj, 64);
         return compare(a.eigen.lambda, b.eigen.lambda) == 0;
       }},
  };
}

}  // namespace proptest
