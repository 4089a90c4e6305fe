#include "ntpack/algorithms.hpp"

#include "ntpack/errors.hpp"

namespace ntpack {

namespace {

template <class P>
Evaluation<P> evaluate(const Ledger& ledger, const Word& w, const P& start, bool track,
                       std::vector<TraceStep>* trace) {
  if (start.cell >= ledger.cells.size()) throw std::invalid_argument("start point names an unknown cell");
  const std::size_t d = ledger.cell_dim(start.cell);
  Evaluation<P> out{start, Triple{RatMatrix::identity(d), start.cell, start.cell}};
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const std::size_t k = find_piece(ledger.pieces, w.letters[i], out.end);
    const Piece& piece = ledger.pieces[k];
    P next = apply_piece(piece, out.end);
    if constexpr (std::is_same_v<P, PLPoint>) {
      if (trace) trace->push_back(TraceStep{i + 1, out.end, k, w.letters[i], next});
    }
    if (track) out.triple.matrix = piece.matrix * out.triple.matrix;
    out.end = std::move(next);
  }
  out.triple.codomain_cell = out.end.cell;
  return out;
}

std::vector<RatVector> equality_kernel(const Cone& c) {
  if (c.equalities.rows() == 0) return Subspace::full(c.ambient_dim).basis();
  return kernel_basis(c.equalities);
}

}  // namespace

Evaluation<PLPoint> basic_computation(const Ledger& ledger, const Word& w, const PLPoint& start,
                                      const EvalOptions& opts) {
  return evaluate(ledger, w, start, opts.track_matrix, opts.trace);
}

Evaluation<AlgPoint> basic_computation(const Ledger& ledger, const Word& w, const AlgPoint& start,
                                       bool track_matrix) {
  return evaluate(ledger, w, start, track_matrix, nullptr);
}

SinkPackage sink_package(const Triple& triple, const Ledger& ledger) {
  const std::size_t dom = triple.domain_cell, cod = triple.codomain_cell;
  const std::size_t d = ledger.cell_dim(dom);
  Subspace w = Subspace::span(d, equality_kernel(ledger.cells[dom].cone));
  RatMatrix a = triple.matrix;

  if (dom != cod) {
    const Gluing* glue = nullptr;
    bool forward = true;
    for (const auto& g : ledger.gluings) {
      if (g.cell_a == dom && g.cell_b == cod) {
        glue = &g;
        break;
      }
      if (g.cell_a == cod && g.cell_b == dom) {
        glue = &g;
        forward = false;
        break;
      }
    }
    if (!glue) throw ZeroInvariantSubspace("domain and codomain cells share no glued face");
    Subspace face;
    if (forward) {
      face = Subspace::span(d, [&] {
        std::vector<RatVector> rows;
        for (std::size_t i = 0; i < glue->map.rows(); ++i) rows.push_back(glue->map.row(i));
        return rows;
      }());
      a = pseudo_inverse(glue->map) * a;
    } else {
      std::vector<RatVector> cols;
      for (std::size_t j = 0; j < glue->map.cols(); ++j) cols.push_back(glue->map.column(j));
      face = Subspace::span(d, cols);
      a = glue->map * a;
    }
    w = subspace_intersect(w, face);
  }

  for (;;) {
    Subspace next = subspace_intersect(apply_to_subspace(a, w), w);
    if (next == w) break;
    w = std::move(next);
  }
  if (w.is_zero()) throw ZeroInvariantSubspace("maximal invariant subspace is zero");
  return SinkPackage{dom, a * projection_matrix(w), w};
}

std::optional<Eigenpair> spectral_extract(const SinkPackage& pkg) {
  Polynomial cp = char_poly(pkg.d_matrix);
  Polynomial def = square_free_part(cp);
  while (def.degree() >= 1 && def.coeff(0) == 0) def = divmod(def, Polynomial::x()).first;
  auto lambda = largest_real_root_gt(def, 1);
  if (!lambda) return std::nullopt;

  SymbolicKernel ker = symbolic_kernel(pkg.d_matrix, *lambda);
  for (const auto& b : ker.basis) {
    AlgVector v(b, ker.point);
    std::size_t lead = 0;
    while (lead < v.dim() && v.sign(lead) == 0) ++lead;
    if (lead == v.dim()) continue;
    Polynomial m = v.modulus();
    Polynomial g = gcd(v[lead], m);
    if (g.degree() >= 1) v = v.over_factor(divmod(m, g).first);
    v = v.scaled(*inverse_mod(v[lead], v.modulus()));
    bool nonnegative = true;
    for (std::size_t i = 0; i < v.dim() && nonnegative; ++i) nonnegative = v.sign(i) >= 0;
    if (nonnegative) return Eigenpair{cp, v.point(), v};
  }
  return std::nullopt;
}

bool verify_pl_eigenvector(const Ledger& ledger, const Word& w, const RealAlgebraic& lambda, const AlgVector& v,
                           std::size_t cell) {
  if (!(lambda.poly() == v.modulus())) throw std::invalid_argument("eigenvalue and eigenvector use different moduli");
  if (cell >= ledger.cells.size() || !cone_contains(ledger.cells[cell].cone, v)) return false;
  try {
    AlgPoint end = basic_computation(ledger, w, AlgPoint{cell, v}, false).end;
    return points_equal(ledger, end, AlgPoint{cell, v.scaled(Polynomial::x())});
  } catch (const NoPieceFound&) {
    return false;
  }
}

Integer q_closed_form(const Integer& xi) { return 2464 * xi * xi + 96 * xi + 1; }

QConstants compute_Q(int genus, int punctures) {
  QConstants c;
  c.xi = 3 * genus - 3 + punctures;
  if (c.xi < 1) throw std::invalid_argument("surface complexity 3g-3+p must be at least 1");
  const Integer D = 1, E = 14;
  c.K = 4 * c.xi;
  c.Qcurve = 2 * c.K * c.K;
  c.Qtrack = E * c.Qcurve;
  c.Qforce = c.Qtrack + (2 * c.K + 6) * 2 * c.K;
  c.Qfit = c.Qforce + (E + 3) * c.Qcurve;
  c.Qdt = (D + 1) * c.Qtrack;
  c.Q = c.Qforce + c.Qfit + c.Qdt + 1;
  return c;
}

namespace {

std::optional<AnalysisResult> certify(const Ledger& ledger, const Word& w, const PLPoint& at, std::size_t k,
                                      const char* strategy) {
  Triple t = basic_computation(ledger, w, at).triple;
  SinkPackage pkg;
  try {
    pkg = sink_package(t, ledger);
  } catch (const ZeroInvariantSubspace&) {
    return std::nullopt;
  }
  auto eigen = spectral_extract(pkg);
  if (!eigen || !verify_pl_eigenvector(ledger, w, eigen->lambda, eigen->vector, pkg.cell)) return std::nullopt;
  return AnalysisResult{std::move(pkg), std::move(*eigen), k, strategy};
}

}  // namespace

AnalysisResult guess_and_check(const Ledger& ledger, const Word& w, std::size_t max_k,
                               const std::optional<PLPoint>& start) {
  if (max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  PLPoint c = start.value_or(ledger.basepoint);
  const EvalOptions untracked{false, nullptr};
  for (std::size_t k = 1; k <= max_k; ++k) {
    c = basic_computation(ledger, w, c, untracked).end;
    if (auto r = certify(ledger, w, c, k, "guess")) return std::move(*r);
  }
  throw BudgetExhausted("no PL-eigenvector certified within " + std::to_string(max_k) + " iterations");
}

AnalysisResult main_algorithm(const Ledger& ledger, const Word& w, const MainOptions& opts) {
  long q = 0;
  if (opts.q_override) {
    q = *opts.q_override;
    if (q < 1) throw std::invalid_argument("Q must be positive");
  } else {
    if (!ledger.surface) throw std::invalid_argument("ledger has no surface type; supply Q explicitly");
    Integer big = compute_Q(ledger.surface->genus, ledger.surface->punctures).Q;
    if (!big.fits_slong_p()) throw BudgetExhausted("Q does not fit the letter budget");
    q = big.get_si();
  }
  if (w.empty()) throw AnalysisFailed("the empty word has no sink package");
  if (static_cast<unsigned long>(q) > opts.letter_budget / w.size())
    throw BudgetExhausted("Q·|w| = " + std::to_string(q) + "·" + std::to_string(w.size()) +
                          " exceeds the letter budget " + std::to_string(opts.letter_budget));

  PLPoint c = opts.start.value_or(ledger.vertex_basepoint.value_or(ledger.basepoint));
  const EvalOptions untracked{false, nullptr};
  for (long i = 0; i < q; ++i) c = basic_computation(ledger, w, c, untracked).end;
  if (auto r = certify(ledger, w, c, static_cast<std::size_t>(q), "main-q")) return std::move(*r);
  throw AnalysisFailed("f^Q(c) did not yield a certified sink package");
}

}  // namespace ntpack
