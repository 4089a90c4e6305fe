#include "ntpack/cone.hpp"

#include "ntpack/errors.hpp"

#include <algorithm>

namespace ntpack {

namespace {

RatMatrix stack(const RatMatrix& a, const RatMatrix& b, std::size_t cols) {
  RatMatrix out(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

void check_dim(const Cone& cone, std::size_t dim) {
  if (cone.ambient_dim != dim) throw DimensionMismatch("point dimension differs from cone dimension");
}

template <class V>
bool contains_impl(const Cone& cone, const V& x, bool strict) {
  check_dim(cone, x.size());
  for (int s : row_signs(cone.equalities, x))
    if (s != 0) return false;
  for (int s : row_signs(cone.inequalities, x))
    if (s < 0 || (strict && s == 0)) return false;
  return true;
}

template <class P>
std::size_t find_impl(const std::vector<Piece>& pieces, SignedGen gen, const P& p) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& piece = pieces[i];
    if (piece.gen == gen && piece.domain_cell == p.cell && cone_contains(piece.domain_cone, p.coords)) return i;
  }
  throw NoPieceFound("no piece of generator " + std::to_string(gen.index) + (gen.inverse ? "'" : "") +
                     " contains the point in cell " + std::to_string(p.cell));
}

}  // namespace

Cone Cone::orthant(std::size_t dim) {
  return Cone{dim, RatMatrix::identity(dim), RatMatrix(0, dim)};
}

Cone Cone::restricted(const RatMatrix& extra) const {
  if (extra.rows() && extra.cols() != ambient_dim) throw DimensionMismatch("restricting rows have the wrong width");
  return Cone{ambient_dim, stack(inequalities, extra, ambient_dim), equalities};
}

std::vector<int> row_signs(const RatMatrix& rows, std::span<const Rational> x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < rows.rows(); ++i) out.push_back(sgn(dot(rows.row_view(i), x)));
  return out;
}

std::vector<int> row_signs(const RatMatrix& rows, const AlgVector& x) {
  if (rows.rows() == 0) return {};
  AlgVector hx = rows * x;
  std::vector<int> out;
  for (std::size_t i = 0; i < hx.dim(); ++i) out.push_back(hx.sign(i));
  return out;
}

bool cone_contains(const Cone& cone, std::span<const Rational> x) { return contains_impl(cone, x, false); }

bool cone_contains(const Cone& cone, const AlgVector& x) {
  check_dim(cone, x.dim());
  for (int s : row_signs(cone.equalities, x))
    if (s != 0) return false;
  for (int s : row_signs(cone.inequalities, x))
    if (s < 0) return false;
  return true;
}

bool cone_contains_interior(const Cone& cone, std::span<const Rational> x) { return contains_impl(cone, x, true); }

bool cone_contains_interior(const Cone& cone, const AlgVector& x) {
  check_dim(cone, x.dim());
  for (int s : row_signs(cone.equalities, x))
    if (s != 0) return false;
  for (int s : row_signs(cone.inequalities, x))
    if (s <= 0) return false;
  return true;
}

std::size_t find_piece(const std::vector<Piece>& pieces, SignedGen gen, const PLPoint& p) {
  return find_impl(pieces, gen, p);
}

std::size_t find_piece(const std::vector<Piece>& pieces, SignedGen gen, const AlgPoint& p) {
  return find_impl(pieces, gen, p);
}

PLPoint apply_piece(const Piece& piece, const PLPoint& p) {
  PLPoint out{piece.codomain_cell, piece.matrix * p.coords};
  if (!cone_contains(piece.codomain_cone, out.coords))
    throw ImageOutsideCodomain("piece maps " + to_string(p.coords) + " to " + to_string(out.coords) +
                               " outside its codomain cell");
  return out;
}

AlgPoint apply_piece(const Piece& piece, const AlgPoint& p) {
  AlgPoint out{piece.codomain_cell, piece.matrix * p.coords};
  if (!cone_contains(piece.codomain_cone, out.coords))
    throw ImageOutsideCodomain("piece maps an algebraic point outside its codomain cell");
  return out;
}

}  // namespace ntpack
