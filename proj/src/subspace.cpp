#include "ntpack/subspace.hpp"

#include "ntpack/errors.hpp"

namespace ntpack {

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RatVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  RowEchelon e = row_reduce(RatMatrix::from_rows(vectors, ambient_dim));
  for (std::size_t i = 0; i < e.rank; ++i) s.basis_.push_back(e.reduced.row(i));
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<RatVector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RatVector e(ambient_dim);
    e[i] = 1;
    units.push_back(std::move(e));
  }
  return span(ambient_dim, units);
}

RatMatrix Subspace::basis_matrix() const { return RatMatrix::from_columns(basis_, ambient_dim_); }

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("subspace membership");
  if (ntpack::is_zero(v)) return true;
  std::vector<RatVector> rows = basis_;
  rows.emplace_back(v.begin(), v.end());
  return row_reduce(RatMatrix::from_rows(rows, ambient_dim_)).rank == basis_.size();
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  std::vector<RatVector> rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
  const std::size_t d = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(d);
  RatMatrix z(u.dim() + v.dim(), 2 * d);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < d; ++j) z(i, j) = z(i, d + j) = u.basis()[i][j];
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < d; ++j) z(u.dim() + i, j) = v.basis()[i][j];
  RowEchelon e = row_reduce(z);
  std::vector<RatVector> meet;
  for (std::size_t i = 0; i < e.rank; ++i) {
    if (e.pivots[i] < d) continue;
    RatVector w(d);
    for (std::size_t j = 0; j < d; ++j) w[j] = e.reduced(i, d + j);
    meet.push_back(std::move(w));
  }
  return Subspace::span(d, meet);
}

Subspace apply_to_subspace(const RatMatrix& a, const Subspace& w) {
  if (a.cols() != w.ambient_dim()) throw DimensionMismatch("apply_to_subspace");
  std::vector<RatVector> images;
  for (const auto& b : w.basis()) images.push_back(a * b);
  return Subspace::span(a.rows(), images);
}

RatMatrix projection_matrix(const Subspace& w) {
  const std::size_t d = w.ambient_dim();
  if (w.is_zero()) return RatMatrix(d, d);
  RatMatrix basis = w.basis_matrix();
  RatMatrix bt = basis.transpose();
  return basis * inverse(bt * basis) * bt;
}

}  // namespace ntpack
