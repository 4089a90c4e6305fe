#pragma once

#include "ntpack/matrix.hpp"

#include <vector>

namespace ntpack {

/// A linear subspace of Q^d given by a basis of linearly independent vectors.
/// The basis is kept in reduced row-echelon form so two equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<RatVector>& vectors);
  static Subspace full(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<RatVector>& basis() const { return basis_; }

  /// d×k matrix whose columns are the basis vectors.
  RatMatrix basis_matrix() const;
  bool contains(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_;
  std::vector<RatVector> basis_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Zassenhaus: row-reduce [[U, U], [V, 0]]; rows with a zero left half span u ∩ v.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Span of a·w_i over the basis of w.
Subspace apply_to_subspace(const RatMatrix& a, const Subspace& w);

/// Orthogonal projection onto w for the standard inner product: W (WᵀW)⁻¹ Wᵀ.
RatMatrix projection_matrix(const Subspace& w);

}  // namespace ntpack
