#pragma once

#include "ntpack/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ntpack {

using RatVector = std::vector<Rational>;

RatVector make_vector(std::initializer_list<long> entries);
std::string to_string(std::span<const Rational> v);

/// Dense row-major matrix over the rationals. Every operation is exact.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Row-by-row integer literal, e.g. {{0, 1}, {1, 1}}. Rows must have equal length.
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  std::span<const Rational> row_view(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  RatMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_integral() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<Rational>& entries() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);
RatVector operator*(const RatMatrix& a, std::span<const Rational> x);

/// Exact product; throws DimensionMismatch when a.cols != b.rows.
inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) { return a * b; }

std::string to_string(const RatMatrix& m);

struct RowEchelon {
  RatMatrix reduced;               // reduced row-echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_reduce(const RatMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column (standard RREF construction).
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Inverse of a nonsingular square matrix; throws SingularMatrix.
RatMatrix inverse(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

/// Moore–Penrose pseudo-inverse via a full-rank factorization m = C R.
RatMatrix pseudo_inverse(const RatMatrix& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);

}  // namespace ntpack
