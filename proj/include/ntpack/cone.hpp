#pragma once

#include "ntpack/algebraic.hpp"
#include "ntpack/matrix.hpp"

#include <string>
#include <vector>

namespace ntpack {

/// {x : H x >= 0, G x = 0} with integer rows.
struct Cone {
  std::size_t ambient_dim = 0;
  RatMatrix inequalities;  // rows × ambient_dim
  RatMatrix equalities;

  static Cone orthant(std::size_t dim);
  /// This cone with extra inequality rows appended.
  Cone restricted(const RatMatrix& extra) const;

  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Signs of every inequality row and equality row at x.
std::vector<int> row_signs(const RatMatrix& rows, std::span<const Rational> x);
std::vector<int> row_signs(const RatMatrix& rows, const AlgVector& x);

bool cone_contains(const Cone& cone, std::span<const Rational> x);
bool cone_contains(const Cone& cone, const AlgVector& x);
bool cone_contains_interior(const Cone& cone, std::span<const Rational> x);
bool cone_contains_interior(const Cone& cone, const AlgVector& x);

struct Cell {
  std::size_t id = 0;
  std::string name;
  Cone cone;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct SignedGen {
  std::size_t index = 0;
  bool inverse = false;

  SignedGen inverted() const { return {index, !inverse}; }
  friend bool operator==(const SignedGen&, const SignedGen&) = default;
};

struct Piece {
  SignedGen gen;
  std::size_t domain_cell = 0;
  RatMatrix extra_inequalities;  // slices the domain cell, possibly with zero rows
  Cone domain_cone;              // domain cell cone restricted by the extra rows
  std::size_t codomain_cell = 0;
  Cone codomain_cone;
  RatMatrix matrix;

  friend bool operator==(const Piece&, const Piece&) = default;
};

template <class Coords>
struct Point {
  std::size_t cell = 0;
  Coords coords;
};

using PLPoint = Point<RatVector>;
using AlgPoint = Point<AlgVector>;

inline bool operator==(const PLPoint& a, const PLPoint& b) { return a.cell == b.cell && a.coords == b.coords; }

struct Triple {
  RatMatrix matrix;
  std::size_t domain_cell = 0;
  std::size_t codomain_cell = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Index of the first piece of gen whose domain contains p. Throws NoPieceFound.
std::size_t find_piece(const std::vector<Piece>& pieces, SignedGen gen, const PLPoint& p);
std::size_t find_piece(const std::vector<Piece>& pieces, SignedGen gen, const AlgPoint& p);

/// matrix · coords in the codomain cell. Throws ImageOutsideCodomain.
PLPoint apply_piece(const Piece& piece, const PLPoint& p);
AlgPoint apply_piece(const Piece& piece, const AlgPoint& p);

}  // namespace ntpack
