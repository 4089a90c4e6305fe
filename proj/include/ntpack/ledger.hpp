#pragma once

#include "ntpack/cone.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ntpack {

/// Identifies the face cell_a ∩ rowspace(map) of cell_a with its image map·x in cell_b.
struct Gluing {
  std::size_t cell_a = 0;
  std::size_t cell_b = 0;
  RatMatrix map;

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

struct SurfaceType {
  int genus = 0;
  int punctures = 0;

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

struct Ledger {
  std::string name;
  std::optional<SurfaceType> surface;
  std::vector<std::string> generators;
  std::vector<Cell> cells;  // pieces and points refer to cells by position
  std::vector<Gluing> gluings;
  std::vector<Piece> pieces;  // order is the tie-break order
  PLPoint basepoint;
  std::optional<PLPoint> vertex_basepoint;

  std::optional<std::size_t> cell_by_name(const std::string& name) const;
  std::optional<std::size_t> generator_by_name(const std::string& name) const;
  std::string generator_name(SignedGen g) const;
  std::size_t cell_dim(std::size_t cell) const { return cells.at(cell).cone.ambient_dim; }

  /// "V2" when the piece covers its whole cell, "V1,2" for the second slice of V1.
  std::string piece_label(std::size_t piece) const;

  /// Appends a piece, deriving its domain and codomain cones from the cells.
  void add_piece(SignedGen gen, std::size_t domain, RatMatrix extra, std::size_t codomain, RatMatrix matrix);

  friend bool operator==(const Ledger&, const Ledger&) = default;
};

Ledger builtin_ydelta();
Ledger builtin_b3();

/// Built-in name ("b3", "ydelta") or a path to a ledger file.
Ledger resolve_ledger(const std::string& name_or_path);

nlohmann::ordered_json ledger_to_json(const Ledger& ledger);
/// Throws LedgerParseError naming the offending field.
Ledger ledger_from_json(const nlohmann::json& doc);
Ledger ledger_from_json(const nlohmann::ordered_json& doc);

/// Pretty JSON with arrays of scalars kept on one line.
std::string dump_compact(const nlohmann::ordered_json& doc);

Ledger load_ledger(const std::filesystem::path& path);
void save_ledger(const Ledger& ledger, const std::filesystem::path& path);

/// Equal as points of the complex: same cell and coordinates, or related by one gluing.
bool points_equal(const Ledger& ledger, const PLPoint& p, const PLPoint& q);
bool points_equal(const Ledger& ledger, const AlgPoint& p, const AlgPoint& q);

}  // namespace ntpack
