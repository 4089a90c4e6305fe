#include "ntpack/ledger.hpp"

#include "ntpack/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ntpack {

using nlohmann::json;

std::optional<std::size_t> Ledger::cell_by_name(const std::string& n) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].name == n) return i;
  return std::nullopt;
}

std::optional<std::size_t> Ledger::generator_by_name(const std::string& n) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == n) return i;
  return std::nullopt;
}

std::string Ledger::generator_name(SignedGen g) const {
  return generators.at(g.index) + (g.inverse ? "'" : "");
}

std::string Ledger::piece_label(std::size_t index) const {
  const Piece& p = pieces.at(index);
  std::size_t ordinal = 0, total = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].gen == p.gen && pieces[i].domain_cell == p.domain_cell) {
      ++total;
      if (i <= index) ++ordinal;
    }
  }
  const std::string& cell = cells.at(p.domain_cell).name;
  return total == 1 ? cell : cell + "," + std::to_string(ordinal);
}

void Ledger::add_piece(SignedGen gen, std::size_t domain, RatMatrix extra, std::size_t codomain, RatMatrix matrix) {
  Piece p;
  p.gen = gen;
  p.domain_cell = domain;
  if (extra.cols() == 0) extra = RatMatrix(0, cell_dim(domain));
  p.domain_cone = cells.at(domain).cone.restricted(extra);
  p.extra_inequalities = std::move(extra);
  p.codomain_cell = codomain;
  p.codomain_cone = cells.at(codomain).cone;
  if (matrix.rows() != cell_dim(codomain) || matrix.cols() != cell_dim(domain))
    throw DimensionMismatch("piece matrix does not match its cells");
  p.matrix = std::move(matrix);
  pieces.push_back(std::move(p));
}

namespace {

const RatMatrix kBelowDiagonal{{1, -1}};  // y <= x
const RatMatrix kAboveDiagonal{{-1, 1}};  // x <= y
const RatMatrix kWhole(0, 2);

struct PieceRow {
  const char* gen;
  int domain;  // 1-based cell number
  const RatMatrix* slice;
  int codomain;
  RatMatrix matrix;
};

Ledger planar_ledger(std::string name, std::vector<std::string> gens, int cells,
                     const std::vector<PieceRow>& rows) {
  Ledger l;
  l.name = std::move(name);
  l.generators = std::move(gens);
  for (int i = 1; i <= cells; ++i)
    l.cells.push_back(Cell{static_cast<std::size_t>(i), "V" + std::to_string(i), Cone::orthant(2)});
  for (const auto& r : rows) {
    std::string g = r.gen;
    bool inv = g.back() == '\'';
    if (inv) g.pop_back();
    l.add_piece({*l.generator_by_name(g), inv}, r.domain - 1, *r.slice, r.codomain - 1, r.matrix);
  }
  return l;
}

}  // namespace

Ledger builtin_ydelta() {
  const RatMatrix a11{{1, -1}, {0, 1}}, a12{{1, 0}, {-1, 1}}, a2{{1, 1}, {0, 1}}, a3{{1, 0}, {1, 1}};
  Ledger l = planar_ledger("ydelta", {"a", "b"}, 3,
                           {
                               {"a", 1, &kBelowDiagonal, 1, a11},
                               {"a", 1, &kAboveDiagonal, 2, a12},
                               {"a", 2, &kWhole, 3, a2},
                               {"a", 3, &kWhole, 3, a3},
                               {"a'", 1, &kWhole, 1, a2},
                               {"a'", 2, &kWhole, 1, a3},
                               {"a'", 3, &kBelowDiagonal, 2, a11},
                               {"a'", 3, &kAboveDiagonal, 3, a12},
                               {"b", 3, &kBelowDiagonal, 3, a11},
                               {"b", 3, &kAboveDiagonal, 1, a12},
                               {"b", 1, &kWhole, 2, a2},
                               {"b", 2, &kWhole, 2, a3},
                               {"b'", 3, &kWhole, 3, a2},
                               {"b'", 1, &kWhole, 3, a3},
                               {"b'", 2, &kBelowDiagonal, 1, a11},
                               {"b'", 2, &kAboveDiagonal, 2, a12},
                           });
  l.surface = SurfaceType{0, 4};
  for (std::size_t i = 0; i < 3; ++i) l.gluings.push_back({i, (i + 1) % 3, RatMatrix{{0, 1}, {0, 0}}});
  l.basepoint = PLPoint{0, make_vector({1, 0})};
  return l;
}

Ledger builtin_b3() {
  const RatMatrix cut_left{{-1, 1}, {1, 0}}, swap{{0, 1}, {1, 0}}, fib{{0, 1}, {1, 1}};
  const RatMatrix shear{{1, 1}, {0, 1}}, unshear{{1, -1}, {0, 1}};
  Ledger l = planar_ledger("b3", {"s1", "s2"}, 4,
                           {
                               {"s1", 1, &kBelowDiagonal, 1, unshear},
                               {"s1", 1, &kAboveDiagonal, 2, cut_left},
                               {"s1", 2, &kWhole, 3, swap},
                               {"s1", 3, &kWhole, 4, fib},
                               {"s1", 4, &kWhole, 4, shear},
                               {"s1'", 1, &kWhole, 1, shear},
                               {"s1'", 2, &kWhole, 1, fib},
                               {"s1'", 3, &kWhole, 2, swap},
                               {"s1'", 4, &kBelowDiagonal, 4, unshear},
                               {"s1'", 4, &kAboveDiagonal, 3, cut_left},
                               {"s2", 1, &kWhole, 2, fib},
                               {"s2", 2, &kWhole, 2, shear},
                               {"s2", 3, &kBelowDiagonal, 3, unshear},
                               {"s2", 3, &kAboveDiagonal, 4, cut_left},
                               {"s2", 4, &kWhole, 1, swap},
                               {"s2'", 1, &kWhole, 4, swap},
                               {"s2'", 2, &kBelowDiagonal, 2, unshear},
                               {"s2'", 2, &kAboveDiagonal, 1, cut_left},
                               {"s2'", 3, &kWhole, 3, shear},
                               {"s2'", 4, &kWhole, 3, fib},
                           });
  l.surface = SurfaceType{0, 4};
  const RatMatrix keep_y{{0, 0}, {0, 1}}, keep_x{{1, 0}, {0, 0}};
  l.gluings = {{0, 1, keep_y}, {1, 2, keep_x}, {2, 3, keep_y}, {3, 0, keep_x}};
  l.basepoint = PLPoint{0, make_vector({1, 2})};
  l.vertex_basepoint = PLPoint{0, make_vector({1, 0})};
  return l;
}

Ledger resolve_ledger(const std::string& name_or_path) {
  if (name_or_path == "b3") return builtin_b3();
  if (name_or_path == "ydelta") return builtin_ydelta();
  return load_ledger(name_or_path);
}

namespace {

using ojson = nlohmann::ordered_json;

ojson integer_rows(const RatMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& z = m(i, j).get_num();
      if (z.fits_slong_p()) {
        row.push_back(z.get_si());
      } else {
        row.push_back(z.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson point_json(const Ledger& l, const PLPoint& p) {
  ojson coords = ojson::array();
  for (const auto& c : p.coords) coords.push_back(to_string(c));
  return {{"cell", l.cells.at(p.cell).id}, {"coords", coords}};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw LedgerParseError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + "." + key, "missing field");
  return *it;
}

Integer parse_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.dump());
  if (v.is_string()) {
    Rational q;
    try {
      q = parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(where, "not an integer");
    }
    if (is_integer(q)) return q.get_num();
  }
  fail(where, "not an integer");
}

RatMatrix parse_rows(const json& v, std::size_t cols, const std::string& where, std::optional<std::size_t> rows) {
  if (!v.is_array()) fail(where, "expected an array of rows");
  if (rows && v.size() != *rows)
    fail(where, "dimension mismatch: expected " + std::to_string(*rows) + " rows, got " + std::to_string(v.size()));
  RatMatrix m(v.size(), cols);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) fail(w, "expected an array");
    if (v[i].size() != cols)
      fail(w, "dimension mismatch: expected " + std::to_string(cols) + " entries, got " + std::to_string(v[i].size()));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_integer(v[i][j], w + "[" + std::to_string(j) + "]");
  }
  return m;
}

std::size_t cell_ref(const Ledger& l, const json& v, const std::string& where) {
  for (std::size_t i = 0; i < l.cells.size(); ++i) {
    if ((v.is_number_integer() && v.get<long long>() == static_cast<long long>(l.cells[i].id)) ||
        (v.is_string() && v.get<std::string>() == l.cells[i].name))
      return i;
  }
  fail(where, "unknown cell " + v.dump());
}

PLPoint parse_point(const Ledger& l, const json& v, const std::string& where) {
  PLPoint p;
  p.cell = cell_ref(l, field(v, "cell", where), where + ".cell");
  const json& coords = field(v, "coords", where);
  if (!coords.is_array() || coords.size() != l.cell_dim(p.cell))
    fail(where + ".coords", "dimension mismatch with cell " + l.cells[p.cell].name);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string w = where + ".coords[" + std::to_string(i) + "]";
    try {
      if (coords[i].is_number_integer()) {
        p.coords.emplace_back(Integer(coords[i].dump()));
      } else if (coords[i].is_string()) {
        p.coords.push_back(parse_rational(coords[i].get<std::string>()));
      } else {
        fail(w, "expected \"p/q\"");
      }
    } catch (const std::invalid_argument& e) {
      fail(w, e.what());
    }
  }
  if (!cone_contains(l.cells[p.cell].cone, p.coords)) fail(where, "point lies outside its cell");
  return p;
}

}  // namespace

ojson ledger_to_json(const Ledger& l) {
  ojson doc;
  doc["format_version"] = 1;
  doc["name"] = l.name;
  if (l.surface) doc["surface"] = {{"genus", l.surface->genus}, {"punctures", l.surface->punctures}};
  doc["generators"] = l.generators;
  ojson cells = ojson::array();
  for (const auto& c : l.cells)
    cells.push_back({{"id", c.id},
                     {"name", c.name},
                     {"dim", c.cone.ambient_dim},
                     {"inequalities", integer_rows(c.cone.inequalities)},
                     {"equalities", integer_rows(c.cone.equalities)}});
  doc["cells"] = cells;
  ojson gluings = ojson::array();
  for (const auto& g : l.gluings)
    gluings.push_back(
        {{"cell_a", l.cells[g.cell_a].id}, {"cell_b", l.cells[g.cell_b].id}, {"matrix", integer_rows(g.map)}});
  doc["gluings"] = gluings;
  ojson pieces = ojson::array();
  for (const auto& p : l.pieces)
    pieces.push_back({{"generator", l.generators[p.gen.index]},
                      {"inverse", p.gen.inverse},
                      {"domain_cell", l.cells[p.domain_cell].id},
                      {"domain_inequalities", integer_rows(p.extra_inequalities)},
                      {"codomain_cell", l.cells[p.codomain_cell].id},
                      {"matrix", integer_rows(p.matrix)}});
  doc["pieces"] = pieces;
  doc["basepoint"] = point_json(l, l.basepoint);
  if (l.vertex_basepoint) doc["vertex_basepoint"] = point_json(l, *l.vertex_basepoint);
  return doc;
}

Ledger ledger_from_json(const json& doc) {
  Ledger l;
  const json& version = field(doc, "format_version", "ledger");
  if (version != 1) fail("format_version", "unsupported version " + version.dump());
  const json& name = field(doc, "name", "ledger");
  if (!name.is_string()) fail("name", "expected a string");
  l.name = name.get<std::string>();

  if (auto it = doc.find("surface"); it != doc.end()) {
    const json& g = field(*it, "genus", "surface");
    const json& p = field(*it, "punctures", "surface");
    if (!g.is_number_integer() || !p.is_number_integer() || g.get<int>() < 0 || p.get<int>() < 0)
      fail("surface", "genus and punctures must be nonnegative integers");
    l.surface = SurfaceType{g.get<int>(), p.get<int>()};
  }

  const json& gens = field(doc, "generators", "ledger");
  if (!gens.is_array() || gens.empty()) fail("generators", "expected a nonempty array of names");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string w = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_string()) fail(w, "expected a string");
    std::string n = gens[i].get<std::string>();
    if (n.empty() || n.find_first_of(" \t\n'^=") != std::string::npos) fail(w, "invalid generator name");
    if (l.generator_by_name(n)) fail(w, "duplicate generator " + n);
    l.generators.push_back(std::move(n));
  }

  const json& cells = field(doc, "cells", "ledger");
  if (!cells.is_array() || cells.empty()) fail("cells", "expected a nonempty array");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string w = "cells[" + std::to_string(i) + "]";
    const json& id = field(cells[i], "id", w);
    const json& cname = field(cells[i], "name", w);
    const json& dim = field(cells[i], "dim", w);
    if (!id.is_number_integer() || id.get<long long>() < 0) fail(w + ".id", "expected a nonnegative integer");
    if (!cname.is_string()) fail(w + ".name", "expected a string");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) fail(w + ".dim", "expected a positive integer");
    Cell c;
    c.id = id.get<std::size_t>();
    c.name = cname.get<std::string>();
    for (const auto& other : l.cells)
      if (other.id == c.id || other.name == c.name) fail(w, "duplicate cell id or name");
    const std::size_t d = dim.get<std::size_t>();
    c.cone.ambient_dim = d;
    c.cone.inequalities = parse_rows(field(cells[i], "inequalities", w), d, w + ".inequalities", std::nullopt);
    c.cone.equalities = cells[i].contains("equalities")
                            ? parse_rows(cells[i]["equalities"], d, w + ".equalities", std::nullopt)
                            : RatMatrix(0, d);
    l.cells.push_back(std::move(c));
  }

  if (auto it = doc.find("gluings"); it != doc.end()) {
    if (!it->is_array()) fail("gluings", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string w = "gluings[" + std::to_string(i) + "]";
      const json& g = (*it)[i];
      Gluing gl;
      gl.cell_a = cell_ref(l, field(g, "cell_a", w), w + ".cell_a");
      gl.cell_b = cell_ref(l, field(g, "cell_b", w), w + ".cell_b");
      gl.map = parse_rows(field(g, "matrix", w), l.cell_dim(gl.cell_a), w + ".matrix", l.cell_dim(gl.cell_b));
      l.gluings.push_back(std::move(gl));
    }
  }

  const json& pieces = field(doc, "pieces", "ledger");
  if (!pieces.is_array()) fail("pieces", "expected an array");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string w = "pieces[" + std::to_string(i) + "]";
    const json& p = pieces[i];
    const json& gen = field(p, "generator", w);
    if (!gen.is_string() || !l.generator_by_name(gen.get<std::string>()))
      fail(w + ".generator", "unknown generator " + gen.dump());
    bool inverse = false;
    if (auto inv = p.find("inverse"); inv != p.end()) {
      if (!inv->is_boolean()) fail(w + ".inverse", "expected a boolean");
      inverse = inv->get<bool>();
    }
    std::size_t dom = cell_ref(l, field(p, "domain_cell", w), w + ".domain_cell");
    std::size_t cod = cell_ref(l, field(p, "codomain_cell", w), w + ".codomain_cell");
    RatMatrix extra = p.contains("domain_inequalities")
                          ? parse_rows(p["domain_inequalities"], l.cell_dim(dom), w + ".domain_inequalities", std::nullopt)
                          : RatMatrix(0, l.cell_dim(dom));
    RatMatrix m = parse_rows(field(p, "matrix", w), l.cell_dim(dom), w + ".matrix", l.cell_dim(cod));
    l.add_piece({*l.generator_by_name(gen.get<std::string>()), inverse}, dom, std::move(extra), cod, std::move(m));
  }

  l.basepoint = parse_point(l, field(doc, "basepoint", "ledger"), "basepoint");
  if (auto it = doc.find("vertex_basepoint"); it != doc.end())
    l.vertex_basepoint = parse_point(l, *it, "vertex_basepoint");
  return l;
}

Ledger ledger_from_json(const ojson& doc) { return ledger_from_json(json::parse(doc.dump())); }

namespace {

void dump_into(const ojson& v, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  auto scalar_array = [](const ojson& a) {
    return std::all_of(a.begin(), a.end(), [](const ojson& x) { return x.is_primitive(); });
  };
  if (v.is_array() && (v.empty() || scalar_array(v))) {
    out += v.dump(-1, ' ', false);
  } else if (v.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += pad + "  ";
      dump_into(v[i], indent + 2, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else if (v.is_object() && !v.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      out += pad + "  " + ojson(it.key()).dump() + ": ";
      dump_into(it.value(), indent + 2, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else {
    out += v.dump(-1, ' ', false);
  }
}

}  // namespace

std::string dump_compact(const ojson& doc) {
  std::string out;
  dump_into(doc, 0, out);
  return out;
}

Ledger load_ledger(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LedgerParseError(path.string() + ": cannot open ledger file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw LedgerParseError(path.string() + ": " + e.what());
  }
  try {
    return ledger_from_json(doc);
  } catch (const LedgerParseError& e) {
    throw LedgerParseError(path.string() + ": " + e.what());
  }
}

void save_ledger(const Ledger& ledger, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot write ledger file");
  out << dump_compact(ledger_to_json(ledger)) << '\n';
}

namespace {

bool on_face(const RatMatrix& map, std::span<const Rational> x) {
  RatMatrix p = pseudo_inverse(map) * map;
  return p * x == RatVector(x.begin(), x.end());
}

bool on_face(const RatMatrix& map, const AlgVector& x) {
  return equal_at_point(pseudo_inverse(map) * map * x, x);
}

bool same_coords(const RatVector& a, const RatVector& b) { return a == b; }
bool same_coords(const AlgVector& a, const AlgVector& b) { return equal_at_point(a, b); }

template <class P>
bool points_equal_impl(const Ledger& l, const P& p, const P& q) {
  if (p.cell == q.cell) return same_coords(p.coords, q.coords);
  for (const auto& g : l.gluings) {
    if (g.cell_a == p.cell && g.cell_b == q.cell && on_face(g.map, p.coords) &&
        same_coords(g.map * p.coords, q.coords))
      return true;
    if (g.cell_a == q.cell && g.cell_b == p.cell && on_face(g.map, q.coords) &&
        same_coords(g.map * q.coords, p.coords))
      return true;
  }
  return false;
}

}  // namespace

bool points_equal(const Ledger& ledger, const PLPoint& p, const PLPoint& q) {
  return points_equal_impl(ledger, p, q);
}

bool points_equal(const Ledger& ledger, const AlgPoint& p, const AlgPoint& q) {
  return points_equal_impl(ledger, p, q);
}

}  // namespace ntpack
