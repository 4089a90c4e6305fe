#include "ntpack/cli.hpp"

#include "ntpack/errors.hpp"
#include "ntpack/validate.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ntpack::cli {

using json = nlohmann::ordered_json;

namespace {

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json coefficients_json(const Polynomial& p) {
  json c = json::array();
  for (const auto& q : p.coefficients()) c.push_back(to_string(q));
  return c;
}

json point_json(const Ledger& l, const PLPoint& p) {
  json coords = json::array();
  for (const auto& c : p.coords) coords.push_back(to_string(c));
  return {{"cell", l.cells[p.cell].name}, {"coords", coords}};
}

std::string matrix_text(const json& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].get<std::string>();
    out += "]";
  }
  return out + "]";
}

std::string point_text(const json& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p["coords"].size(); ++i) out += (i ? ", " : "") + p["coords"][i].get<std::string>();
  return out + ") ∈ " + p["cell"].get<std::string>();
}

std::string elapsed_text(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

/// Loads a ledger; files that fail validation are rejected with a ValidationFailure.
struct LedgerInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Ledger open_ledger(const std::string& name) {
  Ledger l = resolve_ledger(name);
  if (name == "b3" || name == "ydelta") return l;
  ValidateOptions opts;
  opts.samples = 50;
  ValidationReport r = validate_ledger(l, {}, opts);
  if (!r.passed()) {
    std::string msg = "ledger " + name + " failed validation";
    for (const auto& c : r.checks)
      if (!c.passed && !c.witnesses.empty()) msg += "\n  " + c.name + ": " + c.witnesses.front();
    throw LedgerInvalid(msg);
  }
  return l;
}

struct Common {
  std::string ledger = "b3";
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--ledger", c.ledger, "built-in ledger (b3, ydelta) or path to a ledger file")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

int cmd_analyze(const Common& c, const std::string& word_text, const std::string& strategy, std::optional<long> q,
                std::size_t max_k, int digits, std::size_t budget, const std::string& point, std::ostream& out) {
  Ledger l = open_ledger(c.ledger);
  Word w = parse_word(l, word_text);
  std::optional<PLPoint> start;
  if (!point.empty()) start = parse_point(l, point);
  Timer t;
  AnalysisResult r = strategy == "guess" ? guess_and_check(l, w, max_k, start)
                                         : main_algorithm(l, w, MainOptions{q, start, budget});
  json rec = analysis_record(l, word_text, r, digits, t.ms());
  out << (c.format == "json" ? rec.dump(2) : render_analysis_text(rec)) << '\n';
  return kSuccess;
}

int cmd_evaluate(const Common& c, const std::string& word_text, const std::string& point, std::size_t power,
                 bool trace, std::ostream& out) {
  Ledger l = open_ledger(c.ledger);
  Word w = parse_word(l, word_text).power(power);
  PLPoint start = point.empty() ? l.basepoint : parse_point(l, point);
  std::vector<TraceStep> steps;
  auto ev = basic_computation(l, w, start, {true, trace ? &steps : nullptr});

  json rec;
  rec["word"] = word_text;
  rec["ledger"] = l.name;
  rec["power"] = std::to_string(power);
  rec["start"] = point_json(l, start);
  rec["end"] = point_json(l, ev.end);
  rec["triple"] = {{"matrix", matrix_json(ev.triple.matrix)},
                   {"domain_cell", l.cells[ev.triple.domain_cell].name},
                   {"codomain_cell", l.cells[ev.triple.codomain_cell].name}};
  if (trace) {
    json rows = json::array();
    for (const auto& s : steps) {
      const Piece& p = l.pieces[s.piece];
      rows.push_back({{"step", std::to_string(s.step)},
                      {"before", point_json(l, s.before)},
                      {"piece", l.piece_label(s.piece)},
                      {"letter", l.generator_name(s.letter)},
                      {"codomain", l.cells[p.codomain_cell].name},
                      {"matrix", matrix_json(p.matrix)},
                      {"after", point_json(l, s.after)}});
    }
    rec["trace"] = rows;
  }

  if (c.format == "json") {
    out << rec.dump(2) << '\n';
    return kSuccess;
  }
  if (trace) {
    out << std::left << std::setw(4) << "l" << std::setw(16) << "c_(l-1)" << std::setw(8) << "piece" << std::setw(8)
        << "letter" << std::setw(10) << "codomain" << std::setw(22) << "matrix"
        << "c_l\n";
    for (const auto& row : rec["trace"]) {
      auto coords = [](const json& p) {
        std::string s = "(";
        for (std::size_t i = 0; i < p["coords"].size(); ++i) s += (i ? "," : "") + p["coords"][i].get<std::string>();
        return s + ")";
      };
      out << std::setw(4) << row["step"].get<std::string>() << std::setw(16) << coords(row["before"]) << std::setw(8)
          << row["piece"].get<std::string>() << std::setw(8) << row["letter"].get<std::string>() << std::setw(10)
          << row["codomain"].get<std::string>() << std::setw(22) << matrix_text(row["matrix"]) << coords(row["after"])
          << '\n';
    }
  }
  out << "end point: " << point_text(rec["end"]) << '\n'
      << "triple:    (" << matrix_text(rec["triple"]["matrix"]) << ", " << rec["triple"]["domain_cell"].get<std::string>()
      << ", " << rec["triple"]["codomain_cell"].get<std::string>() << ")\n";
  return kSuccess;
}

int cmd_validate(const Common& c, const std::vector<std::string>& relator_texts, std::size_t samples,
                 std::uint64_t seed, std::ostream& out) {
  Ledger l = resolve_ledger(c.ledger);
  std::vector<Relator> relators;
  for (const auto& t : relator_texts) relators.push_back(parse_relator(l, t));
  ValidationReport r = validate_ledger(l, relators, ValidateOptions{samples, seed});
  if (c.format == "json") {
    json checks = json::array();
    for (const auto& ch : r.checks)
      checks.push_back({{"name", ch.name},
                        {"passed", ch.passed},
                        {"cases", std::to_string(ch.cases)},
                        {"witnesses", ch.witnesses}});
    out << json{{"ledger", l.name}, {"passed", r.passed()}, {"checks", checks}}.dump(2) << '\n';
  } else {
    for (const auto& ch : r.checks) {
      out << (ch.passed ? "PASS " : "FAIL ") << std::left << std::setw(12) << ch.name << ch.cases << " cases\n";
      for (const auto& w : ch.witnesses) out << "     witness: " << w << '\n';
    }
    out << "ledger " << l.name << (r.passed() ? " is valid" : " is INVALID") << '\n';
  }
  return r.passed() ? kSuccess : kValidationFailure;
}

int cmd_q(int genus, int punctures, const std::string& format, std::ostream& out) {
  QConstants q = compute_Q(genus, punctures);
  const std::vector<std::pair<const char*, const Integer*>> rows = {
      {"xi", &q.xi},         {"K", &q.K},       {"Qcurve", &q.Qcurve}, {"Qtrack", &q.Qtrack},
      {"Qforce", &q.Qforce}, {"Qfit", &q.Qfit}, {"Qdt", &q.Qdt},       {"Q", &q.Q}};
  if (format == "json") {
    json rec = {{"genus", std::to_string(genus)}, {"punctures", std::to_string(punctures)}};
    for (const auto& [k, v] : rows) rec[k] = v->get_str();
    out << rec.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : rows) out << std::left << std::setw(8) << k << v->get_str() << '\n';
  }
  return kSuccess;
}

}  // namespace

PLPoint parse_point(const Ledger& l, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("point must look like CELL:x,y");
  auto cell = l.cell_by_name(text.substr(0, colon));
  if (!cell) throw std::invalid_argument("unknown cell '" + text.substr(0, colon) + "'");
  PLPoint p{*cell, {}};
  std::stringstream coords(text.substr(colon + 1));
  std::string item;
  while (std::getline(coords, item, ',')) p.coords.push_back(parse_rational(item));
  if (p.coords.size() != l.cell_dim(*cell))
    throw std::invalid_argument("point has " + std::to_string(p.coords.size()) + " coordinates, cell " +
                                l.cells[*cell].name + " has dimension " + std::to_string(l.cell_dim(*cell)));
  if (!cone_contains(l.cells[*cell].cone, p.coords))
    throw std::invalid_argument("point " + to_string(p.coords) + " lies outside cell " + l.cells[*cell].name);
  return p;
}

json analysis_record(const Ledger& l, const std::string& word, const AnalysisResult& r, int digits,
                     double elapsed_ms) {
  const RealAlgebraic& lambda = r.eigen.lambda;
  json entries = json::array(), coeffs = json::array(), decimals = json::array();
  for (const auto& e : r.eigen.vector.entries()) {
    entries.push_back(to_string(e, "λ"));
    coeffs.push_back(coefficients_json(e));
    decimals.push_back(to_decimal(e, lambda, digits));
  }
  return {{"word", word},
          {"ledger", l.name},
          {"strategy", r.strategy},
          {"iterations", std::to_string(r.iterations)},
          {"cell", l.cells[r.sink.cell].name},
          {"d_matrix", matrix_json(r.sink.d_matrix)},
          {"char_poly", coefficients_json(r.eigen.char_poly)},
          {"stretch_factor",
           {{"min_poly", coefficients_json(lambda.poly())},
            {"min_poly_text", to_string(lambda.poly())},
            {"isolating_interval", {to_string(lambda.lo()), to_string(lambda.hi())}},
            {"decimal", to_decimal(lambda, digits)}}},
          {"foliation", {{"entries", entries}, {"coefficients", coeffs}, {"decimal", decimals}}},
          {"timing_ms", elapsed_text(elapsed_ms)}};
}

std::string render_analysis_text(const json& r) {
  std::ostringstream out;
  auto list = [](const json& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
    return s + ")";
  };
  const json& sf = r["stretch_factor"];
  out << "word:            " << r["word"].get<std::string>() << '\n'
      << "ledger:          " << r["ledger"].get<std::string>() << '\n'
      << "strategy:        " << r["strategy"].get<std::string>() << " (iterations " << r["iterations"].get<std::string>()
      << ")\n"
      << "sink package:    (" << r["cell"].get<std::string>() << ", " << matrix_text(r["d_matrix"]) << ")\n"
      << "stretch factor:  " << sf["decimal"].get<std::string>() << '\n'
      << "  root of        " << sf["min_poly_text"].get<std::string>() << " in [" << sf["isolating_interval"][0].get<std::string>()
      << ", " << sf["isolating_interval"][1].get<std::string>() << "]\n"
      << "foliation:       " << list(r["foliation"]["entries"]) << " in " << r["cell"].get<std::string>() << '\n'
      << "  approximately  " << list(r["foliation"]["decimal"]) << '\n'
      << "time:            " << r["timing_ms"].get<std::string>() << " ms";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nielsen-Thurston package of a mapping class from a ledger", "ntpack"};
  app.require_subcommand(1);

  Common analyze_c, eval_c, valid_c;
  std::string word, strategy = "guess", point;
  std::optional<long> q;
  std::size_t max_k = 64, budget = 50'000'000, power = 1, samples = 200;
  int digits = 30;
  bool trace = false;
  std::vector<std::string> relators;
  std::uint64_t seed = ValidateOptions{}.seed;

  auto* analyze = app.add_subcommand("analyze", "compute stretch factor and foliation");
  add_common(analyze, analyze_c);
  analyze->add_option("--word", word, "word in composition notation, leftmost letter applied last")->required();
  analyze->add_option("--strategy", strategy)->check(CLI::IsMember({"guess", "main-q"}))->capture_default_str();
  analyze->add_option("--q", q, "override the power Q for main-q");
  analyze->add_option("--max-k", max_k, "guess-and-check iteration budget")->capture_default_str();
  analyze->add_option("--digits", digits, "significant digits in decimal output")->check(CLI::Range(1, 100000))->capture_default_str();
  analyze->add_option("--letter-budget", budget, "limit on Q·|w| letter applications")->capture_default_str();
  analyze->add_option("--point", point, "start point CELL:x,y instead of the ledger basepoint");

  std::string eval_word;
  auto* evaluate = app.add_subcommand("evaluate", "apply a word to a point");
  add_common(evaluate, eval_c);
  evaluate->add_option("--word", eval_word)->required();
  evaluate->add_option("--point", point, "start point CELL:x,y (default: ledger basepoint)");
  evaluate->add_option("--power", power)->check(CLI::NonNegativeNumber)->capture_default_str();
  evaluate->add_flag("--trace", trace, "print the per-letter table");

  auto* validate = app.add_subcommand("validate", "certify a ledger");
  add_common(validate, valid_c);
  validate->add_option("--relator", relators, "W1=W2, repeatable");
  validate->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();
  validate->add_option("--seed", seed)->capture_default_str();

  int genus = 0, punctures = 0;
  std::string q_format = "text";
  auto* qcmd = app.add_subcommand("q", "the constant Q(S) and its ladder");
  qcmd->add_option("--genus", genus)->required();
  qcmd->add_option("--punctures", punctures)->required();
  qcmd->add_option("--format", q_format)->check(CLI::IsMember({"text", "json"}));

  std::string export_name, export_path;
  auto* exp = app.add_subcommand("export", "write a ledger as JSON");
  exp->add_option("--ledger", export_name)->required();
  exp->add_option("--output", export_path)->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*analyze)
      return cmd_analyze(analyze_c, word, strategy, q, max_k, digits, budget, point, out);
    if (*evaluate) return cmd_evaluate(eval_c, eval_word, point, power, trace, out);
    if (*validate) return cmd_validate(valid_c, relators, samples, seed, out);
    if (*qcmd) return cmd_q(genus, punctures, q_format, out);
    if (*exp) {
      save_ledger(resolve_ledger(export_name), export_path);
      out << "wrote " << export_path << '\n';
      return kSuccess;
    }
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const AnalysisFailed& e) {
    err << "analysis failed: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const LedgerInvalid& e) {
    err << e.what() << '\n';
    return kValidationFailure;
  } catch (const NoPieceFound& e) {
    err << "invalid ledger: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const ImageOutsideCodomain& e) {
    err << "invalid ledger: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ntpack::cli
