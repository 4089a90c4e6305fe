// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.

#include "../property/properties.hpp"

#include "ntpack/algorithms.hpp"
#include "ntpack/cli.hpp"
#include "ntpack/validate.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace ntpack;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

const char* kBraidWord = "s2 s1' s2 s1 s1 s1";
const char* kBraidInverse = "s1' s1' s1' s2' s1 s2'";

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CliRun {
  int code = 0;
  json doc;
  std::string err;
  double ms = 0;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  auto t0 = Clock::now();
  CliRun r;
  r.code = cli::run(args, out, err);
  r.ms = ms_since(t0);
  r.err = err.str();
  if (r.code == 0) r.doc = json::parse(out.str());
  return r;
}

class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
    ++checks_;
  }

  bool report() const {
    std::cout << "criterion " << number_ << ": " << (failed_.empty() ? "PASS" : "FAIL") << "  " << title_ << " ("
              << checks_ - failed_.size() << "/" << checks_ << " checks)";
    for (const auto& f : failed_) std::cout << "\n    failed: " << f;
    std::cout << std::endl;
    return failed_.empty();
  }

 private:
  int number_;
  std::string title_;
  std::size_t checks_ = 0;
  std::vector<std::string> failed_;
};

RatMatrix matrix_of(const json& rows) {
  std::vector<RatVector> rs;
  for (const auto& row : rows) {
    RatVector v;
    for (const auto& e : row) v.push_back(parse_rational(e.get<std::string>()));
    rs.push_back(std::move(v));
  }
  return RatMatrix::from_rows(rs, rs.empty() ? 0 : rs.front().size());
}

Polynomial poly_of(const json& coeffs) {
  std::vector<Rational> c;
  for (const auto& e : coeffs) c.push_back(parse_rational(e.get<std::string>()));
  return Polynomial(std::move(c));
}

/// The stretch factor and foliation entries of an analyze record, as polynomials in λ.
struct Ray {
  RealAlgebraic lambda;
  std::vector<Polynomial> entries;
};

Ray ray_of(const json& rec) {
  const auto& sf = rec["stretch_factor"];
  RealAlgebraic lambda(poly_of(sf["min_poly"]), parse_rational(sf["isolating_interval"][0].get<std::string>()),
                       parse_rational(sf["isolating_interval"][1].get<std::string>()));
  Ray r{lambda, {}};
  for (const auto& c : rec["foliation"]["coefficients"]) r.entries.push_back(poly_of(c));
  return r;
}

/// The record's ray is a positive multiple of (a, b), both given as polynomials in λ.
bool proportional(const Ray& r, const Polynomial& a, const Polynomial& b) {
  if (r.entries.size() != 2) return false;
  return sign_at(r.entries[0] * b - r.entries[1] * a, r.lambda) == 0 &&
         sign_at(r.entries[0] * a + r.entries[1] * b, r.lambda) > 0;
}

/// floor(10^digits-1 · (p + sqrt(q)) / 2) rendered as a decimal with one integer digit; pure GMP integer oracle.
std::string half_surd_decimal(long p, long q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
  Integer root;
  Integer radicand = q * scale * scale;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Integer value = (p * scale + root) / 2;
  std::string s = value.get_str();
  return s.substr(0, 1) + "." + s.substr(1);
}

bool criterion1() {
  Criterion c(1, "B3 golden run");
  auto r = run_cli({"analyze", "--ledger", "b3", "--word", kBraidWord, "--strategy", "guess", "--format", "json"});
  c.expect(r.code == 0, "exit code 0 (got " + std::to_string(r.code) + " " + r.err + ")");
  if (r.code != 0) return c.report();
  const json& d = r.doc;
  c.expect(d["iterations"] == "1", "terminates at k=1 (got " + d["iterations"].get<std::string>() + ")");
  c.expect(d["cell"] == "V2", "sink cell V2 (got " + d["cell"].get<std::string>() + ")");
  RatMatrix dm = matrix_of(d["d_matrix"]);
  c.expect(dm == RatMatrix{{3, 5}, {1, 2}}, "D = [[3,5],[1,2]] (got " + to_string(dm) + ")");
  c.expect(d["stretch_factor"]["min_poly_text"] == "x^2 - 5x + 1", "minimal polynomial x^2 - 5x + 1");
  std::string expected = half_surd_decimal(5, 21, 30);
  std::string got = d["stretch_factor"]["decimal"];
  c.expect(got == expected, "30 digits of (5+sqrt21)/2: want " + expected + " got " + got);
  Ray ray = ray_of(d);
  // sqrt21 = 2λ - 5
  bool matches = proportional(ray, Polynomial{-4, 2}, Polynomial{2});
  c.expect(matches, "foliation ray proportional to (1+sqrt21, 2) (got (" + to_string(ray.entries[0], "λ") + ", " +
                        to_string(ray.entries[1], "λ") + "), which is proportional to (2, 1+sqrt21): " +
                        (proportional(ray, Polynomial{2}, Polynomial{-4, 2}) ? "yes" : "no") + ")");
  c.expect(r.ms < 1000, "runtime < 1 s (took " + std::to_string(r.ms) + " ms)");
  return c.report();
}

bool criterion2() {
  Criterion c(2, "B3 inverse run");
  auto r = run_cli({"analyze", "--ledger", "b3", "--word", kBraidInverse, "--strategy", "guess", "--format", "json"});
  c.expect(r.code == 0, "exit code 0 (got " + std::to_string(r.code) + " " + r.err + ")");
  if (r.code != 0) return c.report();
  c.expect(r.doc["cell"] == "V1", "sink cell V1 (got " + r.doc["cell"].get<std::string>() + ")");
  Ray ray = ray_of(r.doc);
  c.expect(ray.lambda.poly() == Polynomial{1, -5, 1}, "stretch factor root of x^2 - 5x + 1");
  bool matches = proportional(ray, Polynomial{-8, 2}, Polynomial{6});
  c.expect(matches, "foliation ray proportional to (-3+sqrt21, 6) (got (" + to_string(ray.entries[0], "λ") + ", " +
                        to_string(ray.entries[1], "λ") + "), which is proportional to (2, -3+sqrt21): " +
                        (proportional(ray, Polynomial{2}, Polynomial{-8, 2}) ? "yes" : "no") + ")");
  return c.report();
}

bool criterion3() {
  Criterion c(3, "Y_Delta run");
  auto r = run_cli({"analyze", "--ledger", "ydelta", "--word", "b' a", "--format", "json"});
  c.expect(r.code == 0, "exit code 0 (got " + std::to_string(r.code) + " " + r.err + ")");
  if (r.code != 0) return c.report();
  c.expect(r.doc["cell"] == "V3", "sink cell V3 (got " + r.doc["cell"].get<std::string>() + ")");
  RatMatrix dm = matrix_of(r.doc["d_matrix"]);
  c.expect(dm == RatMatrix{{2, 1}, {1, 1}}, "D = [[2,1],[1,1]] (got " + to_string(dm) + ")");
  Ray ray = ray_of(r.doc);
  // (3+sqrt5)/2 is the root of x^2 - 3x + 1 above 2
  c.expect(ray.lambda.poly() == Polynomial{1, -3, 1} && compare(ray.lambda, Rational(2)) > 0,
           "lambda = (3+sqrt5)/2 exactly");
  c.expect(r.doc["stretch_factor"]["decimal"] == half_surd_decimal(3, 5, 30), "30 digits of (3+sqrt5)/2");
  // phi = λ - 1
  c.expect(proportional(ray, Polynomial{-1, 1}, Polynomial{1}), "foliation ray proportional to (phi, 1)");
  return c.report();
}

bool criterion4() {
  Criterion c(4, "Q constants");
  const std::vector<std::tuple<int, int, long>> table = {{0, 4, 2561}, {2, 0, 22465}, {3, 0, 89281}};
  for (auto [g, p, q] : table) {
    Integer got = compute_Q(g, p).Q;
    c.expect(got == q, "Q(" + std::to_string(g) + "," + std::to_string(p) + ") = " + std::to_string(q) + " (got " +
                           got.get_str() + ")");
  }
  for (int xi = 1; xi <= 100; ++xi) {
    Integer ladder = compute_Q(0, xi + 3).Q;
    Integer closed = 2464 * Integer(xi) * xi + 96 * xi + 1;
    if (ladder != closed || q_closed_form(xi) != closed) c.expect(false, "ladder at xi=" + std::to_string(xi));
  }
  c.expect(true, "ladder equals 2464 xi^2 + 96 xi + 1 for xi = 1..100");
  return c.report();
}

bool criterion5() {
  Criterion c(5, "main algorithm with Q = 2561 agrees with the guess run");
  Ledger b3 = builtin_b3();
  Word w = parse_word(b3, kBraidWord);
  auto guess = guess_and_check(b3, w, 16);
  auto t0 = Clock::now();
  try {
    MainOptions opts;
    opts.q_override = 2561;
    auto main = main_algorithm(b3, w, opts);
    double ms = ms_since(t0);
    c.expect(main.sink.cell == guess.sink.cell, "same sink cell");
    c.expect(main.eigen.lambda.poly() == guess.eigen.lambda.poly() &&
                 compare(main.eigen.lambda, guess.eigen.lambda) == 0,
             "identical stretch factor");
    c.expect(main.eigen.vector.entries() == guess.eigen.vector.entries(), "identical normalized foliation ray");
    c.expect(ms < 60000, "runtime < 60 s (took " + std::to_string(ms) + " ms)");
  } catch (const std::exception& e) {
    c.expect(false, std::string("main algorithm threw: ") + e.what());
  }
  return c.report();
}

bool criterion6() {
  Criterion c(6, "trace fidelity");
  auto r = run_cli({"evaluate", "--ledger", "b3", "--word", kBraidWord, "--trace", "--format", "json"});
  c.expect(r.code == 0, "exit code 0");
  if (r.code != 0) return c.report();
  struct Row {
    std::vector<long> before;
    std::string cell, letter, codomain;
    RatMatrix matrix;
    std::vector<long> after;
  };
  const std::vector<Row> table = {
      {{1, 2}, "V1,2", "s1", "V2", {{-1, 1}, {1, 0}}, {1, 1}}, {{1, 1}, "V2", "s1", "V3", {{0, 1}, {1, 0}}, {1, 1}},
      {{1, 1}, "V3", "s1", "V4", {{0, 1}, {1, 1}}, {1, 2}},    {{1, 2}, "V4", "s2", "V1", {{0, 1}, {1, 0}}, {2, 1}},
      {{2, 1}, "V1", "s1'", "V1", {{1, 1}, {0, 1}}, {3, 1}},   {{3, 1}, "V1", "s2", "V2", {{0, 1}, {1, 1}}, {1, 4}},
  };
  const json& trace = r.doc["trace"];
  c.expect(trace.size() == table.size(), "six rows");
  auto coords = [](const json& p) {
    std::vector<long> v;
    for (const auto& e : p["coords"]) v.push_back(std::stol(e.get<std::string>()));
    return v;
  };
  for (std::size_t i = 0; i < std::min(trace.size(), table.size()); ++i) {
    const json& s = trace[i];
    const Row& t = table[i];
    std::string at = "row " + std::to_string(i + 1) + " ";
    c.expect(coords(s["before"]) == t.before, at + "c_{l-1}");
    c.expect(s["piece"] == t.cell, at + "piece " + t.cell + " (got " + s["piece"].get<std::string>() + ")");
    c.expect(s["letter"] == t.letter, at + "letter");
    c.expect(s["codomain"] == t.codomain, at + "codomain");
    c.expect(matrix_of(s["matrix"]) == t.matrix, at + "matrix (got " + to_string(matrix_of(s["matrix"])) + ")");
    c.expect(coords(s["after"]) == t.after, at + "c_l");
  }
  c.expect(r.doc["end"]["cell"] == "V2" && coords(r.doc["end"]) == std::vector<long>{1, 4}, "f(c) = (1,4) in V2");
  c.expect(matrix_of(r.doc["triple"]["matrix"]) == RatMatrix{{-1, 1}, {-2, 3}}, "acting matrix [[-1,1],[-2,3]]");
  return c.report();
}

bool criterion7() {
  Criterion c(7, "ledger validation and mutation coverage");
  Ledger b3 = builtin_b3();
  Ledger yd = builtin_ydelta();
  std::vector<Relator> braid = {parse_relator(b3, "s1 s2 s1=s2 s1 s2")};
  ValidateOptions opts;
  opts.samples = 200;
  auto describe = [](const ValidationReport& rep) {
    std::string s;
    for (const auto& ch : rep.checks) s += ch.name + (ch.passed ? "+ " : "- ");
    return s;
  };
  auto rb = validate_ledger(b3, braid, opts);
  c.expect(rb.passed() && rb.checks.size() == 5, "b3 passes all five checks with the braid relation: " + describe(rb));
  auto ry = validate_ledger(yd, {}, opts);
  c.expect(ry.passed() && ry.checks.size() == 5, "ydelta passes all five checks: " + describe(ry));

  std::mt19937_64 rng(20261015);
  for (int m = 0; m < 20; ++m) {
    bool use_b3 = m % 2 == 0;
    Ledger l = use_b3 ? b3 : yd;
    auto& piece = l.pieces[std::uniform_int_distribution<std::size_t>(0, l.pieces.size() - 1)(rng)];
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, piece.matrix.rows() - 1)(rng);
    std::size_t j = std::uniform_int_distribution<std::size_t>(0, piece.matrix.cols() - 1)(rng);
    long delta = std::uniform_int_distribution<long>(1, 3)(rng) * (rng() % 2 ? 1 : -1);
    piece.matrix(i, j) += delta;
    auto rep = validate_ledger(l, use_b3 ? braid : std::vector<Relator>{}, opts);
    c.expect(!rep.passed(), "mutation " + std::to_string(m) + " of " + l.name + " " +
                                l.piece_label(static_cast<std::size_t>(&piece - l.pieces.data())) + " caught");
  }
  return c.report();
}

bool criterion8() {
  Criterion c(8, "property suites at >= 500 cases");
  const std::vector<std::string> wanted = {"triple_consistency",     "inverse_round_trip",
                                           "cayley_hamilton",        "projection_idempotence",
                                           "sign_at_multiplicativity", "foliation_homogeneity"};
  auto all = proptest::all_properties();
  for (const auto& name : wanted) {
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.name == name; });
    if (it == all.end()) {
      c.expect(false, name + " registered");
      continue;
    }
    auto outcome = proptest::check(std::max<std::size_t>(it->cases, 500), it->seed, it->body);
    c.expect(!outcome.failure && outcome.cases >= 500,
             name + ": " + std::to_string(outcome.cases) + " cases" +
                 (outcome.failure ? ", counterexample " + *outcome.failure : ""));
  }
  return c.report();
}

bool criterion9() {
  Criterion c(9, "complexity profile of f^m(c)");
  Ledger b3 = builtin_b3();
  Word w = parse_word(b3, kBraidWord);
  auto sweep0 = Clock::now();
  std::vector<double> medians;
  const std::vector<std::size_t> ms = {256, 512, 1024, 2048};
  for (std::size_t m : ms) {
    Word wm = w.power(m);
    std::vector<double> runs;
    for (int rep = 0; rep < 5; ++rep) {
      auto t0 = Clock::now();
      auto ev = basic_computation(b3, wm, b3.basepoint);
      runs.push_back(ms_since(t0));
      if (ev.triple.matrix * b3.basepoint.coords != ev.end.coords) c.expect(false, "triple consistency at m=" + std::to_string(m));
    }
    std::sort(runs.begin(), runs.end());
    medians.push_back(runs[runs.size() / 2]);
  }
  std::ostringstream profile;
  for (std::size_t i = 0; i < ms.size(); ++i) profile << " t(" << ms[i] << ")=" << medians[i] << "ms";
  for (std::size_t i = 1; i < ms.size(); ++i) {
    double ratio = medians[i] / medians[i - 1];
    c.expect(ratio <= 5.0, "t(" + std::to_string(ms[i]) + ")/t(" + std::to_string(ms[i - 1]) +
                               ") = " + std::to_string(ratio) + " <= 5");
  }
  double sweep = ms_since(sweep0);
  c.expect(sweep < 120000, "sweep < 2 min (took " + std::to_string(sweep) + " ms;" + profile.str() + ")");
  std::cout << "    profile:" << profile.str() << std::endl;
  return c.report();
}

}  // namespace

int main() {
  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (int i = 0; i < 9; ++i) {
    try {
      if (!criteria[i]()) ++failed;
    } catch (const std::exception& e) {
      std::cout << "criterion " << i + 1 << ": FAIL  threw " << e.what() << std::endl;
      ++failed;
    }
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
