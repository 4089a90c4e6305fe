#pragma once

#include "ntpack/algebraic.hpp"
#include "ntpack/ledger.hpp"
#include "ntpack/subspace.hpp"
#include "ntpack/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ntpack {

struct TraceStep {
  std::size_t step = 0;  // 1-based
  PLPoint before;
  std::size_t piece = 0;
  SignedGen letter;
  PLPoint after;
};

template <class P>
struct Evaluation {
  P end;
  Triple triple;  // matrix is the identity when tracking is off
};

struct EvalOptions {
  bool track_matrix = true;
  std::vector<TraceStep>* trace = nullptr;
};

/// Applies w letter by letter from start, choosing pieces by find_piece.
Evaluation<PLPoint> basic_computation(const Ledger& ledger, const Word& w, const PLPoint& start,
                                      const EvalOptions& opts = {});
Evaluation<AlgPoint> basic_computation(const Ledger& ledger, const Word& w, const AlgPoint& start,
                                       bool track_matrix = true);

struct SinkPackage {
  std::size_t cell = 0;
  RatMatrix d_matrix;
  Subspace invariant_subspace;
};

/// Maximal A-invariant subspace of the shared span, D = A·B. Throws ZeroInvariantSubspace.
SinkPackage sink_package(const Triple& triple, const Ledger& ledger);

struct Eigenpair {
  Polynomial char_poly;  // of the sink matrix
  RealAlgebraic lambda;  // over the polynomial the foliation entries are reduced by
  AlgVector vector;      // first nonzero entry is 1, every entry >= 0
};

/// Largest eigenvalue > 1 of D with a nonnegative eigenvector, if any.
std::optional<Eigenpair> spectral_extract(const SinkPackage& pkg);

/// f(v) = λ v as points of the complex.
bool verify_pl_eigenvector(const Ledger& ledger, const Word& w, const RealAlgebraic& lambda, const AlgVector& v,
                           std::size_t cell);

struct QConstants {
  Integer xi, K, Qcurve, Qtrack, Qforce, Qfit, Qdt, Q;
};

/// Throws std::invalid_argument when 3g - 3 + p < 1.
QConstants compute_Q(int genus, int punctures);
Integer q_closed_form(const Integer& xi);

struct AnalysisResult {
  SinkPackage sink;
  Eigenpair eigen;
  std::size_t iterations = 0;
  std::string strategy;
};

/// Tries k = 1..max_k. Throws BudgetExhausted.
AnalysisResult guess_and_check(const Ledger& ledger, const Word& w, std::size_t max_k,
                               const std::optional<PLPoint>& start = std::nullopt);

struct MainOptions {
  std::optional<long> q_override;
  std::optional<PLPoint> start;        // defaults to the vertex basepoint, then the basepoint
  std::size_t letter_budget = 50'000'000;
};

/// Evaluates f^Q(c) in a flat loop, then certifies the sink package at that point.
/// Throws BudgetExhausted when Q·|w| exceeds the budget and AnalysisFailed when certification fails.
AnalysisResult main_algorithm(const Ledger& ledger, const Word& w, const MainOptions& opts = {});

}  // namespace ntpack
