#pragma once

#include <stdexcept>
#include <string>

namespace ntpack {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

/// A Sturm count was requested at an endpoint that is itself a root.
struct EndpointIsRoot : std::domain_error {
  using std::domain_error::domain_error;
};

/// No piece of the generator contains the point: the ledger does not cover its cells.
struct NoPieceFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A piece mapped a point outside its declared codomain cell.
struct ImageOutsideCodomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroInvariantSubspace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The main algorithm reached f^Q(c) but could not certify a sink package there.
struct AnalysisFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LedgerParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ntpack
