#pragma once

#include "ntpack/ledger.hpp"
#include "ntpack/word.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ntpack {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;  // first few failures, human readable
};

struct ValidationReport {
  std::vector<CheckResult> checks;  // containment, coverage, agreement, inverse, relators
  bool passed() const;
};

struct Relator {
  Word lhs, rhs;
};

struct ValidateOptions {
  std::size_t samples = 200;  // per (signed generator, cell)
  std::uint64_t seed = 0x5eed;
};

ValidationReport validate_ledger(const Ledger& ledger, const std::vector<Relator>& relators,
                                 const ValidateOptions& opts = {});

/// "w1=w2" in composition notation. Throws WordParseError.
Relator parse_relator(const Ledger& ledger, const std::string& text);

/// Extreme rays (clockwise first) of a pointed 2-dimensional cone without equalities.
std::optional<std::pair<RatVector, RatVector>> extreme_rays_2d(const Cone& cone);

/// Boundary rays of the cone plus random integer points of it, coordinates at most 10^6.
std::vector<RatVector> sample_cone(const Cone& cone, std::size_t count, std::uint64_t seed, bool interior_only = false);

}  // namespace ntpack
