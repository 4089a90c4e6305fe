#pragma once

#include "harness.hpp"

#include <string>
#include <vector>

namespace proptest {

struct Property {
  std::string name;
  std::size_t cases;
  std::uint64_t seed;
  Body body;
};

std::vector<Property> all_properties();

/// Y_Δ with an extra generator r rotating the cells V(i+1) -> V(i) by identity matrices.
ntpack::Ledger ydelta_with_rotation();

}  // namespace proptest
