#pragma once

#include "ntpack/cone.hpp"

#include <string>
#include <vector>

namespace ntpack {

struct Ledger;

/// Letters in application order: letters[0] acts first.
struct Word {
  std::vector<SignedGen> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Word inverse() const;
  Word power(std::size_t n) const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Parses composition notation "s2 s1' s2^-1", leftmost letter applied last.
/// Throws WordParseError for unknown names or malformed tokens.
Word parse_word(const Ledger& ledger, const std::string& text);

/// Inverse of parse_word, using the apostrophe form.
std::string to_string(const Ledger& ledger, const Word& w);

}  // namespace ntpack
