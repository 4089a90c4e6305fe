#include "ntpack/word.hpp"

#include "ntpack/errors.hpp"
#include "ntpack/ledger.hpp"

#include <algorithm>
#include <sstream>

namespace ntpack {

Word Word::inverse() const {
  Word w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inverted());
  return w;
}

Word Word::power(std::size_t n) const {
  Word w;
  w.letters.reserve(letters.size() * n);
  for (std::size_t i = 0; i < n; ++i) w.letters.insert(w.letters.end(), letters.begin(), letters.end());
  return w;
}

Word parse_word(const Ledger& ledger, const std::string& text) {
  std::istringstream in(text);
  std::string token;
  Word w;
  while (in >> token) {
    std::string name = token;
    bool inverse = false;
    if (name.size() > 3 && name.ends_with("^-1")) {
      name.resize(name.size() - 3);
      inverse = true;
    } else if (name.size() > 1 && name.back() == '\'') {
      name.pop_back();
      inverse = true;
    }
    if (name.find_first_of("'^") != std::string::npos) throw WordParseError("malformed letter '" + token + "'");
    auto g = ledger.generator_by_name(name);
    if (!g) throw WordParseError("unknown generator '" + name + "' in ledger " + ledger.name);
    w.letters.push_back({*g, inverse});
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

std::string to_string(const Ledger& ledger, const Word& w) {
  std::string out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += ledger.generator_name(*it);
  }
  return out;
}

}  // namespace ntpack
