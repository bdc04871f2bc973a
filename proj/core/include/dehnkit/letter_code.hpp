#pragma once

// Integer encoding of H-standard letters for the string-matching layers.
//
// A letter whose H-prefix is empty is written as two symbols: the id of its
// core (even) followed by the id of its H-suffix (odd). Two such letters are
// equal iff both symbols agree, and they lie in one H-double coset iff the
// first symbols agree. A common prefix of S symbols between two encoded
// words therefore covers ceil(S/2) letters matching up to H-interleaving.

#include <map>
#include <vector>

#include "dehnkit/amalgam.hpp"

namespace dehnkit {

class LetterCode {
 public:
  static constexpr int kUnknown = -1;

  // Interns the letter's core and tail; returns {core symbol, tail symbol}.
  std::pair<int, int> intern(const FactorSystem& sys, const FactorWord& letter);
  // Lookup only; unknown parts map to kUnknown.
  std::pair<int, int> lookup(const FactorSystem& sys, const FactorWord& letter) const;

  std::vector<int> intern_word(const FactorSystem& sys, const AmalgamWord& w);
  std::vector<int> lookup_word(const FactorSystem& sys, const AmalgamWord& w) const;

  std::size_t core_count() const noexcept { return cores_.size(); }

 private:
  std::map<FactorWord, int> cores_;
  std::map<std::vector<Syllable>, int> tails_;
};

}  // namespace dehnkit
