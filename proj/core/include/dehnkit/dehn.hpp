#pragma once

// Dehn's algorithm for the normal closure N of a symmetrized set.
//
// A word is cyclically reduced and scanned for the longest fragment of a
// relator member; a fragment covering more than half of its relator is
// replaced by the inverse of the remaining part, which shortens the word.
// Trivial verdicts carry the conjugators and relator members used, so that
// the product of the recorded conjugates can be recomputed. Nontrivial
// verdicts rely on the Greendlinger property of C'(1/10) sets and are
// flagged unsound when the engine was built without a certificate.

#include <cstdint>
#include <optional>
#include <vector>

#include "dehnkit/cancellation.hpp"
#include "dehnkit/rational.hpp"
#include "dehnkit/suffix.hpp"

namespace dehnkit {

struct FragmentMatch {
  Rational ratio;             // fragment / relator length
  std::size_t position = 0;   // start letter in the scanned rotation
  std::size_t length = 0;     // fragment length in letters
  RepRef relator;             // member whose prefix matches
  std::size_t relator_length = 0;
};

enum class Outcome { Trivial, Nontrivial };
const char* to_string(Outcome o) noexcept;

struct RewriteStep {
  AmalgamWord conjugator;     // g: this step removes g * r * g^-1
  RepRef relator;
  std::size_t position = 0;
  std::size_t fragment_length = 0;
  std::size_t relator_length = 0;
  std::size_t length_before = 0;
  std::size_t length_after = 0;
};

struct DehnVerdict {
  Outcome outcome = Outcome::Nontrivial;
  std::vector<RewriteStep> trace;
  // Largest fragment ratio left in the irreducible word (Nontrivial only).
  std::optional<Rational> witness;
  CyclicWord residue;
  // False when a Nontrivial verdict came from an uncertified set.
  bool sound = true;
};

enum class TieBreak { LeftmostLongest, Random };

struct DehnOptions {
  bool require_certificate = true;
  TieBreak tie_break = TieBreak::LeftmostLongest;
  std::uint64_t seed = 0;
};

class DehnEngine {
 public:
  // Checks C'(1/10); throws UncertifiedSet if it fails and a certificate is
  // required.
  explicit DehnEngine(SymmetrizedSet R, DehnOptions options = {});

  const SymmetrizedSet& relators() const noexcept { return R_; }
  const CPrimeResult& certificate() const noexcept { return certificate_; }
  bool certified() const noexcept { return certificate_.certified; }

  // Longest fragment (by ratio) over all rotations of w; ties go to the
  // leftmost position of the scanned rotation, then the smallest member.
  std::optional<FragmentMatch> max_fragment(const CyclicWord& w) const;
  // Best fragment at each position of w, for every base; used by random
  // tie-breaking and by tests.
  std::vector<FragmentMatch> fragments(const CyclicWord& w) const;

  DehnVerdict membership(const AmalgamWord& w) const;
  // Seeded variant for random tie-breaking.
  DehnVerdict membership(const AmalgamWord& w, std::uint64_t seed) const;

  // Product of the recorded conjugates equals w.
  bool replay(const AmalgamWord& w, const DehnVerdict& v) const;

  // No nonidentity word of K or L of free length <= radius is Trivial.
  bool ball_injectivity(unsigned radius) const;

 private:
  DehnVerdict run(const AmalgamWord& w, std::uint64_t seed) const;

  SymmetrizedSet R_;
  DehnOptions options_;
  CPrimeResult certificate_;
  std::vector<SuffixAutomaton> automata_;  // one per base, on reversed doubled code
};

// One-shot forms building an engine with default options.
std::optional<FragmentMatch> max_fragment(const CyclicWord& w, const SymmetrizedSet& R);
DehnVerdict membership(const AmalgamWord& w, const SymmetrizedSet& R);
bool ball_injectivity(const SymmetrizedSet& R, unsigned radius);

}  // namespace dehnkit
