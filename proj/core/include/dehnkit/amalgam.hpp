#pragma once

// Words of the amalgamated product K *_H L.
//
// A normal form is an alternating sequence of letters (factor words) none of
// which lies in H once there are two or more. Normal forms of one element
// differ by H-interleaving: y1 = x1 h1^-1, yi = h(i-1) xi hi^-1,
// yn = h(n-1) xn. `normalize` picks the canonical representative in which
// every letter after the first starts with a non-shared syllable (leading
// H-content is pushed into the left neighbour); `interleave_equal` is the
// semantic equality and recovers the h-chain.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dehnkit/factors.hpp"

namespace dehnkit {

class AmalgamWord {
 public:
  AmalgamWord() = default;

  // Wraps letters that already form a normal form. Throws Error otherwise.
  static AmalgamWord from_normal_form(const FactorSystem& sys, std::vector<FactorWord> letters);
  // No checks; for internal use on known normal forms.
  static AmalgamWord adopt(std::vector<FactorWord> letters) {
    AmalgamWord w;
    w.letters_ = std::move(letters);
    return w;
  }

  const std::vector<FactorWord>& letters() const noexcept { return letters_; }
  const FactorWord& operator[](std::size_t i) const { return letters_[i]; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Literal equality of the stored normal forms.
  friend bool operator==(const AmalgamWord&, const AmalgamWord&) = default;
  friend auto operator<=>(const AmalgamWord& a, const AmalgamWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<FactorWord> letters_;
};

bool is_normal_form(const FactorSystem& sys, const std::vector<FactorWord>& letters);

// Canonical normal form of the product of `raw`.
AmalgamWord normalize(const FactorSystem& sys, const std::vector<FactorWord>& raw);
AmalgamWord canonical(const FactorSystem& sys, const AmalgamWord& w);
AmalgamWord inverse(const AmalgamWord& w);
AmalgamWord multiply(const FactorSystem& sys, const AmalgamWord& u, const AmalgamWord& v);
AmalgamWord letter_word(const FactorSystem& sys, const FactorWord& letter);

inline std::size_t length(const AmalgamWord& w) { return w.length(); }

// Parses the word grammar; each syllable is read in its home factor.
AmalgamWord parse_amalgam(const FactorSystem& sys, std::string_view text);
AmalgamWord from_raw(const FactorSystem& sys, const RawWord& raw);
// Syllables separated by spaces; `1` for the identity; a lone letter in H is
// tagged `@H`.
std::string format(const FactorSystem& sys, const AmalgamWord& w);
RawWord to_raw(const FactorSystem& sys, const AmalgamWord& w);

enum class Boundary { Clean, Merged, Cancelled };
const char* to_string(Boundary b) noexcept;

// Junction type between the last letter of one word and the first of the
// next.
Boundary junction(const FactorSystem& sys, const FactorWord& last, const FactorWord& first);

struct Composition {
  AmalgamWord word;
  Boundary boundary = Boundary::Clean;
};

Composition compose(const FactorSystem& sys, const AmalgamWord& u, const AmalgamWord& v);

// Checks that u and v are normal forms of one element. On success returns
// h1..h(n-1) with y1 = x1 h1^-1, yi = h(i-1) xi hi^-1, yn = h(n-1) xn, where
// x = u and y = v.
std::optional<std::vector<FactorWord>> interleave_equal(const FactorSystem& sys,
                                                        const AmalgamWord& u,
                                                        const AmalgamWord& v);

bool is_cyclically_reduced(const FactorSystem& sys, const AmalgamWord& w);
bool is_weakly_cyclically_reduced(const FactorSystem& sys, const AmalgamWord& w);

struct CyclicReduction;

// A cyclically reduced word regarded up to rotation. The stored rotation is
// H-standard: every letter starts with a non-shared syllable, which fixes
// the word inside its H-conjugacy class.
class CyclicWord {
 public:
  CyclicWord() = default;

  const AmalgamWord& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.length(); }
  bool empty() const noexcept { return word_.empty(); }

  AmalgamWord rotation(std::size_t start) const;
  // Offset of the lexicographically least rotation.
  std::size_t least_rotation_offset() const;
  AmalgamWord canonical_rotation() const { return rotation(least_rotation_offset()); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  friend CyclicReduction cyclically_reduce(const FactorSystem&, const AmalgamWord&);
  explicit CyclicWord(AmalgamWord w) : word_(std::move(w)) {}
  AmalgamWord word_;
};

struct CyclicReduction {
  CyclicWord cyclic;
  AmalgamWord conjugator;  // w = conjugator * cyclic * conjugator^-1
};

CyclicReduction cyclically_reduce(const FactorSystem& sys, const AmalgamWord& w);

}  // namespace dehnkit
