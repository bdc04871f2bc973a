#pragma once

// Factor groups K and L and the amalgamated subgroup H.
//
// Both factors are free groups over finite alphabets and H is the free factor
// generated by the shared symbols. With that restriction every subgroup
// predicate used downstream is decided by inspecting reduced words:
//
//  * w is in H iff every syllable uses a shared symbol;
//  * every w outside H splits uniquely as prefix * core * suffix with prefix
//    and suffix in H and core starting and ending with a non-shared syllable;
//  * g is in H t H iff the cores of g and t agree;
//  * a^-1 H a meets H trivially iff a is not in H (free factors are
//    malnormal).

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dehnkit/bigint.hpp"
#include "dehnkit/grammar.hpp"

namespace dehnkit {

enum class Factor : std::uint8_t { K = 0, L = 1 };

constexpr Factor other(Factor f) noexcept { return f == Factor::K ? Factor::L : Factor::K; }
const char* to_string(Factor f) noexcept;

using Symbol = std::uint32_t;

struct Syllable {
  Symbol symbol = 0;
  Exponent exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend std::strong_ordering operator<=>(const Syllable& a, const Syllable& b) {
    if (auto c = a.symbol <=> b.symbol; c != 0) {
      return c;
    }
    if (a.exponent < b.exponent) {
      return std::strong_ordering::less;
    }
    return a.exponent == b.exponent ? std::strong_ordering::equal : std::strong_ordering::greater;
  }
};

// A freely reduced word living inside one factor.
class FactorWord {
 public:
  FactorWord() = default;
  // `syllables` must already be freely reduced.
  FactorWord(Factor factor, std::vector<Syllable> syllables)
      : factor_(factor), syllables_(std::move(syllables)) {}

  Factor factor() const noexcept { return factor_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t size() const noexcept { return syllables_.size(); }

  FactorWord inverse() const;
  FactorWord retagged(Factor f) const { return FactorWord(f, syllables_); }
  // Sum of |exponent| over syllables.
  Exponent free_length() const;

  friend bool operator==(const FactorWord&, const FactorWord&) = default;
  friend std::strong_ordering operator<=>(const FactorWord& a, const FactorWord& b);

 private:
  Factor factor_ = Factor::K;
  std::vector<Syllable> syllables_;
};

// Free reduction of u*v, tagged with `tag`.
FactorWord multiply(const FactorWord& u, const FactorWord& v, Factor tag);

struct Alphabet {
  std::vector<std::string> symbols;
  std::vector<std::string> shared;
};

struct HCore {
  FactorWord prefix;
  FactorWord core;
  FactorWord suffix;
};

class FactorSystem {
 public:
  // Validates the alphabet invariants (unique names, shared symbols present
  // in both factors, disjoint private symbols) and reduces x, y, h in K and
  // a in L. Throws ConfigError. The group-theoretic hypotheses are checked
  // separately by `validate`.
  static FactorSystem build(std::string name, const std::vector<std::string>& k_generators,
                            const std::vector<std::string>& l_generators,
                            const std::vector<std::string>& shared, const RawWord& x,
                            const RawWord& y, const RawWord& a, const RawWord& h);

  // "amalgam-h1": K = F(s,x,y,h), L = F(s,a), H = <s>.
  // "amalgam-h0": K = F(x,y,h), L = F(a), H = 1.
  static FactorSystem preset(std::string_view name);
  static std::vector<std::string> preset_names();

  // Flat `key = value` lines; keys K.generators, L.generators, shared, x, y,
  // a, h and optionally name. `#` starts a comment.
  static FactorSystem from_config(std::string_view text, std::string default_name = "config");
  static FactorSystem from_file(const std::filesystem::path& path);

  const std::string& name() const noexcept { return name_; }
  Alphabet alphabet(Factor f) const;
  std::size_t symbol_count() const noexcept { return names_.size(); }
  const std::string& symbol_name(Symbol s) const { return names_.at(s); }
  std::optional<Symbol> find(std::string_view name) const;
  bool is_shared(Symbol s) const { return shared_.at(s); }
  bool in_factor(Symbol s, Factor f) const;
  // The factor a symbol is read in when no tag is given: K for shared and
  // K-private symbols, L for L-private ones.
  Factor home_factor(Symbol s) const;
  // All symbols in declaration order (K generators, then L-private).
  std::vector<Symbol> symbols() const;

  const FactorWord& x() const noexcept { return x_; }
  const FactorWord& y() const noexcept { return y_; }
  const FactorWord& a() const noexcept { return a_; }
  const FactorWord& h() const noexcept { return h_; }
  FactorSystem with_h(FactorWord h) const;
  FactorSystem with_xy(FactorWord x, FactorWord y) const;

  // Throws UnknownSymbol when a symbol is outside the factor's alphabet.
  FactorWord reduce(const RawWord& word, Factor factor) const;
  FactorWord parse(std::string_view text, Factor factor) const;
  std::string format(const FactorWord& w) const;
  RawWord to_raw(const FactorWord& w) const;

  bool in_H(const FactorWord& w) const;
  // Throws InH when w is in H.
  HCore h_core(const FactorWord& w) const;
  // g in H t H. Throws InH if either argument is in H.
  bool double_coset_member(const FactorWord& g, const FactorWord& t) const;
  bool good_fellows(const FactorWord& u, const FactorWord& v) const;
  // a^-1 H a meets H only in 1. Reduces to a not in H because H is a free
  // factor; tests cross-check this against bounded enumeration.
  bool conjugate_intersection_trivial(const FactorWord& a) const;

  // Names of violated hypotheses (x, y, h in K\H; a in L\H; x, y good
  // fellows; a^-1 H a meets H trivially). Empty when all hold.
  std::vector<std::string> hypothesis_failures() const;
  // Throws HypothesisFailed naming the first violated hypothesis.
  void validate() const;

 private:
  FactorSystem() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::vector<bool> shared_;
  std::vector<bool> in_k_;
  std::vector<bool> in_l_;
  FactorWord x_, y_, a_, h_;
};

// All nonidentity freely reduced words over `generators` of free length at
// most `max_length`, in shortlex order (generator order as given, each
// generator before its inverse). Each word is returned as reduced
// syllables.
std::vector<std::vector<Syllable>> reduced_words(const std::vector<Symbol>& generators,
                                                 unsigned max_length);

// Nonidentity elements of the factor with free length <= radius.
std::vector<FactorWord> factor_ball(const FactorSystem& sys, Factor f, unsigned radius);

}  // namespace dehnkit
