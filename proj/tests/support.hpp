#pragma once

#include <random>

#include "dehnkit/amalgam.hpp"

namespace support {

using namespace dehnkit;

// Random freely reduced word over all generators, free length <= max_len.
inline AmalgamWord random_word(const FactorSystem& sys, std::mt19937_64& rng, int max_len) {
  auto syms = sys.symbols();
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, syms.size() - 1);
  std::bernoulli_distribution sign(0.5);
  RawWord raw;
  for (int i = len(rng); i > 0; --i) {
    raw.push_back({sys.symbol_name(syms[pick(rng)]), Exponent(sign(rng) ? 1 : -1)});
  }
  return from_raw(sys, raw);
}

// Random letter of factor f outside H: 1 to 3 syllables, at least one
// private.
inline FactorWord random_letter(const FactorSystem& sys, std::mt19937_64& rng, Factor f) {
  std::vector<Symbol> all, priv;
  for (Symbol s : sys.symbols()) {
    if (sys.in_factor(s, f)) {
      all.push_back(s);
      if (!sys.is_shared(s)) {
        priv.push_back(s);
      }
    }
  }
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> count(0, 2);
  for (;;) {
    RawWord raw;
    auto add = [&](Symbol s) {
      int e = 0;
      while (e == 0) e = exp(rng);
      raw.push_back({sys.symbol_name(s), Exponent(e)});
    };
    for (int i = count(rng); i > 0; --i) add(all[rng() % all.size()]);
    add(priv[rng() % priv.size()]);
    for (int i = count(rng); i > 0; --i) add(all[rng() % all.size()]);
    FactorWord w = sys.reduce(raw, f);
    if (!sys.in_H(w)) {
      return w;
    }
  }
}

// Canonical normal form with exactly n letters.
inline AmalgamWord random_normal_form(const FactorSystem& sys, std::mt19937_64& rng,
                                      std::size_t n) {
  std::vector<FactorWord> letters;
  Factor f = rng() % 2 ? Factor::K : Factor::L;
  for (std::size_t i = 0; i < n; ++i) {
    letters.push_back(random_letter(sys, rng, f));
    f = other(f);
  }
  return normalize(sys, letters);
}

// Random element of H with free length <= 3 (identity allowed).
inline FactorWord random_h(const FactorSystem& sys, std::mt19937_64& rng) {
  std::vector<Symbol> shared;
  for (Symbol s : sys.symbols()) {
    if (sys.is_shared(s)) shared.push_back(s);
  }
  std::vector<Syllable> syl;
  if (!shared.empty()) {
    std::uniform_int_distribution<int> exp(-3, 3);
    int e = exp(rng);
    if (e != 0) syl.push_back({shared[rng() % shared.size()], Exponent(e)});
  }
  return FactorWord(Factor::K, std::move(syl));
}

}  // namespace support
