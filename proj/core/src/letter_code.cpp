#include "dehnkit/letter_code.hpp"

#include <stdexcept>

namespace dehnkit {

namespace {

std::pair<FactorWord, std::vector<Syllable>> split(const FactorSystem& sys,
                                                   const FactorWord& letter) {
  if (sys.in_H(letter)) {
    return {letter.retagged(Factor::K), {}};
  }
  HCore hc = sys.h_core(letter);
  if (!hc.prefix.empty()) {
    throw std::logic_error("letter code expects H-standard letters");
  }
  return {std::move(hc.core), hc.suffix.syllables()};
}

}  // namespace

std::pair<int, int> LetterCode::intern(const FactorSystem& sys, const FactorWord& letter) {
  auto [core, tail] = split(sys, letter);
  auto c = cores_.try_emplace(std::move(core), static_cast<int>(cores_.size())).first->second;
  auto t = tails_.try_emplace(std::move(tail), static_cast<int>(tails_.size())).first->second;
  return {2 * c, 2 * t + 1};
}

std::pair<int, int> LetterCode::lookup(const FactorSystem& sys, const FactorWord& letter) const {
  auto [core, tail] = split(sys, letter);
  auto c = cores_.find(core);
  auto t = tails_.find(tail);
  return {c == cores_.end() ? kUnknown : 2 * c->second,
          t == tails_.end() ? kUnknown : 2 * t->second + 1};
}

std::vector<int> LetterCode::intern_word(const FactorSystem& sys, const AmalgamWord& w) {
  std::vector<int> out;
  out.reserve(2 * w.length());
  for (const auto& letter : w.letters()) {
    auto [c, t] = intern(sys, letter);
    out.push_back(c);
    out.push_back(t);
  }
  return out;
}

std::vector<int> LetterCode::lookup_word(const FactorSystem& sys, const AmalgamWord& w) const {
  std::vector<int> out;
  out.reserve(2 * w.length());
  for (const auto& letter : w.letters()) {
    auto [c, t] = lookup(sys, letter);
    out.push_back(c);
    out.push_back(t);
  }
  return out;
}

}  // namespace dehnkit
