#include "dehnkit/amalgam.hpp"

#include "dehnkit/errors.hpp"
#include "dehnkit/rotation.hpp"

namespace dehnkit {

namespace {

// Stack of letters kept as a normal form: alternating factors, no letter in
// H unless it is the only one.
class LetterStack {
 public:
  explicit LetterStack(const FactorSystem& sys) : sys_(sys) {}

  void reserve(std::size_t n) { stack_.reserve(n); }

  void push(FactorWord letter) {
    for (;;) {
      if (letter.empty()) {
        return;
      }
      if (stack_.empty()) {
        stack_.push_back(std::move(letter));
        return;
      }
      FactorWord& top = stack_.back();
      const bool top_h = sys_.in_H(top);
      const bool letter_h = sys_.in_H(letter);
      if (!top_h && !letter_h && top.factor() != letter.factor()) {
        stack_.push_back(std::move(letter));
        return;
      }
      Factor tag = top_h ? letter.factor() : top.factor();
      FactorWord combined = multiply(top, letter, tag);
      stack_.pop_back();
      if (combined.empty()) {
        return;
      }
      if (!sys_.in_H(combined) || stack_.empty()) {
        // The new top, if any, lies in the other factor.
        stack_.push_back(std::move(combined));
        return;
      }
      letter = std::move(combined);
    }
  }

  std::vector<FactorWord> take() && { return std::move(stack_); }

 private:
  const FactorSystem& sys_;
  std::vector<FactorWord> stack_;
};

FactorWord slice(const FactorWord& w, std::size_t from, std::size_t to) {
  return FactorWord(w.factor(), std::vector<Syllable>(w.syllables().begin() + from,
                                                      w.syllables().begin() + to));
}

std::size_t h_prefix_size(const FactorSystem& sys, const FactorWord& w) {
  std::size_t b = 0;
  while (b < w.size() && sys.is_shared(w.syllables()[b].symbol)) {
    ++b;
  }
  return b;
}

// Pushes the H-prefix of every letter but the first into its left neighbour.
void push_prefixes_left(const FactorSystem& sys, std::vector<FactorWord>& letters) {
  if (letters.size() == 1 && sys.in_H(letters[0])) {
    letters[0] = letters[0].retagged(Factor::K);
    return;
  }
  for (std::size_t i = letters.size(); i-- > 1;) {
    std::size_t b = h_prefix_size(sys, letters[i]);
    if (b == 0) {
      continue;
    }
    FactorWord prefix = slice(letters[i], 0, b);
    letters[i] = slice(letters[i], b, letters[i].size());
    letters[i - 1] = multiply(letters[i - 1], prefix, letters[i - 1].factor());
  }
}

}  // namespace

AmalgamWord AmalgamWord::from_normal_form(const FactorSystem& sys, std::vector<FactorWord> letters) {
  if (!is_normal_form(sys, letters)) {
    throw Error("letters do not form a normal form");
  }
  return adopt(std::move(letters));
}

bool is_normal_form(const FactorSystem& sys, const std::vector<FactorWord>& letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].empty()) {
      return false;
    }
    if (letters.size() >= 2 && sys.in_H(letters[i])) {
      return false;
    }
    if (i > 0 && letters[i].factor() == letters[i - 1].factor()) {
      return false;
    }
  }
  return true;
}

AmalgamWord normalize(const FactorSystem& sys, const std::vector<FactorWord>& raw) {
  LetterStack stack(sys);
  stack.reserve(raw.size());
  for (const auto& letter : raw) {
    stack.push(letter);
  }
  std::vector<FactorWord> letters = std::move(stack).take();
  push_prefixes_left(sys, letters);
  return AmalgamWord::adopt(std::move(letters));
}

AmalgamWord canonical(const FactorSystem& sys, const AmalgamWord& w) {
  return normalize(sys, w.letters());
}

AmalgamWord inverse(const AmalgamWord& w) {
  std::vector<FactorWord> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return AmalgamWord::adopt(std::move(out));
}

AmalgamWord multiply(const FactorSystem& sys, const AmalgamWord& u, const AmalgamWord& v) {
  LetterStack stack(sys);
  stack.reserve(u.length() + v.length());
  for (const auto& letter : u.letters()) {
    stack.push(letter);
  }
  for (const auto& letter : v.letters()) {
    stack.push(letter);
  }
  std::vector<FactorWord> letters = std::move(stack).take();
  push_prefixes_left(sys, letters);
  return AmalgamWord::adopt(std::move(letters));
}

AmalgamWord letter_word(const FactorSystem& sys, const FactorWord& letter) {
  if (letter.empty()) {
    return {};
  }
  return normalize(sys, {letter});
}

AmalgamWord from_raw(const FactorSystem& sys, const RawWord& raw) {
  std::vector<FactorWord> letters;
  letters.reserve(raw.size());
  for (const auto& s : raw) {
    auto id = sys.find(s.symbol);
    if (!id) {
      throw UnknownSymbol(s.symbol);
    }
    letters.emplace_back(sys.home_factor(*id), std::vector<Syllable>{{*id, s.exponent}});
  }
  return normalize(sys, letters);
}

AmalgamWord parse_amalgam(const FactorSystem& sys, std::string_view text) {
  return from_raw(sys, parse_word(text));
}

RawWord to_raw(const FactorSystem& sys, const AmalgamWord& w) {
  RawWord out;
  for (const auto& letter : w.letters()) {
    RawWord part = sys.to_raw(letter);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string format(const FactorSystem& sys, const AmalgamWord& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out = format_raw(to_raw(sys, w));
  if (w.length() == 1 && sys.in_H(w[0])) {
    out += " @H";
  }
  return out;
}

const char* to_string(Boundary b) noexcept {
  switch (b) {
    case Boundary::Clean:
      return "clean";
    case Boundary::Merged:
      return "merged";
    case Boundary::Cancelled:
      return "cancelled";
  }
  return "?";
}

Boundary junction(const FactorSystem& sys, const FactorWord& last, const FactorWord& first) {
  const bool last_h = sys.in_H(last);
  const bool first_h = sys.in_H(first);
  if (!last_h && !first_h && last.factor() != first.factor()) {
    return Boundary::Clean;
  }
  Factor tag = last_h ? first.factor() : last.factor();
  return sys.in_H(multiply(last, first, tag)) ? Boundary::Cancelled : Boundary::Merged;
}

Composition compose(const FactorSystem& sys, const AmalgamWord& u, const AmalgamWord& v) {
  Composition out;
  if (!u.empty() && !v.empty()) {
    out.boundary = junction(sys, u.letters().back(), v.letters().front());
  }
  out.word = multiply(sys, u, v);
  return out;
}

std::optional<std::vector<FactorWord>> interleave_equal(const FactorSystem& sys,
                                                        const AmalgamWord& u,
                                                        const AmalgamWord& v) {
  const std::size_t n = u.length();
  if (n != v.length()) {
    return std::nullopt;
  }
  std::vector<FactorWord> chain;
  if (n == 0) {
    return chain;
  }
  if (n == 1) {
    if (!multiply(u[0].inverse(), v[0], u[0].factor()).empty()) {
      return std::nullopt;
    }
    return chain;
  }
  chain.reserve(n - 1);
  FactorWord carry;  // h(i-1)
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (u[i].factor() != v[i].factor()) {
      return std::nullopt;
    }
    Factor f = u[i].factor();
    FactorWord hi = multiply(multiply(v[i].inverse(), carry, f), u[i], f);
    if (!sys.in_H(hi)) {
      return std::nullopt;
    }
    chain.push_back(hi.retagged(Factor::K));
    carry = std::move(hi);
  }
  const Factor f = u[n - 1].factor();
  if (v[n - 1].factor() != f || multiply(carry, u[n - 1], f).syllables() != v[n - 1].syllables()) {
    return std::nullopt;
  }
  return chain;
}

bool is_cyclically_reduced(const FactorSystem& sys, const AmalgamWord& w) {
  (void)sys;
  return w.length() <= 1 || w.letters().front().factor() != w.letters().back().factor();
}

bool is_weakly_cyclically_reduced(const FactorSystem& sys, const AmalgamWord& w) {
  if (w.length() <= 1) {
    return true;
  }
  const auto& first = w.letters().front();
  const auto& last = w.letters().back();
  if (first.factor() != last.factor()) {
    return true;
  }
  return !sys.in_H(multiply(last, first, last.factor()));
}

AmalgamWord CyclicWord::rotation(std::size_t start) const {
  const auto& ls = word_.letters();
  std::vector<FactorWord> out;
  out.reserve(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    out.push_back(ls[(start + i) % ls.size()]);
  }
  return AmalgamWord::adopt(std::move(out));
}

std::size_t CyclicWord::least_rotation_offset() const { return least_rotation(word_.letters()); }

CyclicReduction cyclically_reduce(const FactorSystem& sys, const AmalgamWord& w) {
  std::vector<FactorWord> ls = canonical(sys, w).letters();
  std::size_t i = 0;
  std::size_t j = ls.empty() ? 0 : ls.size() - 1;
  while (i < j && ls[i].factor() == ls[j].factor()) {
    FactorWord merged = multiply(ls[j], ls[i], ls[j].factor());
    ++i;
    if (sys.in_H(merged)) {
      // j - 1 >= i here: same-factor ends are an even distance apart.
      --j;
      ls[j] = multiply(ls[j], merged, ls[j].factor());
    } else {
      ls[j] = std::move(merged);
    }
  }
  std::vector<FactorWord> conj(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<FactorWord> core;
  if (!ls.empty()) {
    core.assign(ls.begin() + static_cast<std::ptrdiff_t>(i),
                ls.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  }

  // Merging the ends can expose an H-prefix on the last letter.
  if (core.size() >= 2) {
    push_prefixes_left(sys, core);
  }

  // H-standardize: conjugate the leading H-prefix around to the back.
  FactorWord prefix;
  if (!core.empty() && !sys.in_H(core.front())) {
    std::size_t b = h_prefix_size(sys, core.front());
    if (b > 0) {
      prefix = slice(core.front(), 0, b);
      core.front() = slice(core.front(), b, core.front().size());
      core.back() = multiply(core.back(), prefix, core.back().factor());
    }
  }
  if (core.size() == 1 && sys.in_H(core.front())) {
    core.front() = core.front().retagged(Factor::K);
  }

  CyclicReduction out;
  out.conjugator = AmalgamWord::adopt(std::move(conj));
  if (!prefix.empty()) {
    out.conjugator = multiply(sys, out.conjugator, letter_word(sys, prefix));
  }
  out.cyclic = CyclicWord(AmalgamWord::adopt(std::move(core)));
  return out;
}

}  // namespace dehnkit
