#include "dehnkit/grammar.hpp"

#include <cctype>
#include <sstream>

#include "dehnkit/errors.hpp"

namespace dehnkit {

namespace {

constexpr std::size_t kMaxExpandedSyllables = 50'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawWord parse() {
    RawWord out = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return out;
  }

 private:
  RawWord parse_sequence() {
    RawWord out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') {
        return out;
      }
      char c = text_[pos_];
      if (c == '@') {
        ++pos_;
        std::string tag = identifier();
        if (tag != "H") {
          fail("unknown tag '@" + tag + "'");
        }
        continue;
      }
      if (c == '(') {
        ++pos_;
        RawWord inner = parse_sequence();
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ')') {
          fail("missing ')'");
        }
        ++pos_;
        Exponent k = optional_power();
        append_power(out, inner, k);
        continue;
      }
      if (c == '1' && (pos_ + 1 == text_.size() || text_[pos_ + 1] == ')' ||
                       std::isspace(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;  // explicit identity
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string sym = identifier();
        Exponent k = optional_power();
        if (k != 0) {
          out.push_back({std::move(sym), k});
        }
        continue;
      }
      fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  void append_power(RawWord& out, const RawWord& inner, const Exponent& k) {
    if (k == 0 || inner.empty()) {
      return;
    }
    RawWord unit = k > 0 ? inner : inverse(inner);
    Exponent reps = k > 0 ? k : Exponent(-k);
    if (reps * unit.size() + out.size() > kMaxExpandedSyllables) {
      fail("power expands beyond the syllable limit");
    }
    auto n = reps.convert_to<std::size_t>();
    out.reserve(out.size() + n * unit.size());
    for (std::size_t i = 0; i < n; ++i) {
      out.insert(out.end(), unit.begin(), unit.end());
    }
  }

  Exponent optional_power() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '^') {
      return 1;
    }
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected an integer after '^'");
    }
    Exponent k(std::string(text_.substr(start, pos_ - start)));
    return negative ? Exponent(-k) : k;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a symbol");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word grammar, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RawWord parse_word(std::string_view text) { return Parser(text).parse(); }

RawWord inverse(const RawWord& w) {
  RawWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->symbol, Exponent(-it->exponent)});
  }
  return out;
}

std::string format_raw(const RawWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w) {
    if (!first) {
      os << ' ';
    }
    first = false;
    os << s.symbol;
    if (s.exponent != 1) {
      os << '^' << s.exponent;
    }
  }
  return os.str();
}

}  // namespace dehnkit
