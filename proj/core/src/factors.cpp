#include "dehnkit/factors.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "dehnkit/errors.hpp"

namespace dehnkit {

const char* to_string(Factor f) noexcept { return f == Factor::K ? "K" : "L"; }

namespace {

// Appends `s` to a reduced syllable stack, merging or cancelling at the top.
void push_syllable(std::vector<Syllable>& stack, const Symbol symbol, const Exponent& exponent) {
  if (exponent == 0) {
    return;
  }
  if (!stack.empty() && stack.back().symbol == symbol) {
    stack.back().exponent += exponent;
    if (stack.back().exponent == 0) {
      stack.pop_back();
    }
    return;
  }
  stack.push_back({symbol, exponent});
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

FactorWord FactorWord::inverse() const {
  std::vector<Syllable> out;
  out.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    out.push_back({it->symbol, Exponent(-it->exponent)});
  }
  return FactorWord(factor_, std::move(out));
}

Exponent FactorWord::free_length() const {
  Exponent n = 0;
  for (const auto& s : syllables_) {
    n += abs(s.exponent);
  }
  return n;
}

std::strong_ordering operator<=>(const FactorWord& a, const FactorWord& b) {
  if (auto c = a.factor_ <=> b.factor_; c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.syllables_.begin(), a.syllables_.end(),
                                                b.syllables_.begin(), b.syllables_.end());
}

FactorWord multiply(const FactorWord& u, const FactorWord& v, Factor tag) {
  std::vector<Syllable> stack = u.syllables();
  for (const auto& s : v.syllables()) {
    push_syllable(stack, s.symbol, s.exponent);
  }
  return FactorWord(tag, std::move(stack));
}

// ---------------------------------------------------------------------------

FactorSystem FactorSystem::build(std::string name, const std::vector<std::string>& k_generators,
                                 const std::vector<std::string>& l_generators,
                                 const std::vector<std::string>& shared, const RawWord& x,
                                 const RawWord& y, const RawWord& a, const RawWord& h) {
  FactorSystem sys;
  sys.name_ = std::move(name);

  std::set<std::string> kset, lset, sset(shared.begin(), shared.end());
  for (const auto& g : k_generators) {
    if (!kset.insert(g).second) {
      throw ConfigError("K.generators: duplicate symbol '" + g + "'");
    }
  }
  for (const auto& g : l_generators) {
    if (!lset.insert(g).second) {
      throw ConfigError("L.generators: duplicate symbol '" + g + "'");
    }
  }
  if (sset.size() != shared.size()) {
    throw ConfigError("shared: duplicate symbol");
  }
  for (const auto& s : shared) {
    if (!kset.count(s) || !lset.count(s)) {
      throw ConfigError("shared: symbol '" + s + "' must appear in both K and L");
    }
  }
  for (const auto& g : k_generators) {
    if (lset.count(g) && !sset.count(g)) {
      throw ConfigError("symbol '" + g + "' appears in K and L but is not shared");
    }
  }

  for (const auto& g : k_generators) {
    sys.names_.push_back(g);
    sys.shared_.push_back(sset.count(g) > 0);
    sys.in_k_.push_back(true);
    sys.in_l_.push_back(sset.count(g) > 0);
  }
  for (const auto& g : l_generators) {
    if (sset.count(g)) {
      continue;
    }
    sys.names_.push_back(g);
    sys.shared_.push_back(false);
    sys.in_k_.push_back(false);
    sys.in_l_.push_back(true);
  }

  auto load = [&](const char* key, const RawWord& raw, Factor f) {
    try {
      return sys.reduce(raw, f);
    } catch (const UnknownSymbol& e) {
      throw ConfigError(std::string(key) + ": " + e.what() + " in factor " + to_string(f));
    }
  };
  sys.x_ = load("x", x, Factor::K);
  sys.y_ = load("y", y, Factor::K);
  sys.h_ = load("h", h, Factor::K);
  sys.a_ = load("a", a, Factor::L);
  return sys;
}

std::vector<std::string> FactorSystem::preset_names() { return {"amalgam-h1", "amalgam-h0"}; }

FactorSystem FactorSystem::preset(std::string_view name) {
  auto w = [](const char* s) { return parse_word(s); };
  if (name == "amalgam-h1") {
    return build("amalgam-h1", {"s", "x", "y", "h"}, {"s", "a"}, {"s"}, w("x"), w("y"), w("a"),
                 w("h"));
  }
  if (name == "amalgam-h0") {
    return build("amalgam-h0", {"x", "y", "h"}, {"a"}, {}, w("x"), w("y"), w("a"), w("h"));
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

FactorSystem FactorSystem::from_config(std::string_view text, std::string default_name) {
  std::map<std::string, std::string> kv;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::string t = trim(line);
    if (t.empty()) {
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    static const std::set<std::string> known = {"name", "K.generators", "L.generators",
                                                "shared", "x", "y", "a", "h"};
    if (!known.count(key)) {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError("config: duplicate key '" + key + "'");
    }
  }
  for (const char* required : {"K.generators", "L.generators", "x", "y", "a", "h"}) {
    if (!kv.count(required)) {
      throw ConfigError(std::string("config: missing key '") + required + "'");
    }
  }
  auto word = [&](const char* key) {
    try {
      return parse_word(kv.at(key));
    } catch (const ParseError& e) {
      throw ConfigError(std::string(key) + ": " + e.what());
    }
  };
  std::string name = kv.count("name") ? kv["name"] : std::move(default_name);
  return build(name, split_ws(kv["K.generators"]), split_ws(kv["L.generators"]),
               split_ws(kv.count("shared") ? kv["shared"] : ""), word("x"), word("y"), word("a"),
               word("h"));
}

FactorSystem FactorSystem::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return from_config(buf.str(), path.stem().string());
}

Alphabet FactorSystem::alphabet(Factor f) const {
  Alphabet out;
  for (Symbol s = 0; s < names_.size(); ++s) {
    if (in_factor(s, f)) {
      out.symbols.push_back(names_[s]);
      if (shared_[s]) {
        out.shared.push_back(names_[s]);
      }
    }
  }
  return out;
}

std::optional<Symbol> FactorSystem::find(std::string_view name) const {
  for (Symbol s = 0; s < names_.size(); ++s) {
    if (names_[s] == name) {
      return s;
    }
  }
  return std::nullopt;
}

bool FactorSystem::in_factor(Symbol s, Factor f) const {
  return f == Factor::K ? in_k_.at(s) : in_l_.at(s);
}

Factor FactorSystem::home_factor(Symbol s) const { return in_k_.at(s) ? Factor::K : Factor::L; }

std::vector<Symbol> FactorSystem::symbols() const {
  std::vector<Symbol> out(names_.size());
  for (Symbol s = 0; s < names_.size(); ++s) {
    out[s] = s;
  }
  return out;
}

FactorSystem FactorSystem::with_h(FactorWord h) const {
  FactorSystem copy = *this;
  copy.h_ = std::move(h);
  return copy;
}

FactorSystem FactorSystem::with_xy(FactorWord x, FactorWord y) const {
  FactorSystem copy = *this;
  copy.x_ = std::move(x);
  copy.y_ = std::move(y);
  return copy;
}

FactorWord FactorSystem::reduce(const RawWord& word, Factor factor) const {
  std::vector<Syllable> stack;
  for (const auto& s : word) {
    auto id = find(s.symbol);
    if (!id || !in_factor(*id, factor)) {
      throw UnknownSymbol(s.symbol);
    }
    push_syllable(stack, *id, s.exponent);
  }
  return FactorWord(factor, std::move(stack));
}

FactorWord FactorSystem::parse(std::string_view text, Factor factor) const {
  return reduce(parse_word(text), factor);
}

RawWord FactorSystem::to_raw(const FactorWord& w) const {
  RawWord out;
  out.reserve(w.size());
  for (const auto& s : w.syllables()) {
    out.push_back({names_.at(s.symbol), s.exponent});
  }
  return out;
}

std::string FactorSystem::format(const FactorWord& w) const {
  return w.empty() ? std::string("1") : format_raw(to_raw(w));
}

bool FactorSystem::in_H(const FactorWord& w) const {
  return std::all_of(w.syllables().begin(), w.syllables().end(),
                     [&](const Syllable& s) { return shared_.at(s.symbol); });
}

HCore FactorSystem::h_core(const FactorWord& w) const {
  const auto& syl = w.syllables();
  std::size_t b = 0;
  while (b < syl.size() && shared_.at(syl[b].symbol)) {
    ++b;
  }
  if (b == syl.size()) {
    throw InH();
  }
  std::size_t e = syl.size();
  while (shared_.at(syl[e - 1].symbol)) {
    --e;
  }
  auto slice = [&](std::size_t from, std::size_t to) {
    return FactorWord(w.factor(), std::vector<Syllable>(syl.begin() + from, syl.begin() + to));
  };
  return {slice(0, b), slice(b, e), slice(e, syl.size())};
}

bool FactorSystem::double_coset_member(const FactorWord& g, const FactorWord& t) const {
  return h_core(g).core.syllables() == h_core(t).core.syllables();
}

bool FactorSystem::good_fellows(const FactorWord& u, const FactorWord& v) const {
  if (u.factor() != v.factor() || in_H(u) || in_H(v)) {
    return false;
  }
  return !double_coset_member(u, v) && !double_coset_member(u, v.inverse());
}

bool FactorSystem::conjugate_intersection_trivial(const FactorWord& a) const { return !in_H(a); }

std::vector<std::string> FactorSystem::hypothesis_failures() const {
  std::vector<std::string> out;
  if (in_H(x_)) out.push_back("x not in H");
  if (in_H(y_)) out.push_back("y not in H");
  if (in_H(h_)) out.push_back("h not in H");
  if (in_H(a_)) out.push_back("a not in H");
  if (!good_fellows(x_, y_)) out.push_back("good_fellows(x,y)");
  if (!conjugate_intersection_trivial(a_)) out.push_back("a^-1 H a meets H trivially");
  return out;
}

void FactorSystem::validate() const {
  auto failures = hypothesis_failures();
  if (!failures.empty()) {
    throw HypothesisFailed(failures.front());
  }
}

std::vector<std::vector<Syllable>> reduced_words(const std::vector<Symbol>& generators,
                                                 unsigned max_length) {
  // Letters 2i and 2i+1 are generator i and its inverse.
  const int k = static_cast<int>(2 * generators.size());
  std::vector<std::vector<Syllable>> out;
  std::vector<int> word;
  auto emit = [&] {
    std::vector<Syllable> syl;
    for (int letter : word) {
      push_syllable(syl, generators[letter / 2], Exponent(letter % 2 == 0 ? 1 : -1));
    }
    out.push_back(std::move(syl));
  };
  // Breadth by length gives shortlex order.
  for (unsigned len = 1; len <= max_length; ++len) {
    word.assign(len, 0);
    // Depth-first over reduced words of this length.
    std::function<void(unsigned)> rec = [&](unsigned pos) {
      if (pos == len) {
        emit();
        return;
      }
      for (int letter = 0; letter < k; ++letter) {
        if (pos > 0 && (letter ^ 1) == word[pos - 1]) {
          continue;
        }
        word[pos] = letter;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return out;
}

std::vector<FactorWord> factor_ball(const FactorSystem& sys, Factor f, unsigned radius) {
  std::vector<Symbol> gens;
  for (Symbol s : sys.symbols()) {
    if (sys.in_factor(s, f)) {
      gens.push_back(s);
    }
  }
  std::vector<FactorWord> out;
  for (auto& syl : reduced_words(gens, radius)) {
    out.emplace_back(f, std::move(syl));
  }
  return out;
}

}  // namespace dehnkit
