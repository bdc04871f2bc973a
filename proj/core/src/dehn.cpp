#include "dehnkit/dehn.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dehnkit/errors.hpp"

namespace dehnkit {

const char* to_string(Outcome o) noexcept {
  return o == Outcome::Trivial ? "trivial" : "nontrivial";
}

namespace {

std::vector<int> reversed_doubled(const std::vector<int>& code) {
  std::vector<int> out;
  out.reserve(2 * code.size());
  out.insert(out.end(), code.rbegin(), code.rend());
  out.insert(out.end(), code.rbegin(), code.rend());
  return out;
}

bool better(const FragmentMatch& a, const FragmentMatch& b) {
  // a strictly beats b: larger ratio only; earlier candidates win ties.
  return a.ratio > b.ratio;
}

// Rotation of an H-standard cyclic word, itself H-standard.
CyclicWord rotate(const FactorSystem& sys, const CyclicWord& c, std::size_t start) {
  return cyclically_reduce(sys, c.rotation(start)).cyclic;
}

AmalgamWord prefix_of(const AmalgamWord& w, std::size_t n) {
  return AmalgamWord::adopt(std::vector<FactorWord>(w.letters().begin(),
                                                    w.letters().begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace

DehnEngine::DehnEngine(SymmetrizedSet R, DehnOptions options)
    : R_(std::move(R)), options_(options) {
  certificate_ = check_c_prime(R_, Rational(1, 10));
  if (!certificate_.certified && options_.require_certificate) {
    throw UncertifiedSet();
  }
  automata_.reserve(R_.bases().size());
  for (const auto& base : R_.bases()) {
    automata_.emplace_back(reversed_doubled(base.code));
  }
}

std::vector<FragmentMatch> DehnEngine::fragments(const CyclicWord& w) const {
  std::vector<FragmentMatch> out;
  const std::size_t m = w.length();
  if (m == 0) {
    return out;
  }
  const auto& sys = R_.system();
  std::vector<int> q = R_.code().lookup_word(sys, w.word());
  std::vector<int> rq;
  rq.reserve(2 * q.size());
  rq.insert(rq.end(), q.rbegin(), q.rend());
  rq.insert(rq.end(), q.rbegin(), q.rend());

  const auto& bases = R_.bases();
  std::vector<std::vector<SuffixAutomaton::Match>> stats(bases.size());
  for (std::size_t b = 0; b < bases.size(); ++b) {
    stats[b] = automata_[b].matching_statistics(rq);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = 4 * m - 1 - 2 * i;
    for (std::size_t b = 0; b < bases.size(); ++b) {
      const auto& hit = stats[b][j];
      if (hit.length <= 0) {
        continue;
      }
      const std::size_t n = bases[b].word.length();
      const std::size_t letters =
          std::min<std::size_t>((static_cast<std::size_t>(hit.length) + 1) / 2, std::min(m, n));
      const std::size_t start = 4 * n - 1 - static_cast<std::size_t>(hit.end);
      FragmentMatch f;
      f.position = i;
      f.length = letters;
      f.relator = {b, (start / 2) % bases[b].period};
      f.relator_length = n;
      f.ratio = Rational(static_cast<std::int64_t>(letters), static_cast<std::int64_t>(n));
      out.push_back(f);
    }
  }
  return out;
}

std::optional<FragmentMatch> DehnEngine::max_fragment(const CyclicWord& w) const {
  std::optional<FragmentMatch> best;
  for (const auto& f : fragments(w)) {
    if (!best || better(f, *best)) {
      best = f;
    }
  }
  return best;
}

DehnVerdict DehnEngine::membership(const AmalgamWord& w) const { return run(w, options_.seed); }

DehnVerdict DehnEngine::membership(const AmalgamWord& w, std::uint64_t seed) const {
  return run(w, seed);
}

DehnVerdict DehnEngine::run(const AmalgamWord& w, std::uint64_t seed) const {
  const auto& sys = R_.system();
  std::mt19937_64 rng(seed);
  DehnVerdict verdict;

  CyclicReduction cr = cyclically_reduce(sys, w);
  AmalgamWord Y = std::move(cr.conjugator);
  CyclicWord C = std::move(cr.cyclic);
  // Invariant: w = (product of recorded conjugates) * Y C Y^-1.
  while (!C.empty()) {
    const std::size_t shift = C.least_rotation_offset();
    if (shift != 0) {
      Y = multiply(sys, Y, prefix_of(C.word(), shift));
      C = rotate(sys, C, shift);
    }
    std::optional<FragmentMatch> pick;
    if (options_.tie_break == TieBreak::Random) {
      std::vector<FragmentMatch> long_ones;
      for (const auto& f : fragments(C)) {
        if (2 * f.length > f.relator_length) {
          long_ones.push_back(f);
        }
      }
      if (!long_ones.empty()) {
        std::uniform_int_distribution<std::size_t> dist(0, long_ones.size() - 1);
        pick = long_ones[dist(rng)];
      } else {
        pick = max_fragment(C);
      }
    } else {
      pick = max_fragment(C);
    }
    if (!pick || 2 * pick->length <= pick->relator_length) {
      verdict.outcome = Outcome::Nontrivial;
      verdict.witness = pick ? pick->ratio : Rational(0);
      verdict.residue = C;
      verdict.sound = certified();
      return verdict;
    }

    const std::size_t m = C.length();
    AmalgamWord g = multiply(sys, Y, prefix_of(C.word(), pick->position));
    AmalgamWord D = C.rotation(pick->position);
    AmalgamWord rho = R_.representative(pick->relator);
    AmalgamWord rest = multiply(sys, inverse(rho), D);

    RewriteStep step;
    step.conjugator = g;
    step.relator = pick->relator;
    step.position = pick->position;
    step.fragment_length = pick->length;
    step.relator_length = pick->relator_length;
    step.length_before = m;

    cr = cyclically_reduce(sys, rest);
    Y = multiply(sys, g, cr.conjugator);
    C = std::move(cr.cyclic);
    step.length_after = C.length();
    if (step.length_after >= m) {
      throw std::logic_error("Dehn rewrite did not shorten the word");
    }
    verdict.trace.push_back(std::move(step));
  }
  verdict.outcome = Outcome::Trivial;
  return verdict;
}

bool DehnEngine::replay(const AmalgamWord& w, const DehnVerdict& v) const {
  if (v.outcome != Outcome::Trivial) {
    return false;
  }
  const auto& sys = R_.system();
  const auto& bases = R_.bases();
  AmalgamWord product;
  std::size_t previous = 0;
  for (std::size_t k = 0; k < v.trace.size(); ++k) {
    const auto& step = v.trace[k];
    if (step.relator.base >= bases.size() ||
        step.relator.rotation >= bases[step.relator.base].period) {
      return false;
    }
    if (step.length_after >= step.length_before || (k > 0 && step.length_before > previous)) {
      return false;
    }
    previous = step.length_after;
    AmalgamWord rho = R_.representative(step.relator);
    AmalgamWord term = multiply(sys, multiply(sys, step.conjugator, rho), inverse(step.conjugator));
    product = multiply(sys, product, term);
  }
  return interleave_equal(sys, canonical(sys, w), product).has_value();
}

bool DehnEngine::ball_injectivity(unsigned radius) const {
  const auto& sys = R_.system();
  for (Factor f : {Factor::K, Factor::L}) {
    for (const auto& word : factor_ball(sys, f, radius)) {
      if (membership(letter_word(sys, word)).outcome == Outcome::Trivial) {
        return false;
      }
    }
  }
  return true;
}

std::optional<FragmentMatch> max_fragment(const CyclicWord& w, const SymmetrizedSet& R) {
  return DehnEngine(R).max_fragment(w);
}

DehnVerdict membership(const AmalgamWord& w, const SymmetrizedSet& R) {
  return DehnEngine(R).membership(w);
}

bool ball_injectivity(const SymmetrizedSet& R, unsigned radius) {
  return DehnEngine(R).ball_injectivity(radius);
}

}  // namespace dehnkit
