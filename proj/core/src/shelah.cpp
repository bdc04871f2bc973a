#include "dehnkit/shelah.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "dehnkit/errors.hpp"

namespace dehnkit {

StepPresentation assemble_step(const FactorSystem& sys, const FactorWord& h_n, unsigned cap) {
  for (const auto& syl : h_n.syllables()) {
    if (!sys.in_factor(syl.symbol, Factor::K)) {
      throw HypothesisFailed("h_n in K");
    }
  }
  FactorWord h = multiply(h_n.retagged(Factor::K).inverse(), sys.x(), Factor::K);
  if (sys.in_H(h)) {
    throw HypothesisFailed("h not in H");
  }
  FactorSystem next = sys.with_h(h);
  next.validate();
  StepPresentation step{next, h_n.retagged(Factor::K), h, cap, {}};
  step.relator = build_r0(step.system, cap);
  return step;
}

namespace {

template <class Item, class Check>
BallCheck parallel_check(const std::vector<Item>& items, Check check) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  const std::size_t chunk = (items.size() + workers - 1) / std::max<std::size_t>(workers, 1);
  std::vector<std::future<BallCheck>> jobs;
  for (std::size_t lo = 0; lo < items.size(); lo += chunk) {
    const std::size_t hi = std::min(items.size(), lo + chunk);
    jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
      BallCheck part;
      for (std::size_t i = lo; i < hi && part.passed; ++i) {
        check(items[i], part);
      }
      return part;
    }));
  }
  BallCheck out;
  for (auto& job : jobs) {
    BallCheck part = job.get();
    out.checked += part.checked;
    if (!part.passed && out.passed) {
      out.passed = false;
      out.counterexample = part.counterexample;
    }
  }
  return out;
}

}  // namespace

ConditionReport verify_conditions(const StepPresentation& step, unsigned radius) {
  const FactorSystem& sys = step.system;
  sys.validate();
  ConditionReport report;
  report.radius = radius;
  report.relator_length = step.relator.length();
  report.length_below_power = report.relator_length < report.power_exponent;

  DehnEngine engine(symmetrize(sys, {step.relator}));
  report.certificate = engine.certificate();

  // Any nonidentity element of N has more than 7/10 of a relator, so u in
  // K N reduces to u in K while |k^-1 u| stays below that.
  const std::size_t floor_len = report.certificate.report.min_relator_length;
  if (10 * static_cast<std::size_t>(radius + 1) >= 7 * floor_len) {
    throw ConfigError("radius " + std::to_string(radius) + " too large for the relator length");
  }

  auto trivial = [&](const AmalgamWord& w) {
    return engine.membership(w).outcome == Outcome::Trivial;
  };

  std::vector<AmalgamWord> kball;
  std::vector<AmalgamWord> lball;
  for (const auto& w : factor_ball(sys, Factor::K, radius)) {
    kball.push_back(letter_word(sys, w));
  }
  for (const auto& w : factor_ball(sys, Factor::L, radius)) {
    lball.push_back(letter_word(sys, w));
  }

  std::vector<AmalgamWord> factor_words = kball;
  factor_words.insert(factor_words.end(), lball.begin(), lball.end());
  report.embedding = parallel_check(factor_words, [&](const AmalgamWord& w, BallCheck& part) {
    ++part.checked;
    if (trivial(w)) {
      part.passed = false;
      part.counterexample = format(sys, w);
    }
  });

  std::vector<AmalgamWord> kwith1 = kball;
  kwith1.emplace_back();
  std::vector<AmalgamWord> lwith1 = lball;
  lwith1.emplace_back();
  report.intersection = parallel_check(kwith1, [&](const AmalgamWord& k, BallCheck& part) {
    for (const auto& l : lwith1) {
      AmalgamWord z = multiply(sys, k, inverse(l));
      if (z.empty()) {
        continue;
      }
      ++part.checked;
      if (trivial(z)) {
        part.passed = false;
        part.counterexample = format(sys, k) + " = " + format(sys, l);
        return;
      }
    }
  });

  std::vector<AmalgamWord> us;
  for (const auto& syl : reduced_words(sys.symbols(), radius)) {
    std::vector<FactorWord> letters;
    for (const auto& s : syl) {
      letters.emplace_back(sys.home_factor(s.symbol), std::vector<Syllable>{s});
    }
    AmalgamWord u = normalize(sys, letters);
    const bool in_k = u.empty() || (u.length() == 1 && (u[0].factor() == Factor::K || sys.in_H(u[0])));
    if (!in_k) {
      us.push_back(std::move(u));
    }
  }
  report.malnormality = parallel_check(us, [&](const AmalgamWord& u, BallCheck& part) {
    AmalgamWord ui = inverse(u);
    for (const auto& g : kball) {
      AmalgamWord conj = multiply(sys, multiply(sys, ui, g), u);
      for (const auto& g2 : kball) {
        ++part.checked;
        if (trivial(multiply(sys, conj, inverse(g2)))) {
          part.passed = false;
          part.counterexample =
              "u = " + format(sys, u) + ", g = " + format(sys, g) + ", g' = " + format(sys, g2);
          return;
        }
      }
    }
  });
  return report;
}

bool TopologyBase::passed() const {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    if (lv.g_verdict.outcome != Outcome::Nontrivial || !lv.level_certified) {
      return false;
    }
    if (lv.relator_verdict.outcome != Outcome::Trivial || !lv.relator_replays) {
      return false;
    }
    if (lv.relator_length <= 2 * lv.g.length()) {
      return false;
    }
    if (i > 0 && lv.k <= levels[i - 1].k) {
      return false;
    }
    if (i + 1 < levels.size()) {
      if (!lv.descent_verdict || lv.descent_verdict->outcome != Outcome::Nontrivial ||
          !lv.descent_certified) {
        return false;
      }
    }
  }
  return true;
}

std::vector<AmalgamWord> enumerate_elements(const FactorSystem& sys, std::size_t count) {
  std::vector<AmalgamWord> out;
  if (count == 0) {
    return out;
  }
  const std::vector<Symbol> gens = sys.symbols();
  for (unsigned len = 1; out.size() < count; ++len) {
    // reduced_words is cumulative; keep only the words of this length.
    for (const auto& syl : reduced_words(gens, len)) {
      Exponent free_len = 0;
      for (const auto& s : syl) {
        free_len += abs(s.exponent);
      }
      if (free_len != len) {
        continue;
      }
      std::vector<FactorWord> letters;
      for (const auto& s : syl) {
        letters.emplace_back(sys.home_factor(s.symbol), std::vector<Syllable>{s});
      }
      out.push_back(normalize(sys, letters));
      if (out.size() == count) {
        break;
      }
    }
  }
  return out;
}

TopologyBase build_topology_base(const StepPresentation& step, std::size_t count, unsigned cap,
                                 const TopologyOptions& options) {
  if (count > options.max_count) {
    throw CountTooLarge("count " + std::to_string(count) + " exceeds budget " +
                        std::to_string(options.max_count));
  }
  if (cap < 2) {
    throw CapTooSmall(cap);
  }
  const FactorSystem& sys = step.system;
  TopologyBase base;
  base.cap = cap;
  base.elements = enumerate_elements(sys, count);

  auto checked_length = [&](unsigned k) {
    std::uint64_t len = rn_length_formula(k, cap);
    if (len > options.max_relator_length) {
      throw CountTooLarge("relator r" + std::to_string(k) + " has " + std::to_string(len) +
                          " letters, above the budget of " +
                          std::to_string(options.max_relator_length));
    }
    return len;
  };
  unsigned k = 0;
  for (std::size_t n = 0; n < count; ++n) {
    const std::uint64_t need = 2 * base.elements[n].length();
    do {
      ++k;
    } while (rn_length_formula(k, cap) <= need);
    checked_length(k);
    base.ks.push_back(k);
  }

  DehnOptions dopt;
  dopt.require_certificate = options.require_certificate;
  auto engine_for = [&](const std::vector<unsigned>& indices) {
    std::vector<AmalgamWord> rel;
    for (unsigned i : indices) {
      rel.push_back(build_relator(sys, {cap, i}));
    }
    return DehnEngine(symmetrize(sys, rel), dopt);
  };

  std::vector<std::future<TopologyLevel>> jobs;
  for (std::size_t n = 0; n < count; ++n) {
    jobs.push_back(std::async(std::launch::async, [&, n] {
      TopologyLevel lv;
      lv.n = n + 1;
      lv.g = base.elements[n];
      lv.k = base.ks[n];
      lv.relator_length = rn_length_formula(lv.k, cap);
      // Relators of N_n long enough to matter for g_n: r_k(n) and any
      // r_k with |r_k| <= 2 |g_n|, of which there are none by the choice
      // of k(n).
      lv.level_indices = {lv.k};
      DehnEngine level = engine_for(lv.level_indices);
      lv.level_certified = level.certified();
      lv.g_verdict = level.membership(lv.g);
      AmalgamWord r = build_rn(sys, lv.k, cap);
      lv.relator_verdict = level.membership(r);
      lv.relator_replays = level.replay(r, lv.relator_verdict);
      if (n + 1 < count) {
        const unsigned next = base.ks[n + 1];
        lv.descent_indices = {0, next};
        for (unsigned j = next + 1; rn_length_formula(j, cap) <= 2 * r.length(); ++j) {
          checked_length(j);
          lv.descent_indices.push_back(j);
        }
        DehnEngine descent = engine_for(lv.descent_indices);
        lv.descent_certified = descent.certified();
        lv.descent_verdict = descent.membership(r);
      }
      return lv;
    }));
  }
  for (auto& job : jobs) {
    base.levels.push_back(job.get());
  }
  return base;
}

}  // namespace dehnkit
