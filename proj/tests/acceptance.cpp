// Acceptance gate: one PASS/FAIL line per criterion. Exit code 1 if any
// selected criterion fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "dehnkit/report.hpp"
#include "dehnkit/shelah.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dehnkit;

namespace {

struct Result {
  Result() = default;
  Result(bool ok_, std::string detail_, std::optional<double> timed = std::nullopt)
      : ok(ok_), detail(std::move(detail_)), timed_seconds(timed) {}

  bool ok = true;
  std::string detail;
  // Time of the part under budget, when it excludes oracle work.
  std::optional<double> timed_seconds;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Result()> run;
};

const FactorSystem& h1() {
  static const FactorSystem sys = FactorSystem::preset("amalgam-h1");
  return sys;
}
const FactorSystem& h0() {
  static const FactorSystem sys = FactorSystem::preset("amalgam-h0");
  return sys;
}

std::string str(std::size_t n) { return std::to_string(n); }

Result relator_length() {
  AmalgamWord r0 = build_r0(h1(), 80);
  SymmetrizedSet R = symmetrize(h1(), {r0});
  std::vector<std::size_t> lengths = R.member_lengths();
  // Rotations share the length of their base.
  for (const auto& b : R.bases()) {
    if (b.word.length() != 6640) return {false, "base of length " + str(b.word.length())};
  }
  bool ok = r0.length() == 6640 && R.size() == 2 * 6640 && lengths == std::vector<std::size_t>{6640, 6641};
  return {ok, "|r0| = " + str(r0.length()) + ", member lengths " + str(lengths.front()) + ".." +
                  str(lengths.back())};
}

Result piece_bound() {
  SymmetrizedSet R = symmetrize(h1(), {build_r0(h1(), 80)});
  CPrimeResult c = check_c_prime(R, Rational(1, 10));
  bool ok = c.report.max_piece_length <= 601 && c.certified;
  return {ok, "max piece " + str(c.report.max_piece_length) + " <= 601, C'(1/10) " +
                  (c.certified ? "certified" : "violated")};
}

Result piece_bound_cap8() {
  AmalgamWord r = build_r0(h1(), 8);
  SymmetrizedSet R = symmetrize(h1(), {r});
  const std::size_t threshold = oracle::max_piece(h1(), oracle::members(h1(), {r})).max_piece;
  auto start = std::chrono::steady_clock::now();
  const std::size_t scanned = pieces(R).max_piece_length;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {scanned == threshold, "cap 8: scan " + str(scanned) + ", brute force " + str(threshold),
          secs};
}

Result joint_family() {
  CPrimeResult c = joint_family_check(h1(), 80, 2u, Rational(1, 10));
  std::string detail = "{r0, r1, r2} max piece " + str(c.report.max_piece_length) + " vs min length " +
                       str(c.report.min_relator_length);
  if (!c.certified) detail += " (" + c.violation + ")";
  return {c.certified, detail};
}

Result greendlinger_floor() {
  DehnEngine e(symmetrize(h1(), {build_r0(h1(), 80)}));
  bool ok = e.ball_injectivity(6);
  return {ok, "no nonidentity factor word of length <= 6 is trivial"};
}

// Random product of 1 to 3 conjugates of r0^(+-1).
AmalgamWord random_product(const FactorSystem& sys, const AmalgamWord& r, std::mt19937_64& rng) {
  AmalgamWord w;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    AmalgamWord g = support::random_word(sys, rng, 6);
    AmalgamWord term = multiply(sys, multiply(sys, g, rng() % 2 ? r : inverse(r)), inverse(g));
    w = multiply(sys, w, term);
  }
  return w;
}

Result dehn_soundness() {
  std::mt19937_64 rng(2024);
  std::size_t good = 0;
  std::size_t total = 0;
  std::string first_failure;
  for (unsigned cap : {4u, 80u}) {
    DehnEngine e(symmetrize(h1(), {build_r0(h1(), cap)}), DehnOptions{cap == 80});
    const AmalgamWord r = build_r0(h1(), cap);
    for (int i = 0; i < 100; ++i) {
      AmalgamWord w = random_product(h1(), r, rng);
      if (w.empty()) {
        continue;
      }
      ++total;
      DehnVerdict v = e.membership(w);
      if (v.outcome == Outcome::Trivial && e.replay(w, v)) {
        ++good;
      } else if (first_failure.empty()) {
        first_failure = " first failure at cap " + str(cap) + ", |w| = " + str(w.length());
      }
    }
  }
  return {good == total, str(good) + "/" + str(total) + " trivial with replaying traces" + first_failure};
}

Result dehn_completeness() {
  std::mt19937_64 rng(77);
  DehnEngine e(symmetrize(h1(), {build_r0(h1(), 80)}));
  std::size_t sampled = 0;
  std::size_t nontrivial = 0;
  std::size_t skipped = 0;
  while (sampled < 200) {
    std::size_t n = 8 + rng() % 33;
    AmalgamWord w = support::random_normal_form(h1(), rng, n);
    CyclicWord c = cyclically_reduce(h1(), w).cyclic;
    auto m = e.max_fragment(c);
    if (c.empty() || (m && m->ratio > Rational(1, 2))) {
      ++skipped;
      continue;
    }
    ++sampled;
    DehnVerdict v = e.membership(w);
    if (v.outcome == Outcome::Nontrivial && v.sound) {
      ++nontrivial;
    }
  }
  return {nontrivial == sampled,
          str(nontrivial) + "/" + str(sampled) + " nontrivial (" + str(skipped) + " resampled)"};
}

Result interleaving() {
  std::mt19937_64 rng(4242);
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (int base = 0; base < 10; ++base) {
    AmalgamWord x = support::random_normal_form(h1(), rng, 2 + base);
    for (int t = 0; t < 1000; ++t) {
      std::vector<FactorWord> hs;
      for (std::size_t i = 0; i + 1 < x.length(); ++i) hs.push_back(support::random_h(h1(), rng));
      std::vector<FactorWord> ys;
      for (std::size_t i = 0; i < x.length(); ++i) {
        Factor f = x[i].factor();
        FactorWord y = x[i];
        if (i > 0) y = multiply(hs[i - 1].retagged(f), y, f);
        if (i + 1 < x.length()) y = multiply(y, hs[i].inverse().retagged(f), f);
        ys.push_back(y);
      }
      AmalgamWord y = AmalgamWord::adopt(ys);
      ++checks;
      AmalgamWord cy = canonical(h1(), y);
      auto chain = interleave_equal(h1(), x, y);
      bool ok = cy == x && cy.length() == x.length() && chain && chain->size() == hs.size();
      for (std::size_t i = 0; ok && i < hs.size(); ++i) {
        ok = (*chain)[i].syllables() == hs[i].syllables();
      }
      failures += ok ? 0 : 1;
    }
  }
  return {failures == 0, str(checks - failures) + "/" + str(checks) + " perturbations over 10 base words"};
}

Result topology(unsigned cap, bool certified) {
  StepPresentation step = assemble_step(h1(), multiply(h1().x(), h1().h().inverse(), Factor::K), cap);
  TopologyOptions opt;
  opt.require_certificate = certified;
  TopologyBase base = build_topology_base(step, 5, cap, opt);
  bool ok = base.levels.size() == 5;
  std::size_t descents = 0;
  for (const auto& lv : base.levels) {
    ok = ok && lv.g_verdict.outcome == Outcome::Nontrivial;
    ok = ok && lv.relator_length > 2 * lv.g.length();
    ok = ok && lv.relator_verdict.outcome == Outcome::Trivial && lv.relator_replays;
    if (lv.n < 5) {
      ok = ok && lv.descent_verdict && lv.descent_verdict->outcome == Outcome::Nontrivial;
      ++descents;
    }
    if (certified) {
      ok = ok && lv.level_certified && (lv.n == 5 || lv.descent_certified);
    }
  }
  if (certified) ok = ok && base.passed();
  std::ostringstream ks;
  for (unsigned k : base.ks) ks << (ks.tellp() > 0 ? "," : "") << k;
  return {ok, "cap " + str(cap) + ", k(n) = " + ks.str() + ", " + str(descents) +
                  " strict descents" + (certified ? ", all certified" : ", uncertified")};
}

Result oracle_equivalence() {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  for (unsigned cap = 2; cap <= 4; ++cap) {
    SymmetrizedSet R = symmetrize(h0(), {build_r0(h0(), cap)});
    auto table = piece_table(R);
    auto refs = R.representatives();
    for (std::size_t i = 0; i < refs.size(); ++i) {
      for (std::size_t j = 0; j < refs.size(); ++j) {
        if (i == j) continue;
        ++pairs;
        if (table[i][j] != oracle::pair_piece(h0(), R.representative(refs[i]),
                                              R.representative(refs[j]))) {
          ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, str(pairs - mismatches) + "/" + str(pairs) + " pairs agree, caps 2..4"};
}

Result power_bound() {
  StepPresentation step = assemble_step(h1(), multiply(h1().x(), h1().h().inverse(), Factor::K));
  Json j = to_json(verify_conditions(step, 0));
  const Json& pb = j["power_bound"];
  bool ok = pb["holds"] == true && pb["statement"] == "6640 < 10000";
  return {ok, "report states \"" + pb["statement"].get<std::string>() + "\""};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dehnkit acceptance checks"};
  std::vector<int> only;
  std::vector<int> skip;
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--skip", skip, "Skip these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "relator length 6640, members 6640/6641", 1.0, relator_length},
      {2, "piece bound <= 601 and C'(1/10) at cap 80", 600.0, piece_bound},
      {2, "piece bound, cap 8 scan equals brute force", 5.0, piece_bound_cap8},
      {3, "joint family {r0, r1, r2} C'(1/10) at cap 80", 600.0, joint_family},
      {4, "Greendlinger floor: ball injectivity radius 6", 60.0, greendlinger_floor},
      {5, "Dehn soundness: 200 products of conjugates", 120.0, dehn_soundness},
      {6, "Dehn completeness: 200 fragment-free words", 120.0, dehn_completeness},
      {7, "interleaving invariance and witness chains", 60.0, interleaving},
      {8, "topology base, count 5, cap 8", 30.0, [] { return topology(8, false); }},
      {8, "topology base, count 5, cap 80", 1800.0, [] { return topology(80, true); }},
      {9, "piece scan equals brute-force oracle, caps 2..4", 60.0, oracle_equivalence},
      {10, "power bound 6640 < 10000 in the report", 60.0, power_bound},
  };

  auto selected = [&](int id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) return false;
    return std::find(skip.begin(), skip.end(), id) == skip.end();
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.timed_seconds) secs = *o.timed_seconds;
    bool in_budget = secs <= c.budget_seconds;
    bool pass = o.ok && in_budget;
    failed += pass ? 0 : 1;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs << "s/" << c.budget_seconds << "s";
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- "
              << o.detail << " [" << t.str() << (in_budget ? "" : " over budget") << "]\n";
  }
  return failed == 0 ? 0 : 1;
}
