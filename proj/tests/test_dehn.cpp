#include <doctest.h>

#include <random>

#include "dehnkit/dehn.hpp"
#include "dehnkit/errors.hpp"
#include "dehnkit/relators.hpp"
#include "support.hpp"

using namespace dehnkit;

namespace {

const FactorSystem& h1() {
  static const FactorSystem sys = FactorSystem::preset("amalgam-h1");
  return sys;
}

AmalgamWord W(const char* text) { return parse_amalgam(h1(), text); }

const DehnEngine& engine80() {
  static const DehnEngine e(symmetrize(h1(), {build_r0(h1(), 80)}));
  return e;
}

const DehnEngine& engine3(TieBreak tb = TieBreak::LeftmostLongest) {
  static const DehnEngine left(symmetrize(h1(), {build_r0(h1(), 3)}),
                               DehnOptions{false, TieBreak::LeftmostLongest, 0});
  static const DehnEngine random(symmetrize(h1(), {build_r0(h1(), 3)}),
                                 DehnOptions{false, TieBreak::Random, 0});
  return tb == TieBreak::Random ? random : left;
}

AmalgamWord prefix(const AmalgamWord& w, std::size_t n) {
  std::vector<FactorWord> ls(w.letters().begin(), w.letters().begin() + n);
  return normalize(h1(), ls);
}

CyclicWord cyc(const AmalgamWord& w) { return cyclically_reduce(h1(), w).cyclic; }

}  // namespace

TEST_SUITE("dehn") {
  TEST_CASE("engine requires a certificate by default") {
    CHECK_THROWS_AS(DehnEngine(symmetrize(h1(), {W("x")})), UncertifiedSet);
    CHECK_THROWS_AS(DehnEngine(symmetrize(h1(), {build_r0(h1(), 8)})), UncertifiedSet);
    CHECK_NOTHROW(DehnEngine(symmetrize(h1(), {build_r0(h1(), 8)}), DehnOptions{false}));
    CHECK(engine80().certified());
  }

  TEST_CASE("max fragment") {
    const AmalgamWord r0 = build_r0(h1(), 80);
    auto whole = engine80().max_fragment(cyc(r0));
    REQUIRE(whole);
    CHECK(whole->ratio == Rational(1));
    CHECK(whole->length == 6640);

    auto single = engine80().max_fragment(cyc(W("x")));
    REQUIRE(single);
    CHECK(single->ratio == Rational(1, 6640));

    // First 5000 letters of r0, then a tail sharing nothing long with it.
    AmalgamWord w = multiply(h1(), prefix(r0, 5000), W("x^5 a^7 y^-3 a^2"));
    auto m = engine80().max_fragment(cyc(w));
    REQUIRE(m);
    CHECK(m->length >= 5000);
    CHECK(m->length <= 5001);
    CHECK(m->ratio > Rational(1, 2));
    CHECK(max_fragment(cyc(w), engine80().relators())->ratio == m->ratio);
  }

  TEST_CASE("max fragment of an empty word") {
    CHECK_FALSE(engine80().max_fragment(CyclicWord{}));
  }

  TEST_CASE("membership of r0 takes one step") {
    const AmalgamWord r0 = build_r0(h1(), 80);
    DehnVerdict v = engine80().membership(r0);
    CHECK(v.outcome == Outcome::Trivial);
    CHECK(v.trace.size() == 1);
    CHECK(v.residue.empty());
    CHECK(engine80().replay(r0, v));
    CHECK(to_string(v.outcome) == std::string("trivial"));
  }

  TEST_CASE("single letters and short words are nontrivial") {
    for (const char* text : {"x", "a", "y a", "h a y a", "s", "x s a"}) {
      DehnVerdict v = engine80().membership(W(text));
      CHECK_MESSAGE(v.outcome == Outcome::Nontrivial, text);
      CHECK(v.sound);
      REQUIRE(v.witness);
      CHECK(*v.witness <= Rational(1, 2));
    }
  }

  TEST_CASE("products of conjugates are trivial and replay") {
    const AmalgamWord r0 = build_r0(h1(), 80);
    const AmalgamWord u = W("y a^-1 x");
    const AmalgamWord v = W("a^2 s x^-1");
    AmalgamWord w = multiply(h1(), multiply(h1(), u, r0), inverse(u));
    w = multiply(h1(), w, multiply(h1(), multiply(h1(), v, inverse(r0)), inverse(v)));
    DehnVerdict verdict = engine80().membership(w);
    CHECK(verdict.outcome == Outcome::Trivial);
    CHECK(verdict.trace.size() == 2);
    CHECK(engine80().replay(w, verdict));
    // Tampering with the trace breaks the replay.
    DehnVerdict bad = verdict;
    bad.trace.front().conjugator = multiply(h1(), bad.trace.front().conjugator, W("x"));
    CHECK_FALSE(engine80().replay(w, bad));
  }

  TEST_CASE("lengths decrease along the trace") {
    std::mt19937_64 rng(11);
    const AmalgamWord r0 = build_r0(h1(), 80);
    for (int t = 0; t < 20; ++t) {
      AmalgamWord g = support::random_word(h1(), rng, 6);
      AmalgamWord w = multiply(h1(), multiply(h1(), g, t % 2 ? r0 : inverse(r0)), inverse(g));
      DehnVerdict v = engine80().membership(w);
      REQUIRE(v.outcome == Outcome::Trivial);
      for (const auto& step : v.trace) CHECK(step.length_after < step.length_before);
      CHECK(engine80().replay(w, v));
    }
  }

  TEST_CASE("verdicts are conjugation invariant") {
    std::mt19937_64 rng(5);
    const AmalgamWord r0 = build_r0(h1(), 80);
    for (int t = 0; t < 30; ++t) {
      AmalgamWord w = support::random_word(h1(), rng, 8);
      if (t % 3 == 0) w = multiply(h1(), w, r0);
      if (w.empty()) continue;
      AmalgamWord g = support::random_word(h1(), rng, 5);
      AmalgamWord c = multiply(h1(), multiply(h1(), g, w), inverse(g));
      CHECK(engine80().membership(w).outcome == engine80().membership(c).outcome);
    }
  }

  TEST_CASE("tie-break rules agree on a certified set") {
    DehnEngine random(engine80().relators(), DehnOptions{true, TieBreak::Random, 0});
    std::mt19937_64 rng(99);
    const AmalgamWord r0 = build_r0(h1(), 80);
    for (int t = 0; t < 20; ++t) {
      AmalgamWord g = support::random_word(h1(), rng, 4);
      AmalgamWord w = multiply(h1(), multiply(h1(), g, r0), inverse(g));
      if (t % 2) w = multiply(h1(), w, support::random_word(h1(), rng, 3));
      Outcome expected = engine80().membership(w).outcome;
      for (std::uint64_t seed = 0; seed < 3; ++seed)
        CHECK(random.membership(w, seed).outcome == expected);
    }
  }

  TEST_CASE("uncertified cap 3: the leftmost rule is deterministic") {
    std::mt19937_64 rng(3);
    const AmalgamWord r0 = build_r0(h1(), 3);
    for (int t = 0; t < 50; ++t) {
      AmalgamWord g = support::random_word(h1(), rng, 4);
      AmalgamWord w = multiply(h1(), multiply(h1(), g, r0), inverse(g));
      DehnVerdict a = engine3().membership(w);
      DehnVerdict b = engine3().membership(w, 1234);
      CHECK(a.outcome == Outcome::Trivial);
      CHECK(a.trace.size() == b.trace.size());
      CHECK(engine3().replay(w, a));
      // Random choice may get stuck off a certified set, but when it says
      // Trivial the trace is a proof.
      DehnVerdict r = engine3(TieBreak::Random).membership(w, static_cast<std::uint64_t>(t));
      if (r.outcome == Outcome::Trivial) CHECK(engine3().replay(w, r));
      else CHECK_FALSE(r.sound);
    }
  }

  TEST_CASE("nontrivial verdicts off a certified set are flagged") {
    DehnVerdict v = engine3().membership(W("x"));
    CHECK(v.outcome == Outcome::Nontrivial);
    CHECK_FALSE(v.sound);
  }

  TEST_CASE("ball injectivity") {
    CHECK(engine80().ball_injectivity(0));
    CHECK(engine80().ball_injectivity(3));
    CHECK(ball_injectivity(engine80().relators(), 2));
    CHECK_THROWS_AS(ball_injectivity(symmetrize(h1(), {W("x")}), 1), UncertifiedSet);
  }

  TEST_CASE("fragments cover the scanned word") {
    const AmalgamWord r0 = build_r0(h1(), 80);
    auto frags = engine80().fragments(cyc(multiply(h1(), prefix(r0, 100), W("x^3 a^3"))));
    REQUIRE_FALSE(frags.empty());
    for (const auto& f : frags) {
      CHECK(f.length >= 1);
      CHECK(f.relator_length == 6640);
      CHECK(f.ratio == Rational(static_cast<std::int64_t>(f.length), 6640));
    }
  }
}
