#include <doctest.h>

#include "dehnkit/errors.hpp"
#include "dehnkit/shelah.hpp"
#include "oracles.hpp"

using namespace dehnkit;

namespace {

const FactorSystem& h1() {
  static const FactorSystem sys = FactorSystem::preset("amalgam-h1");
  return sys;
}

FactorWord K(const char* text) { return h1().parse(text, Factor::K); }

}  // namespace

TEST_SUITE("shelah") {
  TEST_CASE("relator words at small caps") {
    CHECK(format(h1(), build_r0(h1(), 2)) == "h a y a x a y a y a");
    CHECK(build_r0(h1(), 2).length() == 10);
    CHECK(format(h1(), build_r0(h1(), 3)) == "h a y a x a y a y a x a y a y a y a");
    CHECK(build_r0(h1(), 3).length() == 18);
    CHECK(format(h1(), build_rn(h1(), 1, 2)) == "x a y a x a y a y a");
    CHECK(format(h1(), build_rn(h1(), 2, 2)) ==
          "x a y a y a y a x a y a y a y a y a");
    CHECK(build_relator(h1(), {2, 0}) == build_r0(h1(), 2));
    CHECK_THROWS_AS(build_r0(h1(), 1), CapTooSmall);
  }

  TEST_CASE("length formulas agree with direct sums") {
    for (unsigned cap = 2; cap <= 20; ++cap) {
      CHECK(r0_length_formula(cap) == oracle::r0_length(cap));
      CHECK(build_r0(h1(), cap).length() == oracle::r0_length(cap));
      for (unsigned n = 1; n <= 5; ++n) {
        CHECK(rn_length_formula(n, cap) == oracle::rn_length(n, cap));
      }
    }
    CHECK(r0_length_formula(80) == 6640);
    CHECK(rn_length_formula(1, 80) == 6640);
    CHECK(build_rn(h1(), 3, 4).length() == rn_length_formula(3, 4));
  }

  TEST_CASE("assemble step") {
    StepPresentation id = assemble_step(h1(), FactorWord{}, 2);
    CHECK(h1().format(id.h) == "x");
    CHECK(id.relator.length() == 10);

    StepPresentation mixed = assemble_step(h1(), K("s x^-1"), 2);
    CHECK(h1().format(mixed.h) == "x s^-1 x");
    CHECK(mixed.system.h() == mixed.h);

    CHECK_THROWS_AS(assemble_step(h1(), K("x"), 2), HypothesisFailed);
    try {
      assemble_step(h1(), K("x"), 2);
    } catch (const HypothesisFailed& e) {
      CHECK(e.name() == "h not in H");
    }
    CHECK_THROWS_AS(assemble_step(h1(), h1().parse("a", Factor::L), 2), HypothesisFailed);
  }

  TEST_CASE("default step satisfies the bounded conditions") {
    StepPresentation step = assemble_step(h1(), K("x h^-1"));
    for (unsigned radius : {0u, 2u}) {
      ConditionReport r = verify_conditions(step, radius);
      CHECK(r.relator_length == 6640);
      CHECK(r.length_below_power);
      CHECK(r.certificate.certified);
      CHECK(r.embedding.passed);
      CHECK(r.intersection.passed);
      CHECK(r.malnormality.passed);
      CHECK(r.passed());
      if (radius == 2) {
        CHECK(r.embedding.checked > 0);
        CHECK(r.malnormality.checked > 0);
      }
    }
  }

  TEST_CASE("uncertified step is refused") {
    StepPresentation step = assemble_step(h1(), K("x h^-1"), 8);
    CHECK_THROWS_AS(verify_conditions(step, 1), UncertifiedSet);
  }

  TEST_CASE("broken hypotheses are refused") {
    FactorSystem bad = h1().with_xy(K("x"), K("x"));
    CHECK_THROWS_AS(assemble_step(bad, K("x h^-1"), 2), HypothesisFailed);
  }

  TEST_CASE("shortlex enumeration") {
    auto e = enumerate_elements(h1(), 10);
    REQUIRE(e.size() == 10);
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK_FALSE(e[i].empty());
      for (std::size_t j = 0; j < i; ++j) CHECK(e[i] != e[j]);
    }
    CHECK(format(h1(), e[0]) == "s @H");
  }

  TEST_CASE("topology base at cap 8 without certificates") {
    StepPresentation step = assemble_step(h1(), K("x h^-1"), 8);
    TopologyOptions opt;
    opt.require_certificate = false;
    TopologyBase base = build_topology_base(step, 5, 8, opt);
    REQUIRE(base.levels.size() == 5);
    REQUIRE(base.ks.size() == 5);
    for (std::size_t n = 0; n < 5; ++n) {
      const auto& lv = base.levels[n];
      if (n > 0) CHECK(base.ks[n] > base.ks[n - 1]);
      CHECK(lv.relator_length > 2 * lv.g.length());
      CHECK(lv.g_verdict.outcome == Outcome::Nontrivial);
      CHECK(lv.relator_verdict.outcome == Outcome::Trivial);
      CHECK(lv.relator_replays);
      if (n + 1 < 5) {
        REQUIRE(lv.descent_verdict);
        CHECK(lv.descent_verdict->outcome == Outcome::Nontrivial);
      } else {
        CHECK_FALSE(lv.descent_verdict);
      }
    }
    // Cap 8 relators are not C'(1/10), so the base is not certified.
    CHECK_FALSE(base.passed());
  }

  TEST_CASE("topology budgets") {
    StepPresentation step = assemble_step(h1(), K("x h^-1"), 8);
    TopologyOptions opt;
    opt.require_certificate = false;
    opt.max_count = 3;
    CHECK_THROWS_AS(build_topology_base(step, 4, 8, opt), CountTooLarge);
    opt.max_count = 10;
    opt.max_relator_length = 50;
    CHECK_THROWS_AS(build_topology_base(step, 3, 8, opt), CountTooLarge);
    CHECK_THROWS_AS(build_topology_base(step, 2, 8), UncertifiedSet);
  }
}
