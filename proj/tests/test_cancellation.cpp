#include <doctest.h>

#include "dehnkit/cancellation.hpp"
#include "dehnkit/errors.hpp"
#include "dehnkit/relators.hpp"
#include "oracles.hpp"

#include <set>

using namespace dehnkit;

namespace {

const FactorSystem& h1() {
  static const FactorSystem sys = FactorSystem::preset("amalgam-h1");
  return sys;
}
const FactorSystem& h0() {
  static const FactorSystem sys = FactorSystem::preset("amalgam-h0");
  return sys;
}

AmalgamWord W(const FactorSystem& sys, const char* text) { return parse_amalgam(sys, text); }

}  // namespace

TEST_SUITE("cancellation") {
  TEST_CASE("symmetrize small orbits") {
    SymmetrizedSet R = symmetrize(h0(), {W(h0(), "a x")});
    CHECK(R.size() == 4);
    CHECK(R.bases().size() == 2);
    CHECK_THROWS_AS(symmetrize(h0(), {W(h0(), "x x^-1")}), IdentityRelator);
  }

  TEST_CASE("symmetrize r0 at cap 3 matches the brute-force orbit") {
    AmalgamWord r = build_r0(h0(), 3);
    SymmetrizedSet R = symmetrize(h0(), {r});
    auto orbit = oracle::members(h0(), {r});
    CHECK(R.size() == 2 * r.length());
    CHECK(R.size() == orbit.size());
    std::set<AmalgamWord> mine;
    for (RepRef ref : R.representatives()) mine.insert(R.representative(ref));
    CHECK(mine == std::set<AmalgamWord>(orbit.begin(), orbit.end()));
    // Closed under inversion.
    for (const auto& m : mine) {
      AmalgamWord inv = cyclically_reduce(h0(), inverse(m)).cyclic.word();
      CHECK(mine.count(inv) == 1);
    }
  }

  TEST_CASE("symmetrize is idempotent and collapses duplicates") {
    SymmetrizedSet R = symmetrize(h1(), {build_r0(h1(), 4)});
    std::vector<AmalgamWord> reps;
    for (RepRef ref : R.representatives()) reps.push_back(R.representative(ref));
    CHECK(symmetrize(h1(), reps) == R);
    AmalgamWord r1 = build_rn(h1(), 1, 4);
    CHECK(symmetrize(h1(), {r1, r1}) == symmetrize(h1(), {r1}));
    CHECK(symmetrize(h1(), {r1, inverse(r1)}) == symmetrize(h1(), {r1}));
  }

  TEST_CASE("members of r0 at cap 80 have length 6640 or 6641") {
    SymmetrizedSet R = symmetrize(h1(), {build_r0(h1(), 80)});
    CHECK(R.member_lengths() == std::vector<std::size_t>{6640, 6641});
    CHECK(R.size() == 2 * 6640);
  }

  TEST_CASE("piece of x a is one letter") {
    SymmetrizedSet R = symmetrize(h1(), {W(h1(), "x a")});
    PieceReport p = pieces(R);
    CHECK(p.max_piece_length == 1);
    REQUIRE(p.witness);
    CHECK(verify_witness(R, *p.witness));
    CPrimeResult c = check_c_prime(R, Rational(1, 10));
    CHECK_FALSE(c.certified);
    CHECK(c.violation == "short relator");
    CHECK(c.offending_length == 2);
  }

  TEST_CASE("relators in different factors share a merged letter") {
    // Both members start in K, so a partial common letter remains.
    SymmetrizedSet R = symmetrize(h0(), {W(h0(), "x a"), W(h0(), "y a^2")});
    CHECK(pieces(R).max_piece_length == 1);
  }

  TEST_CASE("r0 at cap 80 satisfies C'(1/10)") {
    SymmetrizedSet R = symmetrize(h1(), {build_r0(h1(), 80)});
    PieceReport p = pieces(R);
    CHECK(p.max_piece_length == 318);
    CHECK(p.max_conjugate_piece_length == 319);
    CHECK(p.max_piece_length <= 601);
    CHECK(p.min_relator_length == 6640);
    REQUIRE(p.witness);
    CHECK(verify_witness(R, *p.witness));
    CPrimeResult c = check_c_prime(R, p, Rational(1, 10));
    CHECK(c.certified);
  }

  TEST_CASE("piece scan equals the oracle on every pair, amalgam-h0, cap <= 4") {
    for (unsigned cap = 2; cap <= 4; ++cap) {
      AmalgamWord r = build_r0(h0(), cap);
      SymmetrizedSet R = symmetrize(h0(), {r});
      auto table = piece_table(R);
      auto refs = R.representatives();
      std::size_t table_max = 0;
      for (std::size_t i = 0; i < refs.size(); ++i) {
        for (std::size_t j = 0; j < refs.size(); ++j) {
          if (i == j) continue;
          std::size_t expected =
              oracle::pair_piece(h0(), R.representative(refs[i]), R.representative(refs[j]));
          CHECK(table[i][j] == expected);
          table_max = std::max(table_max, table[i][j]);
        }
      }
      CHECK(pieces(R).max_piece_length == table_max);
    }
  }

  TEST_CASE("cap 8 piece scan matches the oracle maximum in amalgam-h1") {
    AmalgamWord r = build_r0(h1(), 8);
    SymmetrizedSet R = symmetrize(h1(), {r});
    oracle::PieceMax expected = oracle::max_piece(h1(), oracle::members(h1(), {r}));
    PieceReport p = pieces(R);
    CHECK(expected.max_piece == 30);
    CHECK(p.max_piece_length == expected.max_piece);
    CHECK_FALSE(check_c_prime(R, p, Rational(1, 10)).certified);
  }

  TEST_CASE("minimal cap certified at 1/10 is 37") {
    CHECK_FALSE(check_c_prime(symmetrize(h1(), {build_r0(h1(), 36)}), Rational(1, 10)).certified);
    CHECK(check_c_prime(symmetrize(h1(), {build_r0(h1(), 37)}), Rational(1, 10)).certified);
  }

  TEST_CASE("pieces are symmetric under inversion") {
    SymmetrizedSet R = symmetrize(h0(), {build_r0(h0(), 3)});
    auto table = piece_table(R);
    CHECK(table.size() == R.size());
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table.size(); ++j) CHECK(table[i][j] == table[j][i]);
  }

  TEST_CASE("joint family") {
    CPrimeResult single = joint_family_check(h1(), 80, std::vector<unsigned>{0}, Rational(1, 10));
    CPrimeResult direct = check_c_prime(symmetrize(h1(), {build_r0(h1(), 80)}), Rational(1, 10));
    CHECK(single.certified == direct.certified);
    CHECK(single.report.max_piece_length == direct.report.max_piece_length);
    // r0 and r1 differ only in their first letter.
    CPrimeResult joint = joint_family_check(h1(), 80, 2u, Rational(1, 10));
    CHECK_FALSE(joint.certified);
    CHECK(joint.report.max_piece_length == 6640);
    // Without r1 the family is fine.
    CHECK(joint_family_check(h1(), 80, std::vector<unsigned>{0, 2}, Rational(1, 10)).certified);
  }

  TEST_CASE("lambda must be positive") {
    SymmetrizedSet R = symmetrize(h1(), {W(h1(), "x a")});
    CHECK_THROWS_AS(check_c_prime(R, Rational(0)), Error);
  }
}
