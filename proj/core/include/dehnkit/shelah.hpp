#pragma once

// The one-relator inductive step and the descending chain of normal
// subgroups that witnesses a nondiscrete Hausdorff group topology on it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dehnkit/dehn.hpp"
#include "dehnkit/relators.hpp"

namespace dehnkit {

struct StepPresentation {
  FactorSystem system;  // with h replaced by h_n^-1 x
  FactorWord h_n;
  FactorWord h;
  unsigned cap = 80;
  AmalgamWord relator;
};

// h := h_n^-1 x, then re-checks every hypothesis on x, y, h, a. Throws
// HypothesisFailed; h_n must be a word of K.
StepPresentation assemble_step(const FactorSystem& sys, const FactorWord& h_n, unsigned cap = 80);

struct BallCheck {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
};

struct ConditionReport {
  unsigned radius = 0;
  std::size_t relator_length = 0;
  std::uint64_t power_exponent = 10000;
  bool length_below_power = false;
  CPrimeResult certificate;
  BallCheck embedding;
  BallCheck intersection;
  BallCheck malnormality;

  bool passed() const noexcept {
    return length_below_power && certificate.certified && embedding.passed &&
           intersection.passed && malnormality.passed;
  }
};

// Bounded checks over balls of the given free-length radius:
//  * embedding: no nonidentity word of K or L is Trivial;
//  * intersection: k l^-1 is Trivial only when k = l in H;
//  * malnormality: u^-1 g u g'^-1 is Nontrivial for u outside K N and
//    nonidentity g, g' in K.
// Throws HypothesisFailed, UncertifiedSet, or ConfigError when the radius is
// too large to decide u in K N by normal forms.
ConditionReport verify_conditions(const StepPresentation& step, unsigned radius);

struct TopologyOptions {
  bool require_certificate = true;
  std::uint64_t max_relator_length = 2'000'000;
  std::size_t max_count = 10'000;
};

struct TopologyLevel {
  std::size_t n = 0;
  AmalgamWord g;
  unsigned k = 0;
  std::uint64_t relator_length = 0;
  // g_n against the relators of N_n that can reach it.
  std::vector<unsigned> level_indices;
  DehnVerdict g_verdict;
  bool level_certified = false;
  // r_k(n) lies in N_n.
  DehnVerdict relator_verdict;
  bool relator_replays = false;
  // r_k(n) against r0 and the relators of N_(n+1); absent on the last level.
  std::vector<unsigned> descent_indices;
  std::optional<DehnVerdict> descent_verdict;
  bool descent_certified = false;
};

struct TopologyBase {
  unsigned cap = 80;
  std::vector<AmalgamWord> elements;
  std::vector<unsigned> ks;
  std::vector<TopologyLevel> levels;

  // Every g_n Nontrivial, every r_k(n) Trivial at level n with a replaying
  // trace and Nontrivial at the next level, and every verdict certified.
  bool passed() const;
};

// First `count` nonidentity elements of the free product of all generators,
// shortlex by free word.
std::vector<AmalgamWord> enumerate_elements(const FactorSystem& sys, std::size_t count);

// Throws CountTooLarge when count or a needed relator exceeds the budget,
// and UncertifiedSet when a required certificate fails.
TopologyBase build_topology_base(const StepPresentation& step, std::size_t count, unsigned cap,
                                 const TopologyOptions& options = {});

}  // namespace dehnkit
