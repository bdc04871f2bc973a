#pragma once

// Symmetrized closures, pieces and the metric condition C'(lambda).
//
// A symmetrized set is stored through its cyclically reduced members: one
// H-standard cyclic word ("base") per relator and per inverse, each taken up
// to rotation. The member represented by (base, rotation) is that rotation;
// every other element of the closure is an H-conjugate of one of these, or
// a conjugate by a single letter, which has length n + 1.
//
// Two members share a piece of length s + 1 when their first s letters agree
// up to H-interleaving (the first s - 1 letters literally, the s-th up to a
// right H-factor) and the next letters sit in a common factor, leaving room
// for one merged partial letter. Letter-conjugates add one common leading
// letter, so their pieces are one longer.

#include <optional>
#include <string>
#include <vector>

#include "dehnkit/amalgam.hpp"
#include "dehnkit/letter_code.hpp"
#include "dehnkit/rational.hpp"

namespace dehnkit {

struct RelatorBase {
  std::size_t origin = 0;  // index into SymmetrizedSet::origin()
  int sign = 1;            // +1: the relator, -1: its inverse
  AmalgamWord word;        // least rotation of the H-standard cyclic word
  std::size_t period = 0;  // number of distinct rotations
  std::vector<int> code;   // LetterCode encoding of `word`
};

struct RepRef {
  std::size_t base = 0;
  std::size_t rotation = 0;

  friend bool operator==(const RepRef&, const RepRef&) = default;
  friend auto operator<=>(const RepRef&, const RepRef&) = default;
};

class SymmetrizedSet {
 public:
  const FactorSystem& system() const noexcept { return system_; }
  const std::vector<AmalgamWord>& origin() const noexcept { return origin_; }
  const std::vector<RelatorBase>& bases() const noexcept { return bases_; }
  const LetterCode& code() const noexcept { return code_; }

  // Number of cyclically reduced members (distinct rotations).
  std::size_t size() const noexcept;
  std::vector<RepRef> representatives() const;
  AmalgamWord representative(RepRef ref) const;
  std::size_t relator_length(std::size_t base) const { return bases_.at(base).word.length(); }
  // Sorted distinct lengths of members, counting letter-conjugates (n + 1).
  std::vector<std::size_t> member_lengths() const;

  // Same closure: equal sets of base words.
  friend bool operator==(const SymmetrizedSet& a, const SymmetrizedSet& b);

 private:
  friend SymmetrizedSet symmetrize(const FactorSystem&, const std::vector<AmalgamWord>&);
  explicit SymmetrizedSet(FactorSystem sys) : system_(std::move(sys)) {}

  FactorSystem system_;
  std::vector<AmalgamWord> origin_;
  std::vector<RelatorBase> bases_;
  LetterCode code_;
};

// Throws IdentityRelator. Duplicate relators (up to rotation, inversion and
// H-conjugation) collapse.
SymmetrizedSet symmetrize(const FactorSystem& sys, const std::vector<AmalgamWord>& relators);

struct PieceWitness {
  RepRef first;
  RepRef second;
  std::size_t length = 0;    // piece length in letters
  std::size_t matched = 0;   // letters agreeing up to H-interleaving
  AmalgamWord piece;         // b, with r = b c and r' = b c'
};

struct PieceReport {
  std::size_t max_piece_length = 0;
  std::size_t min_relator_length = 0;
  Rational achieved_lambda;  // max_piece_length / min_relator_length
  // Same bounds for the single-letter conjugates of length n + 1.
  std::size_t max_conjugate_piece_length = 0;
  std::optional<PieceWitness> witness;
  // Largest piece over the members of each base.
  std::vector<std::size_t> base_max_piece;
  std::size_t representatives = 0;
};

// Suffix-array scan over the encoded members.
PieceReport pieces(const SymmetrizedSet& R);

// Piece length for every ordered pair of members, indexed like
// representatives(). Quadratic; meant for small sets.
std::vector<std::vector<std::size_t>> piece_table(const SymmetrizedSet& R);

// Recomputes r = b c and r' = b c' and checks that neither product has a
// cancelled junction and that r != r'.
bool verify_witness(const SymmetrizedSet& R, const PieceWitness& w);

struct CPrimeResult {
  bool certified = false;
  Rational lambda;
  PieceReport report;
  // Set when not certified: "piece" or "short relator", the base concerned
  // and the offending length.
  std::string violation;
  std::optional<std::size_t> offending_base;
  std::size_t offending_length = 0;
};

// Every piece of a member r is shorter than lambda |r| and every |r| >
// 1/lambda, checked for members of length n and their conjugates of length
// n + 1.
CPrimeResult check_c_prime(const SymmetrizedSet& R, Rational lambda);
CPrimeResult check_c_prime(const SymmetrizedSet& R, const PieceReport& report, Rational lambda);

// check_c_prime on the closure of the family words with the given indices
// (0 is r0), all built with block cap `cap` over `sys`.
CPrimeResult joint_family_check(const FactorSystem& sys, unsigned cap,
                                const std::vector<unsigned>& indices, Rational lambda);
// Indices 0..max_index.
CPrimeResult joint_family_check(const FactorSystem& sys, unsigned cap, unsigned max_index,
                                Rational lambda);

}  // namespace dehnkit
