#include "dehnkit/cancellation.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "dehnkit/errors.hpp"
#include "dehnkit/relators.hpp"
#include "dehnkit/rotation.hpp"
#include "dehnkit/suffix.hpp"

namespace dehnkit {

std::size_t SymmetrizedSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto& b : bases_) {
    n += b.period;
  }
  return n;
}

std::vector<RepRef> SymmetrizedSet::representatives() const {
  std::vector<RepRef> out;
  out.reserve(size());
  for (std::size_t b = 0; b < bases_.size(); ++b) {
    for (std::size_t r = 0; r < bases_[b].period; ++r) {
      out.push_back({b, r});
    }
  }
  return out;
}

AmalgamWord SymmetrizedSet::representative(RepRef ref) const {
  const auto& ls = bases_.at(ref.base).word.letters();
  std::vector<FactorWord> out;
  out.reserve(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    out.push_back(ls[(ref.rotation + i) % ls.size()]);
  }
  return AmalgamWord::adopt(std::move(out));
}

std::vector<std::size_t> SymmetrizedSet::member_lengths() const {
  std::set<std::size_t> lengths;
  for (const auto& b : bases_) {
    lengths.insert(b.word.length());
    lengths.insert(b.word.length() + 1);
  }
  return {lengths.begin(), lengths.end()};
}

bool operator==(const SymmetrizedSet& a, const SymmetrizedSet& b) {
  auto words = [](const SymmetrizedSet& s) {
    std::vector<AmalgamWord> out;
    for (const auto& base : s.bases_) {
      out.push_back(base.word);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return words(a) == words(b);
}

SymmetrizedSet symmetrize(const FactorSystem& sys, const std::vector<AmalgamWord>& relators) {
  SymmetrizedSet R(sys);
  std::set<AmalgamWord> seen;
  for (std::size_t k = 0; k < relators.size(); ++k) {
    AmalgamWord w = canonical(sys, relators[k]);
    if (w.empty()) {
      throw IdentityRelator();
    }
    R.origin_.push_back(w);
    CyclicWord c = cyclically_reduce(sys, w).cyclic;
    CyclicWord ci = cyclically_reduce(sys, inverse(c.word())).cyclic;
    for (auto [cw, sign] : {std::pair{&c, 1}, std::pair{&ci, -1}}) {
      AmalgamWord least = cw->canonical_rotation();
      if (!seen.insert(least).second) {
        continue;
      }
      RelatorBase base;
      base.origin = k;
      base.sign = sign;
      base.period = cyclic_period(least.letters());
      base.code = R.code_.intern_word(sys, least);
      base.word = std::move(least);
      R.bases_.push_back(std::move(base));
    }
  }
  return R;
}

namespace {

// Letter in `factor` (a power of one of its private symbols) that keeps
// u^-1 g outside H for each g in `avoid`.
FactorWord merge_letter(const FactorSystem& sys, Factor factor,
                        const std::vector<FactorWord>& avoid) {
  std::optional<Symbol> z;
  for (Symbol s : sys.symbols()) {
    if (sys.in_factor(s, factor) && !sys.is_shared(s)) {
      z = s;
      break;
    }
  }
  if (!z) {
    throw Error("factor has no private symbol for a merged letter");
  }
  for (int k = 1;; ++k) {
    FactorWord u(factor, {{*z, Exponent(k)}});
    bool ok = std::all_of(avoid.begin(), avoid.end(), [&](const FactorWord& g) {
      return !sys.in_H(multiply(u.inverse(), g, factor));
    });
    if (ok) {
      return u;
    }
  }
}

FactorWord core_of(const FactorSystem& sys, const FactorWord& letter) {
  return sys.in_H(letter) ? letter : sys.h_core(letter).core;
}

// Builds b for two members agreeing on `matched` letters.
AmalgamWord build_piece(const SymmetrizedSet& R, RepRef a, RepRef b, std::size_t matched,
                        std::size_t length) {
  const auto& sys = R.system();
  AmalgamWord ra = R.representative(a);
  AmalgamWord rb = R.representative(b);
  std::vector<FactorWord> letters;
  for (std::size_t i = 0; i + 1 < matched; ++i) {
    letters.push_back(ra[i]);
  }
  if (matched > 0) {
    letters.push_back(core_of(sys, ra[matched - 1]));
  }
  if (length > matched) {
    auto tail = [&](const AmalgamWord& r) {
      if (matched == 0) {
        return r[0];
      }
      const FactorWord& last = r[matched - 1];
      FactorWord t = sys.in_H(last) ? FactorWord() : sys.h_core(last).suffix;
      const FactorWord& next = r[matched];
      return multiply(t.retagged(next.factor()), next, next.factor());
    };
    FactorWord ga = tail(ra);
    FactorWord gb = tail(rb);
    letters.push_back(merge_letter(sys, ga.factor(), {ga, gb}));
  }
  return AmalgamWord::adopt(std::move(letters));
}

}  // namespace

namespace {

struct Rep {
  RepRef ref;
  std::size_t n;
  Factor start;
};

// Members of R in suffix order of their doubled codes, with the symbol LCP
// to the previous member.
struct MemberOrder {
  std::vector<Rep> reps;
  std::vector<int> order;
  std::vector<int> gap;
  std::size_t start_count[2] = {0, 0};
};

MemberOrder order_members(const SymmetrizedSet& R) {
  const auto& bases = R.bases();
  MemberOrder mo;
  // text = code(b0) code(b0) sep0 code(b1) code(b1) sep1 ...
  std::vector<int> text;
  std::vector<std::size_t> offset(bases.size());
  for (std::size_t b = 0; b < bases.size(); ++b) {
    offset[b] = text.size();
    text.insert(text.end(), bases[b].code.begin(), bases[b].code.end());
    text.insert(text.end(), bases[b].code.begin(), bases[b].code.end());
    text.push_back(-2 - static_cast<int>(b));
  }
  std::vector<int> owner(text.size(), -1);
  for (std::size_t b = 0; b < bases.size(); ++b) {
    for (std::size_t r = 0; r < bases[b].period; ++r) {
      owner[offset[b] + 2 * r] = static_cast<int>(mo.reps.size());
      Factor f = bases[b].word[r].factor();
      mo.reps.push_back({{b, r}, bases[b].word.length(), f});
      ++mo.start_count[static_cast<int>(f)];
    }
  }
  std::vector<int> sa = suffix_array(text);
  std::vector<int> lcp = lcp_array(text, sa);
  int running = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (i > 0) {
      running = std::min(running, lcp[i]);
    }
    if (owner[sa[i]] >= 0) {
      mo.order.push_back(owner[sa[i]]);
      mo.gap.push_back(mo.order.size() == 1 ? 0 : running);
      running = std::numeric_limits<int>::max();
    }
  }
  return mo;
}

// Piece length for two members whose codes share `sym_lcp` symbols.
std::size_t piece_from_lcp(const Rep& a, const Rep& b, int sym_lcp, std::size_t* matched_out) {
  std::size_t cap = std::min(a.n, b.n);
  std::size_t matched = std::min<std::size_t>((sym_lcp + 1) / 2, cap);
  if (matched_out) {
    *matched_out = matched;
  }
  if (matched == 0) {
    return a.start == b.start ? 1 : 0;
  }
  return matched < cap ? matched + 1 : matched;
}

}  // namespace

std::vector<std::vector<std::size_t>> piece_table(const SymmetrizedSet& R) {
  MemberOrder mo = order_members(R);
  const std::size_t m = mo.order.size();
  if (m > 20000) {
    throw Error("piece_table: too many members");
  }
  std::vector<std::size_t> index(m);
  for (std::size_t t = 0; t < m; ++t) {
    index[mo.order[t]] = t;
  }
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m, 0));
  for (std::size_t t = 0; t < m; ++t) {
    int run = std::numeric_limits<int>::max();
    for (std::size_t u = t + 1; u < m; ++u) {
      run = std::min(run, mo.gap[u]);
      const Rep& a = mo.reps[mo.order[t]];
      const Rep& b = mo.reps[mo.order[u]];
      std::size_t p = piece_from_lcp(a, b, run, nullptr);
      table[mo.order[t]][mo.order[u]] = p;
      table[mo.order[u]][mo.order[t]] = p;
    }
  }
  return table;
}

PieceReport pieces(const SymmetrizedSet& R) {
  PieceReport report;
  const auto& bases = R.bases();
  report.base_max_piece.assign(bases.size(), 0);
  if (bases.empty()) {
    return report;
  }
  MemberOrder mo = order_members(R);
  const auto& reps = mo.reps;
  const auto& order = mo.order;
  const auto& gap = mo.gap;
  const auto& start_count = mo.start_count;
  report.representatives = reps.size();

  struct Best {
    std::size_t piece = 0;
    std::size_t matched = 0;
    int partner = -1;
  };
  std::vector<Best> best(reps.size());
  const std::size_t m = order.size();
  for (std::size_t t = 0; t < m; ++t) {
    const Rep& me = reps[order[t]];
    Best& bt = best[order[t]];
    auto consider = [&](int sym_lcp, std::size_t u) {
      const Rep& other = reps[order[u]];
      std::size_t matched = 0;
      std::size_t p = piece_from_lcp(me, other, sym_lcp, &matched);
      if (p > bt.piece || (p == bt.piece && bt.partner >= 0 &&
                           reps[order[u]].ref < reps[bt.partner].ref)) {
        bt = {p, matched, order[u]};
      }
    };
    int run = std::numeric_limits<int>::max();
    for (std::size_t u = t; u-- > 0;) {
      run = std::min(run, gap[u + 1]);
      if (run == 0 || static_cast<std::size_t>((run + 1) / 2) + 1 < bt.piece) {
        break;
      }
      consider(run, u);
    }
    run = std::numeric_limits<int>::max();
    for (std::size_t u = t + 1; u < m; ++u) {
      run = std::min(run, gap[u]);
      if (run == 0 || static_cast<std::size_t>((run + 1) / 2) + 1 < bt.piece) {
        break;
      }
      consider(run, u);
    }
    if (bt.piece == 0 && start_count[static_cast<int>(me.start)] > 1) {
      // No shared core anywhere, but another member starts in this factor.
      for (std::size_t u = 0; u < reps.size(); ++u) {
        if (u != static_cast<std::size_t>(order[t]) && reps[u].start == me.start) {
          bt = {1, 0, static_cast<int>(u)};
          break;
        }
      }
    }
  }

  report.min_relator_length = std::numeric_limits<std::size_t>::max();
  std::optional<std::size_t> top;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto& bm = report.base_max_piece[reps[i].ref.base];
    bm = std::max(bm, best[i].piece);
    report.min_relator_length = std::min(report.min_relator_length, reps[i].n);
    if (best[i].partner >= 0 && (!top || best[i].piece > best[*top].piece)) {
      top = i;
    }
  }
  if (top) {
    const Best& b = best[*top];
    report.max_piece_length = b.piece;
    PieceWitness w;
    w.first = reps[*top].ref;
    w.second = reps[b.partner].ref;
    w.length = b.piece;
    w.matched = b.matched;
    w.piece = build_piece(R, w.first, w.second, w.matched, w.length);
    report.witness = std::move(w);
  }
  report.max_conjugate_piece_length = report.max_piece_length + 1;
  report.achieved_lambda = Rational(static_cast<std::int64_t>(report.max_piece_length),
                                    static_cast<std::int64_t>(report.min_relator_length));
  return report;
}

bool verify_witness(const SymmetrizedSet& R, const PieceWitness& w) {
  if (w.first == w.second || w.piece.length() != w.length) {
    return false;
  }
  const auto& sys = R.system();
  for (RepRef ref : {w.first, w.second}) {
    AmalgamWord r = R.representative(ref);
    AmalgamWord c = multiply(sys, inverse(w.piece), r);
    Composition bc = compose(sys, w.piece, c);
    if (bc.boundary == Boundary::Cancelled) {
      return false;
    }
    if (!interleave_equal(sys, bc.word, canonical(sys, r))) {
      return false;
    }
  }
  return true;
}

CPrimeResult check_c_prime(const SymmetrizedSet& R, Rational lambda) {
  return check_c_prime(R, pieces(R), lambda);
}

CPrimeResult check_c_prime(const SymmetrizedSet& R, const PieceReport& report, Rational lambda) {
  if (lambda <= Rational(0)) {
    throw Error("lambda must be positive");
  }
  CPrimeResult out;
  out.lambda = lambda;
  out.report = report;
  out.certified = true;
  auto lt_lambda_times = [&](std::size_t piece, std::size_t n) {
    // piece < lambda * n
    return Rational(static_cast<std::int64_t>(piece)) <
           Rational(lambda.num() * static_cast<std::int64_t>(n), lambda.den());
  };
  for (std::size_t b = 0; b < R.bases().size(); ++b) {
    std::size_t n = R.relator_length(b);
    std::size_t p = report.base_max_piece.at(b);
    if (!(Rational(static_cast<std::int64_t>(n)) > Rational(lambda.den(), lambda.num()))) {
      out.certified = false;
      out.violation = "short relator";
      out.offending_base = b;
      out.offending_length = n;
      return out;
    }
    if (!lt_lambda_times(p, n) || !lt_lambda_times(p + 1, n + 1)) {
      out.certified = false;
      out.violation = "piece";
      out.offending_base = b;
      out.offending_length = lt_lambda_times(p, n) ? p + 1 : p;
      return out;
    }
  }
  return out;
}

CPrimeResult joint_family_check(const FactorSystem& sys, unsigned cap,
                                const std::vector<unsigned>& indices, Rational lambda) {
  std::vector<AmalgamWord> relators;
  for (unsigned n : indices) {
    relators.push_back(build_relator(sys, {cap, n}));
  }
  return check_c_prime(symmetrize(sys, relators), lambda);
}

CPrimeResult joint_family_check(const FactorSystem& sys, unsigned cap, unsigned max_index,
                                Rational lambda) {
  std::vector<unsigned> indices;
  for (unsigned n = 0; n <= max_index; ++n) {
    indices.push_back(n);
  }
  return joint_family_check(sys, cap, indices, lambda);
}

}  // namespace dehnkit
