#include "dehnkit/relators.hpp"

#include "dehnkit/errors.hpp"

namespace dehnkit {

namespace {

void append_block(const FactorSystem& sys, std::vector<FactorWord>& out, std::uint64_t j) {
  // x a (y a)^j
  out.push_back(sys.x());
  out.push_back(sys.a());
  for (std::uint64_t i = 0; i < j; ++i) {
    out.push_back(sys.y());
    out.push_back(sys.a());
  }
}

}  // namespace

AmalgamWord build_r0(const FactorSystem& sys, unsigned cap) {
  if (cap < 2) {
    throw CapTooSmall(cap);
  }
  std::vector<FactorWord> letters;
  letters.reserve(r0_length_formula(cap));
  letters.push_back(sys.h());
  letters.push_back(sys.a());
  letters.push_back(sys.y());
  letters.push_back(sys.a());
  for (unsigned k = 2; k <= cap; ++k) {
    append_block(sys, letters, k);
  }
  return normalize(sys, letters);
}

AmalgamWord build_rn(const FactorSystem& sys, unsigned n, unsigned cap) {
  if (cap < 2) {
    throw CapTooSmall(cap);
  }
  if (n == 0) {
    return build_r0(sys, cap);
  }
  std::vector<FactorWord> letters;
  letters.reserve(rn_length_formula(n, cap));
  const std::uint64_t lo = static_cast<std::uint64_t>(cap) * (n - 1) + 1;
  const std::uint64_t hi = static_cast<std::uint64_t>(cap) * n;
  for (std::uint64_t j = lo; j <= hi; ++j) {
    append_block(sys, letters, j);
  }
  return normalize(sys, letters);
}

AmalgamWord build_relator(const FactorSystem& sys, const RelatorSpec& spec) {
  return spec.index == 0 ? build_r0(sys, spec.cap) : build_rn(sys, spec.index, spec.cap);
}

std::uint64_t r0_length_formula(unsigned cap) {
  std::uint64_t n = 4;
  for (std::uint64_t k = 2; k <= cap; ++k) {
    n += 2 + 2 * k;
  }
  return n;
}

std::uint64_t rn_length_formula(unsigned n, unsigned cap) {
  if (n == 0) {
    return r0_length_formula(cap);
  }
  const std::uint64_t lo = static_cast<std::uint64_t>(cap) * (n - 1) + 1;
  const std::uint64_t hi = static_cast<std::uint64_t>(cap) * n;
  // 2 cap + 2 * sum_{j=lo..hi} j
  return 2ULL * cap + (hi * (hi + 1) - (lo - 1) * lo);
}

}  // namespace dehnkit
