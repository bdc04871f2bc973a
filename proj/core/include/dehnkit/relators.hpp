#pragma once

// The relator words of the one-relator step and of the descending family.
//
//   r0 = h a (y a) x a (y a)^2 x a (y a)^3 ... x a (y a)^cap
//   rn = x a (y a)^(cap(n-1)+1) x a (y a)^(cap(n-1)+2) ... x a (y a)^(cap n)
//
// With cap 80 both r0 and r1 have 6640 letters.

#include <cstdint>

#include "dehnkit/amalgam.hpp"

namespace dehnkit {

struct RelatorSpec {
  unsigned cap = 80;
  unsigned index = 0;  // 0: r0; n >= 1: rn
};

// Throws CapTooSmall when cap < 2.
AmalgamWord build_r0(const FactorSystem& sys, unsigned cap);
AmalgamWord build_rn(const FactorSystem& sys, unsigned n, unsigned cap);
AmalgamWord build_relator(const FactorSystem& sys, const RelatorSpec& spec);

// Closed-form letter counts, assuming x, y, h, a are letters outside H.
std::uint64_t r0_length_formula(unsigned cap);
std::uint64_t rn_length_formula(unsigned n, unsigned cap);

}  // namespace dehnkit
