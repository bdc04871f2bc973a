#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace dehnkit {

// Offset of the lexicographically least rotation of `s` (two-pointer
// minimum-expression scan, linear time).
template <class T>
std::size_t least_rotation(const std::vector<T>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const T& a = s[(i + k) % n];
    const T& b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) {
      ++j;
    }
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j) % n;
}

// Smallest p dividing n with s[i] == s[i + p] for all i (cyclic period).
template <class T>
std::size_t cyclic_period(const std::vector<T>& s) {
  const std::size_t n = s.size();
  if (n == 0) {
    return 0;
  }
  // Prefix function of s; the primitive root length divides n when the
  // border gives an exact tiling.
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && !(s[i] == s[k])) {
      k = pi[k - 1];
    }
    if (s[i] == s[k]) {
      ++k;
    }
    pi[i] = k;
  }
  std::size_t p = n - pi[n - 1];
  return n % p == 0 ? p : n;
}

}  // namespace dehnkit
