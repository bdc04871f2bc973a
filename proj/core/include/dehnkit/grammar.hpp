#pragma once

// Word grammar shared by every front end:
//
//   word  := atom*
//   atom  := sym | sym '^' int | '(' word ')' | '(' word ')' '^' int
//          | 1                         (the identity)
//
// Atoms are whitespace separated; `^k` with negative k inverts. A trailing
// `@H` tag (printed for words that lie in the amalgamated subgroup) is
// accepted and ignored.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dehnkit/bigint.hpp"

namespace dehnkit {

struct RawSyllable {
  std::string symbol;
  Exponent exponent;

  bool operator==(const RawSyllable&) const = default;
};

using RawWord = std::vector<RawSyllable>;

// Parses `text` into a flat syllable list. Group powers are expanded; no
// free reduction happens here. Throws ParseError.
RawWord parse_word(std::string_view text);

RawWord inverse(const RawWord& w);

// Inverse of parse_word for already-flat words: `x y^-2 a`.
std::string format_raw(const RawWord& w);

}  // namespace dehnkit
