#pragma once

// Suffix array with LCP and a suffix automaton over integer alphabets.

#include <cstdint>
#include <utility>
#include <vector>

namespace dehnkit {

// Prefix-doubling suffix array; O(n log n) with radix passes.
std::vector<int> suffix_array(const std::vector<int>& text);
// Kasai. lcp[i] = LCP(sa[i-1], sa[i]); lcp[0] = 0.
std::vector<int> lcp_array(const std::vector<int>& text, const std::vector<int>& sa);

class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(const std::vector<int>& text);

  struct Match {
    int length = 0;  // symbols
    int end = -1;    // end position (inclusive) of one occurrence in the text
  };

  // Matching statistics: for each j, longest suffix of query[0..j] that is a
  // substring of the text, and the end of one occurrence.
  std::vector<Match> matching_statistics(const std::vector<int>& query) const;

  std::size_t state_count() const noexcept { return states_.size(); }

 private:
  struct State {
    int len = 0;
    int link = -1;
    int first_end = -1;
    std::vector<std::pair<int, int>> next;  // sorted by symbol
  };

  int transition(int state, int symbol) const;
  void set_transition(int state, int symbol, int target);
  void extend(int symbol, int pos);

  std::vector<State> states_;
  int last_ = 0;
};

}  // namespace dehnkit
