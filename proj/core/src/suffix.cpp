#include "dehnkit/suffix.hpp"

#include <algorithm>
#include <numeric>

namespace dehnkit {

std::vector<int> suffix_array(const std::vector<int>& text) {
  const int n = static_cast<int>(text.size());
  std::vector<int> sa(n), rank(n), tmp(n);
  if (n == 0) {
    return sa;
  }
  // Initial ranks: dense relabelling of the alphabet.
  std::vector<int> sorted = text;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int i = 0; i < n; ++i) {
    rank[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), text[i]) -
                               sorted.begin());
  }
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](int a, int b) { return rank[a] < rank[b]; });

  std::vector<int> cnt, sa2(n);
  int classes = static_cast<int>(sorted.size());
  for (int k = 1;; k <<= 1) {
    // Sort by (rank[i], rank[i+k]) with -1 for past-the-end, via two
    // counting passes.
    auto second = [&](int i) { return i + k < n ? rank[i + k] + 1 : 0; };
    cnt.assign(classes + 1, 0);
    for (int i = 0; i < n; ++i) cnt[second(i)]++;
    for (int i = 1; i <= classes; ++i) cnt[i] += cnt[i - 1];
    for (int i = n - 1; i >= 0; --i) sa2[--cnt[second(i)]] = i;
    cnt.assign(classes + 1, 0);
    for (int i = 0; i < n; ++i) cnt[rank[i]]++;
    for (int i = 1; i <= classes; ++i) cnt[i] += cnt[i - 1];
    for (int i = n - 1; i >= 0; --i) sa[--cnt[rank[sa2[i]]]] = sa2[i];

    tmp[sa[0]] = 0;
    for (int i = 1; i < n; ++i) {
      int a = sa[i - 1], b = sa[i];
      bool same = rank[a] == rank[b] && second(a) == second(b);
      tmp[b] = tmp[a] + (same ? 0 : 1);
    }
    rank.swap(tmp);
    classes = rank[sa[n - 1]] + 1;
    if (classes == n) {
      break;
    }
  }
  return sa;
}

std::vector<int> lcp_array(const std::vector<int>& text, const std::vector<int>& sa) {
  const int n = static_cast<int>(text.size());
  std::vector<int> rank(n), lcp(n, 0);
  for (int i = 0; i < n; ++i) rank[sa[i]] = i;
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    int j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

SuffixAutomaton::SuffixAutomaton(const std::vector<int>& text) {
  states_.reserve(2 * text.size() + 1);
  states_.push_back({});
  for (int i = 0; i < static_cast<int>(text.size()); ++i) {
    extend(text[i], i);
  }
}

int SuffixAutomaton::transition(int state, int symbol) const {
  const auto& nx = states_[state].next;
  auto it = std::lower_bound(nx.begin(), nx.end(), std::pair<int, int>{symbol, -1});
  return it != nx.end() && it->first == symbol ? it->second : -1;
}

void SuffixAutomaton::set_transition(int state, int symbol, int target) {
  auto& nx = states_[state].next;
  auto it = std::lower_bound(nx.begin(), nx.end(), std::pair<int, int>{symbol, -1});
  if (it != nx.end() && it->first == symbol) {
    it->second = target;
  } else {
    nx.insert(it, {symbol, target});
  }
}

void SuffixAutomaton::extend(int symbol, int pos) {
  int cur = static_cast<int>(states_.size());
  states_.push_back({states_[last_].len + 1, -1, pos, {}});
  int p = last_;
  while (p != -1 && transition(p, symbol) == -1) {
    set_transition(p, symbol, cur);
    p = states_[p].link;
  }
  if (p == -1) {
    states_[cur].link = 0;
  } else {
    int q = transition(p, symbol);
    if (states_[p].len + 1 == states_[q].len) {
      states_[cur].link = q;
    } else {
      int clone = static_cast<int>(states_.size());
      State c = states_[q];
      c.len = states_[p].len + 1;
      states_.push_back(std::move(c));
      while (p != -1 && transition(p, symbol) == q) {
        set_transition(p, symbol, clone);
        p = states_[p].link;
      }
      states_[q].link = clone;
      states_[cur].link = clone;
    }
  }
  last_ = cur;
}

std::vector<SuffixAutomaton::Match> SuffixAutomaton::matching_statistics(
    const std::vector<int>& query) const {
  std::vector<Match> out(query.size());
  int state = 0;
  int len = 0;
  for (std::size_t j = 0; j < query.size(); ++j) {
    int sym = query[j];
    while (state != 0 && transition(state, sym) == -1) {
      state = states_[state].link;
      len = states_[state].len;
    }
    int t = transition(state, sym);
    if (t != -1) {
      state = t;
      ++len;
    } else {
      state = 0;
      len = 0;
    }
    out[j] = {len, len > 0 ? states_[state].first_end : -1};
  }
  return out;
}

}  // namespace dehnkit
