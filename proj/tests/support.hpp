#pragma once

// Independent oracles for the unit tests. Deliberately naive: nothing here
// shares code with the library beyond the data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "qcc/codes.hpp"
#include "qcc/partition.hpp"

namespace qcc::testing {

// All partitions of `total`, parts in decreasing order.
inline std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

inline bool naive_is_prime_power(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      return x == 1;
    }
  }
  return true;
}

inline bool is_golomb(const std::vector<int>& marks) {
  std::vector<int> diffs;
  for (std::size_t i = 0; i < marks.size(); ++i)
    for (std::size_t j = i + 1; j < marks.size(); ++j) diffs.push_back(std::abs(marks[j] - marks[i]));
  std::sort(diffs.begin(), diffs.end());
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

// Length of the shortest Golomb ruler with `marks` marks, by backtracking
// over lengths 0, 1, 2, ...
inline int shortest_golomb_length(int marks) {
  if (marks <= 1) return 0;
  for (int len = 1;; ++len) {
    std::vector<int> cur{0};
    std::vector<char> used(len + 1, 0);
    std::function<bool(int)> rec = [&](int next) -> bool {
      if (static_cast<int>(cur.size()) == marks - 1) {
        for (int m : cur)
          if (used[len - m]) return false;
        return true;
      }
      for (int x = next; x < len; ++x) {
        bool ok = true;
        for (int m : cur) ok = ok && !used[x - m];
        if (!ok) continue;
        for (int m : cur) used[x - m] = 1;
        cur.push_back(x);
        if (rec(x + 1)) return true;
        cur.pop_back();
        for (int m : cur) used[x - m] = 0;
      }
      return false;
    };
    if (rec(1)) return len;
  }
}

inline int naive_distance(const Codeword& a, const Codeword& b) {
  int d = 0;
  for (int x = 0; x < a.length(); ++x) d += a[x] != b[x];
  return d;
}

inline int naive_min_distance(const Code& c) {
  int best = 1 << 30;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) best = std::min(best, naive_distance(c.words()[i], c.words()[j]));
  return best;
}

// Every length-n vector over q symbols with exactly comp[s-1] occurrences of
// symbol s. Plain odometer over q^n.
inline std::vector<Codeword> all_words_of_composition(int q, int n, const Partition& comp) {
  std::vector<Codeword> out;
  std::vector<int> v(n, 0);
  while (true) {
    std::vector<int> counts(q - 1, 0);
    for (int s : v)
      if (s) ++counts[s - 1];
    if (counts == comp.parts()) out.emplace_back(q, v);
    int i = n - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

// Exhaustive maximum code: plain include/exclude recursion with a size bound.
inline std::size_t brute_force_max_code(const std::vector<Codeword>& words, int d) {
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    best = std::max(best, chosen.size());
    if (i == words.size() || chosen.size() + (words.size() - i) <= best) return;
    bool ok = true;
    for (auto c : chosen) ok = ok && naive_distance(words[c], words[i]) >= d;
    if (ok) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
    rec(i + 1);
  };
  rec(0);
  return best;
}

}  // namespace qcc::testing
