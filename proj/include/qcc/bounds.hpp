#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qcc/partition.hpp"

namespace qcc {

enum class BoundSource { JohnsonCcc, JohnsonCwc, TrivialBinary, TrivialSurrogate };

std::string_view to_string(BoundSource source);

struct BoundReport {
  long value = 0;
  BoundSource source = BoundSource::JohnsonCcc;
};

// Memoized Johnson recursion for A_q(n, d, w̄), reducing whichever part gives
// the smallest value. 0 when n < Σw̄.
long johnson_ccc(int n, int d, const Partition& composition);
// Johnson recursion for A_q(n, d, w). 0 when n < w.
long johnson_cwc(int n, int d, int w, int q);

// Exact A_2(n, 2w-2, w) values computed offline by the clique oracle.
class A2Cache {
 public:
  struct Entry {
    long value = 0;
    std::string source;
  };

  // Embedded data/a2_cache.txt.
  static const A2Cache& embedded();
  // Lines "n w value source"; '#' starts a comment.
  static A2Cache parse(std::string_view text);

  std::optional<Entry> find(int n, int w) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::pair<std::pair<int, int>, Entry>> entries_;
};

// ⌊n/w · ⌊(n-1)/(w-1)⌋⌋, n for w = 1.
long binary_surrogate(int n, int w);

// A_2(n, 2Σw̄-2, Σw̄): exact from the cache when present, else the surrogate.
BoundReport trivial_upper(int n, const Partition& composition, const A2Cache& cache = A2Cache::embedded());

// ((Σ)² - w1(Σ-1), 2w1(Σ-1)℘(Σ-1)+1).
std::pair<long, long> nccc_bounds(const Partition& composition);

// n >= w1²k(k-1) + w1 with k = ⌊Σ/w1⌋, for codes of size n/w1.
long composition_length_lower_bound(const Partition& composition);

struct CwcThresholds {
  std::optional<long> n_min_lb;  // only when a composition is supplied
  long etzion = 0;               // (w-1)(q-1)+1
  long direct = 0;               // w((w-1)(q-2)+1)
  long ncwc_upper = 0;           // 2ℓ(ℓ(q-1)-1)℘(ℓ(q-1)-1)+1
};

// ncwc_upper uses ell = w unless `ell` is given.
CwcThresholds cwc_thresholds(int q, int w, std::optional<int> ell = std::nullopt,
                             const std::optional<Partition>& composition = std::nullopt);

}  // namespace qcc
