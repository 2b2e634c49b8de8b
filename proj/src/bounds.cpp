#include "qcc/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qcc/embedded.hpp"
#include "qcc/errors.hpp"

namespace qcc {

std::string_view to_string(BoundSource source) {
  switch (source) {
    case BoundSource::JohnsonCcc: return "johnson-ccc";
    case BoundSource::JohnsonCwc: return "johnson-cwc";
    case BoundSource::TrivialBinary: return "trivial-binary";
    case BoundSource::TrivialSurrogate: return "trivial-surrogate";
  }
  return "unknown";
}

namespace {

using CccKey = std::tuple<int, int, std::vector<int>>;

long johnson_ccc_rec(int n, int d, const std::vector<int>& parts, std::map<CccKey, long>& memo) {
  int sigma = 0;
  for (int p : parts) sigma += p;
  if (n < sigma) return 0;
  if (d >= 2 * sigma + 1) return 1;
  if (d == 2 * sigma) return n / sigma;
  const CccKey key{n, d, parts};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  long best = -1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i] == parts[i - 1]) continue;
    auto reduced = parts;
    --reduced[i];
    std::sort(reduced.begin(), reduced.end(), std::greater<>());
    while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
    const long inner = johnson_ccc_rec(n - 1, d, reduced, memo);
    const long value = static_cast<long>(n) * inner / parts[i];
    if (best < 0 || value < best) best = value;
  }
  memo.emplace(key, best);
  return best;
}

long johnson_cwc_rec(int n, int d, int w, int q) {
  if (n < w) return 0;
  if (d >= 2 * w + 1) return 1;
  if (d == 2 * w) return n / w;
  // Each step needs the full inner value, so no memo: depth is at most w.
  return static_cast<long>(n) * (q - 1) * johnson_cwc_rec(n - 1, d, w - 1, q) / w;
}

}  // namespace

long johnson_ccc(int n, int d, const Partition& composition) {
  if (composition.empty() || d < 1 || n < 0) throw InvalidInput("johnson_ccc: need w̄ non-empty, d >= 1");
  static std::mutex lock;
  static std::map<CccKey, long> memo;
  std::lock_guard guard(lock);
  return johnson_ccc_rec(n, d, composition.parts(), memo);
}

long johnson_cwc(int n, int d, int w, int q) {
  if (w < 1 || d < 1 || q < 2 || n < 0) throw InvalidInput("johnson_cwc: need w >= 1, d >= 1, q >= 2");
  return johnson_cwc_rec(n, d, w, q);
}

const A2Cache& A2Cache::embedded() {
  static const A2Cache cache = parse(embedded_file("a2_cache.txt"));
  return cache;
}

A2Cache A2Cache::parse(std::string_view text) {
  A2Cache cache;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int n = 0;
    int w = 0;
    Entry e;
    if (!(fields >> n)) continue;
    if (!(fields >> w >> e.value >> e.source)) throw InvalidInput("a2 cache: malformed line '" + line + "'");
    cache.entries_.push_back({{n, w}, e});
  }
  std::sort(cache.entries_.begin(), cache.entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return cache;
}

std::optional<A2Cache::Entry> A2Cache::find(int n, int w) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{n, w},
                                   [](const auto& e, const auto& key) { return e.first < key; });
  if (it == entries_.end() || it->first != std::pair{n, w}) return std::nullopt;
  return it->second;
}

long binary_surrogate(int n, int w) {
  if (w < 1 || n < w) return 0;
  if (w == 1) return n;
  return static_cast<long>(n) * ((n - 1) / (w - 1)) / w;
}

BoundReport trivial_upper(int n, const Partition& composition, const A2Cache& cache) {
  const int w = composition.sum();
  if (n < w) return {0, BoundSource::TrivialBinary};
  if (const auto hit = cache.find(n, w)) return {hit->value, BoundSource::TrivialBinary};
  return {binary_surrogate(n, w), BoundSource::TrivialSurrogate};
}

std::pair<long, long> nccc_bounds(const Partition& composition) {
  if (composition.empty()) throw InvalidInput("nccc_bounds: empty composition");
  const long s = composition.sum();
  const long w1 = composition.largest();
  const long lower = s * s - w1 * (s - 1);
  const long upper = 2 * w1 * (s - 1) * static_cast<long>(smallest_prime_power(static_cast<std::uint64_t>(std::max(1L, s - 1)))) + 1;
  return {lower, upper};
}

long composition_length_lower_bound(const Partition& composition) {
  const long w1 = composition.largest();
  const long k = composition.sum() / w1;
  return w1 * w1 * k * (k - 1) + w1;
}

CwcThresholds cwc_thresholds(int q, int w, std::optional<int> ell, const std::optional<Partition>& composition) {
  if (q < 2 || w < 1) throw InvalidInput("cwc_thresholds: need q >= 2, w >= 1");
  CwcThresholds t;
  if (composition) t.n_min_lb = composition_length_lower_bound(*composition);
  t.etzion = static_cast<long>(w - 1) * (q - 1) + 1;
  t.direct = static_cast<long>(w) * (static_cast<long>(w - 1) * (q - 2) + 1);
  const long l = ell.value_or(w);
  const long x = l * (q - 1) - 1;
  t.ncwc_upper = 2 * l * x * static_cast<long>(smallest_prime_power(static_cast<std::uint64_t>(std::max(1L, x)))) + 1;
  return t;
}

}  // namespace qcc
