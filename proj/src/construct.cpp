#include "qcc/construct.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

// Pipeline arrays are deterministic; cache them across calls.
const LambdaArray& cached_array(const Partition& shape) {
  static std::mutex lock;
  static std::map<Partition, LambdaArray> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(shape);
  if (it == cache.end()) it = cache.emplace(shape, array_for_partition(shape)).first;
  return it->second;
}

std::vector<int> column_symbols(const LambdaArray& B, int n) {
  std::vector<int> g(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < B.shape.size(); ++j) {
    for (int b : B.column(j)) {
      if (b >= n) throw InvalidInput("array entry " + std::to_string(b) + " exceeds length");
      g[static_cast<std::size_t>(b)] = static_cast<int>(j) + 1;
    }
  }
  return g;
}

long round_up(long x, long k) { return (x + k - 1) / k * k; }

}  // namespace

BaseCodewordSet ccc_base_from_array(const LambdaArray& B, int n) {
  const int lambda1 = B.shape.largest();
  if (n % lambda1 != 0) {
    throw InvalidInput("n=" + std::to_string(n) + " is not a multiple of " + std::to_string(lambda1));
  }
  if (n < 2 * B.scope + 1) {
    throw InvalidInput("n=" + std::to_string(n) + " below 2σ+1=" + std::to_string(2 * B.scope + 1));
  }
  const int q = static_cast<int>(B.shape.size()) + 1;
  return {{Codeword(q, column_symbols(B, n))}, lambda1};
}

BaseCodewordSet cwc_bases_from_array(const LambdaArray& B, int beta, int m, int n) {
  const int ell = B.shape.largest();
  for (int part : B.shape.parts()) {
    if (part != ell) throw InvalidInput("cwc array shape must have equal parts");
  }
  const int columns = static_cast<int>(B.shape.size());
  if (beta < 1 || m < 1 || beta * m != columns) {
    throw InvalidInput("cwc array: beta·m must equal the number of columns");
  }
  if (n % ell != 0) throw InvalidInput("cwc array: row count must divide n");
  if (n < 2 * B.scope + 1) {
    throw InvalidInput("n=" + std::to_string(n) + " below 2σ+1=" + std::to_string(2 * B.scope + 1));
  }
  const int q = columns + 1;
  const auto all = column_symbols(B, n);
  BaseCodewordSet set{{}, ell};
  for (int j = 1; j <= m; ++j) {
    std::vector<int> g(all.size(), 0);
    for (std::size_t x = 0; x < all.size(); ++x) {
      if (all[x] > (j - 1) * beta && all[x] <= j * beta) g[x] = all[x];
    }
    set.bases.emplace_back(q, std::move(g));
  }
  return set;
}

long direct_cwc_threshold(int w, int q) {
  return static_cast<long>(w) * ((static_cast<long>(w) - 1) * (q - 2) + 1);
}

BaseCodewordSet cwc_bases_direct(int w, int q, int n) {
  if (w < 1 || q < 2 || n < 1 || n % w != 0) {
    throw InvalidInput("direct cwc: need w | n, w >= 1, q >= 2");
  }
  if (n < direct_cwc_threshold(w, q)) {
    throw InvalidInput("direct cwc: n=" + std::to_string(n) + " below " +
                       std::to_string(direct_cwc_threshold(w, q)));
  }
  BaseCodewordSet set{{}, w};
  for (int i = 1; i < q; ++i) {
    std::vector<int> g(static_cast<std::size_t>(n), 0);
    const long step = 1 + static_cast<long>(i - 1) * w;
    for (long k = 0; k < w; ++k) g[static_cast<std::size_t>(k * step % n)] = i;
    set.bases.emplace_back(q, std::move(g));
  }
  return set;
}

long ccc_threshold(const Partition& composition) {
  const auto& B = cached_array(composition);
  return round_up(2L * B.scope + 1, composition.largest());
}

long cwc_array_threshold(int q, int w, int n) {
  const auto dec = decompose_divisibility(n, w, q);
  if (!dec) return -1;
  const Partition shape(std::vector<int>(static_cast<std::size_t>(q - 1), static_cast<int>(dec->ell)));
  return 2L * cached_array(shape).scope + 1;
}

Code construct_optimal_ccc(const Partition& composition, int q, int n) {
  if (q != static_cast<int>(composition.size()) + 1) {
    throw InvalidInput("composition " + composition.to_string() + " needs q=" +
                       std::to_string(composition.size() + 1));
  }
  const int w1 = composition.largest();
  const long threshold = ccc_threshold(composition);
  const int base_n = n / w1 * w1;
  if (base_n < threshold) {
    throw UnsupportedLength(threshold, "composition " + composition.to_string() +
                                           " is supported from n=" + std::to_string(threshold));
  }
  Code code = develop(ccc_base_from_array(cached_array(composition), base_n));
  code = lengthen(code, n - base_n);
  code.declared_distance = 2 * composition.sum() - 1;
  code.declared_composition = composition;
  return code;
}

Code construct_optimal_cwc(int q, int w, int n) {
  const auto dec = decompose_divisibility(n, w, q);
  if (!dec) {
    throw InvalidInput(std::to_string(w) + " does not divide (q-1)n for q=" + std::to_string(q) +
                       " n=" + std::to_string(n));
  }
  Code code = [&] {
    const long direct = n % w == 0 ? direct_cwc_threshold(w, q) : -1;
    if (direct > 0 && n >= direct) return develop(cwc_bases_direct(w, q, n));
    const Partition shape(
        std::vector<int>(static_cast<std::size_t>(q - 1), static_cast<int>(dec->ell)));
    const auto& B = cached_array(shape);
    const long via_array = 2L * B.scope + 1;
    if (n >= via_array) {
      return develop(cwc_bases_from_array(B, static_cast<int>(dec->beta), static_cast<int>(dec->m), n));
    }
    const long threshold = direct > 0 ? std::min(direct, via_array) : via_array;
    throw UnsupportedLength(threshold, "(q=" + std::to_string(q) + ", w=" + std::to_string(w) +
                                           ") is supported from n=" + std::to_string(threshold) +
                                           " at this residue");
  }();
  code.declared_distance = 2 * w - 1;
  return code;
}

}  // namespace qcc
