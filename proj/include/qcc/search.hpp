#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcc/arrays.hpp"
#include "qcc/codes.hpp"

namespace qcc {

struct CompositionTarget {
  Partition composition;
  int q = 0;
};

struct WeightTarget {
  int w = 0;
  int q = 0;
};

struct SearchSpec {
  SearchSpec() = default;
  SearchSpec(int n_, int d_, std::variant<CompositionTarget, WeightTarget> target_)
      : n(n_), d(d_), target(std::move(target_)) {}

  int n = 0;
  int d = 1;
  std::variant<CompositionTarget, WeightTarget> target;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  std::optional<std::size_t> target_size;

  int q() const;
  // Throws InvalidInput on inconsistent parameters.
  void validate() const;
};

inline constexpr std::size_t kDefaultCandidateCap = 200'000;

// Number of vectors of the target composition or weight (saturates at
// UINT64_MAX).
std::uint64_t candidate_count(const SearchSpec& spec);
// All such vectors in lexicographic order. Throws TooLarge above `cap`.
std::vector<Codeword> enumerate_candidates(const SearchSpec& spec, std::size_t cap = kDefaultCandidateCap);

// Smallest upper bound known to the bounds module at these parameters.
long search_upper_bound(const SearchSpec& spec);

struct ExactResult {
  std::size_t size = 0;
  Code witness;
  bool optimal = false;  // false when the node budget ran out
  std::uint64_t nodes = 0;
};

// Maximum clique in the graph of candidates joined when at distance >= d.
// The lexicographically least candidate is fixed in the code (the symmetry
// group acts transitively on candidates). `spec.budget` limits branch nodes.
ExactResult exact_max_code(const SearchSpec& spec, std::size_t cap = kDefaultCandidateCap);

struct HillOptions {
  int lanes = 1;    // independent restarts; lane k is seeded with seed + k
  int threads = 1;  // does not affect the result
  std::uint64_t window = 50'000;  // stagnant steps before a restart
  double tau = 20'000.0;          // swap probability exp(-t/tau) after a restart ...
  double p_floor = 0.1;           // ... but never below this
};

struct HillResult {
  Code code;
  bool found = false;  // reached the target size
  std::size_t target = 0;
  std::uint64_t steps = 0;  // summed over lanes
};

// Random insertion local search. A candidate conflicting with exactly one
// codeword replaces it with the scheduled probability. Each lane is fully
// determined by its seed; lanes merge by size, then by the lexicographically
// least sorted codeword list.
HillResult hill_climb(const SearchSpec& spec, const HillOptions& options = {});

// "seed=<s> budget=<b> steps=<k> status=<found|target-missed>"
std::string sidecar_line(const SearchSpec& spec, const HillResult& result);

// Minimum-scope lambda-array of `shape` with scope <= scope_cap, by
// exhaustive search over scopes in increasing order.
std::optional<LambdaArray> min_scope_array(const Partition& shape, int scope_cap);

}  // namespace qcc
