#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcc {

// Weakly decreasing tuple of positive integers. Used for compositions of
// codewords, shapes of lambda-arrays and block-size profiles of GDTS.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidInput unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Sorts descending and drops zeros, so any symbol-count vector is accepted.
  static Partition from_counts(std::vector<int> counts);
  // "3,2,2" -> [[3,2,2]]. Whitespace around parts is ignored.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_.at(i); }
  int largest() const { return empty() ? 0 : parts_.front(); }
  int sum() const noexcept;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// lambda*_j = number of parts >= j. Throws InvalidInput on the empty partition.
Partition conjugate(const Partition& p);

// groups[j] lists the (0-based) indices of fine parts whose sum is coarse[j].
using RefinementWitness = std::vector<std::vector<std::size_t>>;

// Returns a witness iff `fine` refines `coarse`. The search assigns coarse parts
// in order, each taking the lexicographically least index set that still lets
// the remaining parts be covered.
std::optional<RefinementWitness> refinement_witness(const Partition& fine,
                                                    const Partition& coarse);
inline bool is_refinement(const Partition& fine, const Partition& coarse) {
  return refinement_witness(fine, coarse).has_value();
}

bool is_prime(std::uint64_t x);
bool is_prime_power(std::uint64_t x);
// Smallest prime power >= x, with the convention that the value at 1 is 1.
// Throws InvalidInput for x == 0.
std::uint64_t smallest_prime_power(std::uint64_t x);
// Smallest prime >= x.
std::uint64_t smallest_prime_at_least(std::uint64_t x);

// n = alpha*ell, w = beta*ell, q-1 = m*beta with ell = gcd(w, n).
struct DivisibilityDecomposition {
  long alpha = 0;
  long beta = 0;
  long ell = 0;
  long m = 0;

  bool operator==(const DivisibilityDecomposition&) const = default;
};

// Present iff w | (q-1)n. Throws InvalidInput if n < w, w < 1 or q < 2.
std::optional<DivisibilityDecomposition> decompose_divisibility(long n, long w, long q);

}  // namespace qcc
