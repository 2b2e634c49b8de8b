#include "qcc/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "qcc/errors.hpp"

namespace qcc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidInput("partition parts must be weakly decreasing: " + to_string());
    }
  }
}

Partition Partition::from_counts(std::vector<int> counts) {
  std::erase(counts, 0);
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return Partition(std::move(counts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidInput("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) throw InvalidInput("conjugate of the empty partition");
  std::vector<int> result(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++result[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(result));
}

namespace {

// Backtracking exact cover of coarse parts by disjoint groups of fine parts.
class RefinementSearch {
 public:
  RefinementSearch(const Partition& fine, const Partition& coarse)
      : fine_(fine.parts()), coarse_(coarse.parts()), used_(fine_.size(), false),
        groups_(coarse_.size()) {}

  std::optional<RefinementWitness> run() {
    if (fine_.empty() || coarse_.empty()) return std::nullopt;
    if (std::accumulate(fine_.begin(), fine_.end(), 0) !=
        std::accumulate(coarse_.begin(), coarse_.end(), 0)) {
      return std::nullopt;
    }
    if (!assign(0)) return std::nullopt;
    return groups_;
  }

 private:
  bool assign(std::size_t j) {
    if (j == coarse_.size()) return true;
    return fill(j, 0, coarse_[j]);
  }

  // Extends groups_[j] with unused fine parts at index >= start until the
  // remaining amount is zero.
  bool fill(std::size_t j, std::size_t start, int remaining) {
    if (remaining == 0) return assign(j + 1);
    for (std::size_t i = start; i < fine_.size(); ++i) {
      if (used_[i] || fine_[i] > remaining) continue;
      used_[i] = true;
      groups_[j].push_back(i);
      if (fill(j, i + 1, remaining - fine_[i])) return true;
      groups_[j].pop_back();
      used_[i] = false;
    }
    return false;
  }

  const std::vector<int>& fine_;
  const std::vector<int>& coarse_;
  std::vector<bool> used_;
  RefinementWitness groups_;
};

}  // namespace

std::optional<RefinementWitness> refinement_witness(const Partition& fine,
                                                    const Partition& coarse) {
  return RefinementSearch(fine, coarse).run();
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::uint64_t d = 3; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

bool is_prime_power(std::uint64_t x) {
  if (x < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= x && x % p != 0) ++p;
  if (x % p != 0) return true;  // x itself is prime
  while (x % p == 0) x /= p;
  return x == 1;
}

std::uint64_t smallest_prime_power(std::uint64_t x) {
  if (x == 0) throw InvalidInput("smallest_prime_power requires x >= 1");
  if (x == 1) return 1;
  while (!is_prime_power(x)) ++x;
  return x;
}

std::uint64_t smallest_prime_at_least(std::uint64_t x) {
  while (!is_prime(x)) ++x;
  return x;
}

std::optional<DivisibilityDecomposition> decompose_divisibility(long n, long w, long q) {
  if (w < 1 || q < 2) throw InvalidInput("decompose_divisibility requires w >= 1 and q >= 2");
  if (n < w) throw InvalidInput("decompose_divisibility requires n >= w");
  if (((q - 1) * n) % w != 0) return std::nullopt;
  DivisibilityDecomposition d;
  d.ell = std::gcd(w, n);
  d.alpha = n / d.ell;
  d.beta = w / d.ell;
  d.m = (q - 1) / d.beta;
  return d;
}

}  // namespace qcc
