#pragma once

#include <cstdint>
#include <vector>

namespace qcc {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool none() const;
  std::size_t count() const;
  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const;

  Bitset& operator&=(const Bitset& other);
  // this &= ~other
  Bitset& subtract(const Bitset& other);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Undirected simple graph as adjacency bitsets.
class Graph {
 public:
  explicit Graph(std::size_t vertices) : adjacency_(vertices, Bitset(vertices)) {}

  std::size_t size() const noexcept { return adjacency_.size(); }
  void add_edge(std::size_t u, std::size_t v) {
    adjacency_[u].set(v);
    adjacency_[v].set(u);
  }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  const Bitset& neighbours(std::size_t v) const { return adjacency_[v]; }

 private:
  std::vector<Bitset> adjacency_;
};

struct CliqueOptions {
  std::uint64_t node_budget = 100'000'000;
  // Stop as soon as a clique this large is found (it is then optimal).
  std::size_t upper_bound = static_cast<std::size_t>(-1);
};

struct CliqueResult {
  std::vector<std::size_t> clique;  // ascending vertex indices
  bool optimal = false;             // search completed or hit upper_bound
  std::uint64_t nodes = 0;
};

// Branch and bound with greedy colouring bounds over bitsets. Vertices are
// branched in index order, so the result is deterministic.
CliqueResult max_clique(const Graph& g, const CliqueOptions& options = {});

}  // namespace qcc
