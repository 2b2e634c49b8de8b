#include "qcc/max_clique.hpp"

#include <algorithm>
#include <bit>

namespace qcc {

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bitset::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return size_;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

namespace {

class Search {
 public:
  Search(const Graph& g, const CliqueOptions& options) : g_(g), options_(options) {}

  CliqueResult run() {
    Bitset all(g_.size());
    for (std::size_t v = 0; v < g_.size(); ++v) all.set(v);
    greedy_start();
    if (best_.size() < options_.upper_bound) expand(all);
    CliqueResult r;
    r.clique = best_;
    std::sort(r.clique.begin(), r.clique.end());
    r.optimal = !out_of_budget_;
    r.nodes = nodes_;
    return r;
  }

 private:
  // Lowest-index greedy clique as the incumbent.
  void greedy_start() {
    Bitset p(g_.size());
    for (std::size_t v = 0; v < g_.size(); ++v) p.set(v);
    while (!p.none()) {
      const std::size_t v = p.first();
      best_.push_back(v);
      p &= g_.neighbours(v);
    }
  }

  // Sequential colouring of p in index order; vertices come back sorted by
  // colour class, with bounds[k] the colour of order[k].
  void colour(const Bitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bounds) const {
    Bitset uncoloured = p;
    std::size_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      Bitset candidates = uncoloured;
      while (!candidates.none()) {
        const std::size_t v = candidates.first();
        candidates.reset(v);
        candidates.subtract(g_.neighbours(v));
        uncoloured.reset(v);
        order.push_back(v);
        bounds.push_back(k);
      }
    }
  }

  void expand(Bitset p) {
    if (stop_) return;
    if (++nodes_ > options_.node_budget) {
      out_of_budget_ = true;
      stop_ = true;
      return;
    }
    std::vector<std::size_t> order;
    std::vector<std::size_t> bounds;
    colour(p, order, bounds);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + bounds[k] <= best_.size()) return;
      const std::size_t v = order[k];
      current_.push_back(v);
      Bitset next = p;
      next &= g_.neighbours(v);
      if (next.none()) {
        if (current_.size() > best_.size()) {
          best_ = current_;
          if (best_.size() >= options_.upper_bound) stop_ = true;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (stop_) return;
      p.reset(v);
    }
  }

  const Graph& g_;
  const CliqueOptions& options_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool out_of_budget_ = false;
};

}  // namespace

CliqueResult max_clique(const Graph& g, const CliqueOptions& options) {
  return Search(g, options).run();
}

}  // namespace qcc
