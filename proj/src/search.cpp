#include "qcc/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "qcc/bounds.hpp"
#include "qcc/errors.hpp"
#include "qcc/max_clique.hpp"
#include "qcc/rng.hpp"

namespace qcc {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) / i stays exact; saturate on overflow.
    const std::uint64_t num = mul_sat(r, n - k + i);
    if (num == kSaturated) return kSaturated;
    r = num / i;
  }
  return r;
}

// Symbols of a canonical word with the target composition, ascending.
std::vector<int> composition_multiset(const Partition& comp, int n) {
  std::vector<int> symbols(static_cast<std::size_t>(n - comp.sum()), 0);
  for (std::size_t s = 0; s < comp.size(); ++s) symbols.insert(symbols.end(), static_cast<std::size_t>(comp[s]), static_cast<int>(s) + 1);
  return symbols;
}

// Distance below d, with early exit.
bool conflicts(const std::vector<int>& a, const std::vector<int>& b, int d) {
  const int n = static_cast<int>(a.size());
  int equal = 0;
  const int limit = n - d;  // conflict once more than n-d positions agree
  if (limit < 0) return true;
  for (int x = 0; x < n; ++x) {
    if (a[static_cast<std::size_t>(x)] == b[static_cast<std::size_t>(x)] && ++equal > limit) return true;
  }
  return false;
}

}  // namespace

int SearchSpec::q() const {
  return std::visit([](const auto& t) { return t.q; }, target);
}

void SearchSpec::validate() const {
  if (n < 1) throw InvalidInput("search: n must be positive");
  if (d < 1) throw InvalidInput("search: d must be positive");
  if (budget < 1) throw InvalidInput("search: budget must be positive");
  if (const auto* c = std::get_if<CompositionTarget>(&target)) {
    if (c->composition.empty()) throw InvalidInput("search: empty composition");
    if (c->q < static_cast<int>(c->composition.size()) + 1) {
      throw InvalidInput("search: q too small for composition " + c->composition.to_string());
    }
    if (c->composition.sum() > n) throw InvalidInput("search: composition heavier than n");
  } else {
    const auto& t = std::get<WeightTarget>(target);
    if (t.q < 2 || t.w < 1 || t.w > n) throw InvalidInput("search: need q >= 2 and 1 <= w <= n");
  }
}

std::uint64_t candidate_count(const SearchSpec& spec) {
  spec.validate();
  if (const auto* c = std::get_if<CompositionTarget>(&spec.target)) {
    std::uint64_t r = 1;
    std::uint64_t remaining = static_cast<std::uint64_t>(spec.n);
    for (int part : c->composition.parts()) {
      r = mul_sat(r, binomial_sat(remaining, static_cast<std::uint64_t>(part)));
      remaining -= static_cast<std::uint64_t>(part);
    }
    return r;
  }
  const auto& t = std::get<WeightTarget>(spec.target);
  std::uint64_t r = binomial_sat(static_cast<std::uint64_t>(spec.n), static_cast<std::uint64_t>(t.w));
  for (int i = 0; i < t.w; ++i) r = mul_sat(r, static_cast<std::uint64_t>(t.q - 1));
  return r;
}

std::vector<Codeword> enumerate_candidates(const SearchSpec& spec, std::size_t cap) {
  const std::uint64_t count = candidate_count(spec);
  if (count > cap) {
    throw TooLarge("search: " + (count == kSaturated ? std::string("too many") : std::to_string(count)) +
                   " candidates exceed the cap of " + std::to_string(cap));
  }
  std::vector<Codeword> out;
  out.reserve(static_cast<std::size_t>(count));
  const int q = spec.q();
  if (const auto* c = std::get_if<CompositionTarget>(&spec.target)) {
    auto symbols = composition_multiset(c->composition, spec.n);
    do {
      out.emplace_back(q, symbols);
    } while (std::next_permutation(symbols.begin(), symbols.end()));
    return out;
  }
  const int w = std::get<WeightTarget>(spec.target).w;
  std::vector<int> symbols(static_cast<std::size_t>(spec.n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (spec.n - pos < left) return;
    if (pos == spec.n) {
      out.emplace_back(q, symbols);
      return;
    }
    const int first = left == spec.n - pos ? 1 : 0;  // forced nonzero
    const int last = left == 0 ? 0 : q - 1;
    for (int s = first; s <= last; ++s) {
      symbols[static_cast<std::size_t>(pos)] = s;
      self(self, pos + 1, left - (s != 0));
    }
    symbols[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, w);
  return out;
}

long search_upper_bound(const SearchSpec& spec) {
  spec.validate();
  if (const auto* c = std::get_if<CompositionTarget>(&spec.target)) {
    long bound = johnson_ccc(spec.n, spec.d, c->composition);
    if (spec.d == 2 * c->composition.sum() - 1) {
      bound = std::min(bound, trivial_upper(spec.n, c->composition).value);
    }
    return bound;
  }
  const auto& t = std::get<WeightTarget>(spec.target);
  return johnson_cwc(spec.n, spec.d, t.w, t.q);
}

ExactResult exact_max_code(const SearchSpec& spec, std::size_t cap) {
  const auto candidates = enumerate_candidates(spec, cap);
  ExactResult result;
  result.witness = Code(spec.q(), spec.n, {});
  if (candidates.empty()) {
    result.optimal = true;
    return result;
  }
  const auto& anchor = candidates.front().symbols();
  std::vector<std::size_t> neighbours;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (!conflicts(anchor, candidates[i].symbols(), spec.d)) neighbours.push_back(i);
  }
  constexpr std::size_t kMaxGraph = 20'000;
  if (neighbours.size() > kMaxGraph) {
    throw TooLarge("search: compatibility graph of " + std::to_string(neighbours.size()) +
                   " vertices exceeds " + std::to_string(kMaxGraph));
  }
  Graph g(neighbours.size());
  for (std::size_t a = 0; a < neighbours.size(); ++a) {
    const auto& u = candidates[neighbours[a]].symbols();
    for (std::size_t b = a + 1; b < neighbours.size(); ++b) {
      if (!conflicts(u, candidates[neighbours[b]].symbols(), spec.d)) g.add_edge(a, b);
    }
  }
  CliqueOptions options;
  options.node_budget = spec.budget;
  // Johnson-type bounds only; the exact binary cache may itself come from here.
  long bound = 0;
  if (const auto* c = std::get_if<CompositionTarget>(&spec.target)) {
    bound = johnson_ccc(spec.n, spec.d, c->composition);
  } else {
    const auto& t = std::get<WeightTarget>(spec.target);
    bound = johnson_cwc(spec.n, spec.d, t.w, t.q);
  }
  if (bound >= 1) options.upper_bound = static_cast<std::size_t>(bound - 1);
  const auto clique = max_clique(g, options);

  std::vector<Codeword> words{candidates.front()};
  for (std::size_t v : clique.clique) words.push_back(candidates[neighbours[v]]);
  result.size = words.size();
  result.witness = Code(spec.q(), spec.n, std::move(words));
  result.witness.declared_distance = spec.d;
  if (const auto* c = std::get_if<CompositionTarget>(&spec.target)) {
    result.witness.declared_composition = c->composition;
  }
  result.optimal = clique.optimal;
  result.nodes = clique.nodes;
  return result;
}

namespace {

class RandomWord {
 public:
  explicit RandomWord(const SearchSpec& spec) : spec_(spec) {
    if (const auto* c = std::get_if<CompositionTarget>(&spec.target)) {
      base_ = composition_multiset(c->composition, spec.n);
    } else {
      base_.assign(static_cast<std::size_t>(spec.n), 0);
      weight_ = std::get<WeightTarget>(spec.target).w;
    }
  }

  void draw(SplitMix64& rng, std::vector<int>& out) const {
    out = base_;
    const std::size_t n = out.size();
    if (weight_ == 0) {
      for (std::size_t i = n; i > 1; --i) std::swap(out[i - 1], out[rng.below(i)]);
      return;
    }
    // Partial Fisher-Yates over positions, then random nonzero symbols.
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = i;
    const auto q = static_cast<std::uint64_t>(spec_.q());
    for (std::size_t i = 0; i < static_cast<std::size_t>(weight_); ++i) {
      std::swap(pos[i], pos[i + rng.below(n - i)]);
      out[pos[i]] = 1 + static_cast<int>(rng.below(q - 1));
    }
  }

 private:
  const SearchSpec& spec_;
  std::vector<int> base_;
  int weight_ = 0;
};

struct LaneResult {
  std::vector<std::vector<int>> best;
  std::uint64_t steps = 0;
};

LaneResult run_lane(const SearchSpec& spec, const HillOptions& opt, std::uint64_t seed, std::size_t target) {
  SplitMix64 rng(seed);
  RandomWord generator(spec);
  std::vector<std::vector<int>> code;
  LaneResult lane;
  std::vector<int> v;
  std::vector<std::size_t> hits;
  std::uint64_t epoch_step = 0;
  std::uint64_t last_gain = 0;
  for (std::uint64_t step = 0; step < spec.budget && lane.best.size() < target; ++step) {
    ++lane.steps;
    ++epoch_step;
    if (epoch_step - last_gain > opt.window) {
      code.clear();
      epoch_step = 0;
      last_gain = 0;
    }
    generator.draw(rng, v);
    hits.clear();
    for (std::size_t i = 0; i < code.size() && hits.size() < 2; ++i) {
      if (conflicts(code[i], v, spec.d)) hits.push_back(i);
    }
    if (hits.empty()) {
      code.push_back(v);
      last_gain = epoch_step;
      if (code.size() > lane.best.size()) lane.best = code;
    } else if (hits.size() == 1 && code[hits.front()] != v) {
      const double p = std::max(opt.p_floor, std::exp(-static_cast<double>(epoch_step) / opt.tau));
      if (rng.uniform() < p) code[hits.front()] = v;
    }
  }
  std::sort(lane.best.begin(), lane.best.end());
  return lane;
}

}  // namespace

HillResult hill_climb(const SearchSpec& spec, const HillOptions& options) {
  spec.validate();
  if (options.lanes < 1 || options.threads < 1) throw InvalidInput("hill_climb: lanes and threads must be positive");
  HillResult result;
  result.target = spec.target_size ? *spec.target_size
                                   : static_cast<std::size_t>(std::max(1L, search_upper_bound(spec)));

  std::vector<LaneResult> lanes(static_cast<std::size_t>(options.lanes));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < options.lanes; k = next++) {
      lanes[static_cast<std::size_t>(k)] =
          run_lane(spec, options, spec.seed + static_cast<std::uint64_t>(k), result.target);
    }
  };
  const int threads = std::min(options.threads, options.lanes);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const LaneResult* best = &lanes.front();
  for (const auto& lane : lanes) {
    result.steps += lane.steps;
    if (lane.best.size() > best->best.size() ||
        (lane.best.size() == best->best.size() && lane.best < best->best)) {
      best = &lane;
    }
  }
  std::vector<Codeword> words;
  for (const auto& w : best->best) words.emplace_back(spec.q(), w);
  result.code = Code(spec.q(), spec.n, std::move(words));
  result.code.declared_distance = spec.d;
  if (const auto* c = std::get_if<CompositionTarget>(&spec.target)) result.code.declared_composition = c->composition;
  result.found = result.code.size() >= result.target;
  return result;
}

std::string sidecar_line(const SearchSpec& spec, const HillResult& result) {
  return "seed=" + std::to_string(spec.seed) + " budget=" + std::to_string(spec.budget) +
         " steps=" + std::to_string(result.steps) + " status=" + (result.found ? "found" : "target-missed");
}

}  // namespace qcc
