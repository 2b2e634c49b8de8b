#include <doctest.h>

#include "qcc/arrays.hpp"
#include "qcc/bounds.hpp"
#include "qcc/errors.hpp"
#include "qcc/max_clique.hpp"
#include "qcc/rng.hpp"
#include "qcc/search.hpp"
#include "support.hpp"

using qcc::CompositionTarget;
using qcc::Partition;
using qcc::SearchSpec;
using qcc::WeightTarget;

namespace {

SearchSpec ccc(int n, int d, const Partition& comp) {
  return SearchSpec{n, d, CompositionTarget{comp, static_cast<int>(comp.size()) + 1}};
}

}  // namespace

TEST_CASE("search parameter validation") {
  CHECK_THROWS_AS(ccc(3, 1, {2, 2}).validate(), qcc::InvalidInput);
  CHECK_THROWS_AS((SearchSpec{5, 0, WeightTarget{2, 3}}).validate(), qcc::InvalidInput);
  CHECK_THROWS_AS((SearchSpec{5, 3, CompositionTarget{{1, 1}, 2}}).validate(), qcc::InvalidInput);
  CHECK_NOTHROW(ccc(6, 7, {2, 2}).validate());
  CHECK(ccc(6, 7, {2, 2}).q() == 3);
}

TEST_CASE("candidate enumeration") {
  CHECK(qcc::candidate_count(ccc(6, 7, {2, 2})) == 90);
  const auto words = qcc::enumerate_candidates(ccc(6, 7, {2, 2}));
  CHECK(words.size() == 90);
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK(words == qcc::testing::all_words_of_composition(3, 6, {2, 2}));
  CHECK(qcc::candidate_count(SearchSpec{6, 3, WeightTarget{2, 3}}) == 60);
  CHECK_THROWS_AS(qcc::enumerate_candidates(ccc(30, 11, {1, 1, 1, 1, 1, 1})), qcc::TooLarge);
}

TEST_CASE("max clique against brute force on random graphs") {
  qcc::SplitMix64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 8 + rng.below(14);
    qcc::Graph g(n);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.uniform() < 0.5) {
          g.add_edge(i, j);
          adj[i][j] = adj[j][i] = 1;
        }
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n && ok; ++j)
          if ((mask >> i & 1) && (mask >> j & 1) && !adj[i][j]) ok = false;
      if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
    }
    const auto r = qcc::max_clique(g, {});
    REQUIRE(r.optimal);
    REQUIRE(r.clique.size() == best);
    for (auto a : r.clique)
      for (auto b : r.clique)
        if (a != b) REQUIRE(adj[a][b]);
  }
}

TEST_CASE("exact search examples") {
  CHECK(qcc::exact_max_code(ccc(6, 7, {2, 2})).size == 1);
  CHECK(qcc::exact_max_code(ccc(9, 7, {2, 2})).size == 3);
  const auto r = qcc::exact_max_code(ccc(6, 5, {1, 1, 1}));
  CHECK(r.size == 4);
  CHECK(r.optimal);
  CHECK(r.witness.size() == 4);
  CHECK(qcc::verify_code(r.witness).distance_at_least(5));
}

TEST_CASE("exact search agrees with brute force on tiny instances") {
  struct Case {
    int n, d;
    Partition comp;
  };
  const Case cases[] = {{4, 3, {1, 1}}, {5, 3, {1, 1}}, {5, 5, {2, 1}}, {6, 5, {2, 1}}, {5, 4, {2, 1}},
                        {6, 3, {2}},    {7, 5, {1, 1, 1}}, {5, 3, {1, 1, 1}}, {6, 6, {2, 1}}};
  for (const auto& c : cases) {
    const auto label = c.comp.to_string();
    CAPTURE(c.n);
    CAPTURE(c.d);
    CAPTURE(label);
    const int q = static_cast<int>(c.comp.size()) + 1;
    const auto words = qcc::testing::all_words_of_composition(q, c.n, c.comp);
    const auto r = qcc::exact_max_code(ccc(c.n, c.d, c.comp));
    REQUIRE(r.optimal);
    REQUIRE(r.size == qcc::testing::brute_force_max_code(words, c.d));
    REQUIRE(qcc::verify_code(r.witness).distance_at_least(c.d));
  }
  const auto wr = qcc::exact_max_code(SearchSpec{5, 3, WeightTarget{2, 3}});
  const auto ww = [] {
    std::vector<qcc::Codeword> all;
    for (const auto& comp : {Partition{2}, Partition{1, 1}})
      for (auto& w : qcc::testing::all_words_of_composition(3, 5, comp)) all.push_back(w);
    std::sort(all.begin(), all.end());
    return all;
  }();
  CHECK(wr.size == qcc::testing::brute_force_max_code(ww, 3));
}

TEST_CASE("exact results never exceed the bounds") {
  for (int total = 2; total <= 4; ++total) {
    for (const auto& comp : qcc::testing::partitions_of(total)) {
      for (int n = total; n <= total + 3; ++n) {
        const auto spec = ccc(n, 2 * total - 1, comp);
        const auto r = qcc::exact_max_code(spec);
        REQUIRE(r.optimal);
        REQUIRE(static_cast<long>(r.size) <= qcc::johnson_ccc(n, spec.d, comp));
        REQUIRE(static_cast<long>(r.size) <= qcc::trivial_upper(n, comp).value);
        REQUIRE(static_cast<long>(r.size) <= qcc::search_upper_bound(spec));
      }
    }
  }
}

TEST_CASE("hill climbing") {
  auto spec = ccc(10, 7, {1, 1, 1, 1});
  spec.seed = 1;
  spec.target_size = 5;
  const auto r = qcc::hill_climb(spec);
  CHECK(r.found);
  CHECK(r.code.size() == 5);
  const auto rep = qcc::verify_code(r.code);
  CHECK(rep.distance_at_least(7));
  CHECK(rep.constant_composition == Partition{1, 1, 1, 1});
  const auto again = qcc::hill_climb(spec);
  CHECK(again.code.words() == r.code.words());
  CHECK(again.steps == r.steps);
  CHECK(qcc::sidecar_line(spec, r).rfind("seed=1 budget=1000000 steps=", 0) == 0);
  CHECK(qcc::sidecar_line(spec, r).find("status=found") != std::string::npos);

  spec.target_size = 1;
  const auto one = qcc::hill_climb(spec);
  CHECK(one.found);
  CHECK(one.code.size() == 1);
}

TEST_CASE("hill climbing lanes merge deterministically") {
  auto spec = ccc(11, 7, {1, 1, 1, 1});
  spec.seed = 5;
  spec.budget = 20'000;
  spec.target_size = 7;
  qcc::HillOptions a;
  a.lanes = 4;
  a.threads = 1;
  qcc::HillOptions b = a;
  b.threads = 4;
  const auto ra = qcc::hill_climb(spec, a);
  const auto rb = qcc::hill_climb(spec, b);
  CHECK(ra.code.words() == rb.code.words());
  CHECK(qcc::verify_code(ra.code).distance_at_least(7));
}

TEST_CASE("missed target is reported") {
  auto spec = ccc(8, 7, {2, 2});
  spec.target_size = 4;  // above the exact maximum 2
  spec.budget = 2'000;
  const auto r = qcc::hill_climb(spec);
  CHECK_FALSE(r.found);
  CHECK(qcc::verify_code(r.code).distance_at_least(7));
  CHECK(qcc::sidecar_line(spec, r).find("status=target-missed") != std::string::npos);
}

TEST_CASE("minimum scope arrays") {
  const auto a = qcc::min_scope_array({1, 1}, 5);
  REQUIRE(a);
  CHECK(a->scope == 1);
  const auto b = qcc::min_scope_array({3, 2, 2}, 15);
  REQUIRE(b);
  CHECK(b->scope <= 15);
  CHECK(qcc::verify_array(b->rows, {3, 2, 2}).valid);
  const auto c = qcc::min_scope_array({2, 2, 2, 2}, 42);
  REQUIRE(c);
  CHECK(c->scope <= 42);
  CHECK(qcc::verify_array(c->rows, {2, 2, 2, 2}).valid);
  CHECK_FALSE(qcc::min_scope_array({2, 2, 2, 2}, c->scope - 1));
  CHECK_FALSE(qcc::min_scope_array({3, 2, 2}, 3));
}

TEST_CASE("rng is SplitMix64") {
  qcc::SplitMix64 r(1234567);
  // Reference outputs of the published SplitMix64 generator.
  CHECK(r.next() == 6457827717110365317ULL);
  CHECK(r.next() == 3203168211198807973ULL);
  for (int i = 0; i < 1000; ++i) REQUIRE(r.below(7) < 7);
}
