#include <doctest.h>

#include "qcc/bounds.hpp"
#include "qcc/search.hpp"
#include "support.hpp"

using qcc::Partition;

TEST_CASE("johnson ccc examples") {
  for (int n = 7; n <= 40; ++n) CHECK(qcc::johnson_ccc(n, 5, {1, 1, 1}) == n);
  CHECK(qcc::johnson_ccc(15, 9, {2, 2, 1}) == 7);
  CHECK(qcc::johnson_ccc(6, 7, {2, 2}) == 3);
  CHECK(qcc::johnson_ccc(3, 7, {2, 2}) == 0);
  CHECK(qcc::johnson_ccc(8, 9, {2, 2}) == 1);
  CHECK(qcc::johnson_ccc(8, 8, {2, 2}) == 2);
}

TEST_CASE("johnson ccc closed form at d = 2 sum - 1") {
  for (int total = 1; total <= 8; ++total) {
    for (const auto& comp : qcc::testing::partitions_of(total)) {
      for (int n = total; n <= 200; ++n) {
        REQUIRE(qcc::johnson_ccc(n, 2 * total - 1, comp) == n / comp.largest());
      }
    }
  }
}

TEST_CASE("johnson cwc") {
  CHECK(qcc::johnson_cwc(10, 7, 4, 5) == 10);
  CHECK(qcc::johnson_cwc(6, 3, 2, 3) == 6);
  CHECK(qcc::johnson_cwc(12, 6, 3, 4) == 4);
  CHECK(qcc::johnson_cwc(2, 3, 3, 4) == 0);
  for (int q = 2; q <= 7; ++q)
    for (int w = 1; w <= 6; ++w)
      for (int n = w; n <= 60; ++n) REQUIRE(qcc::johnson_cwc(n, 2 * w - 1, w, q) == n * (q - 1) / w);
}

TEST_CASE("trivial upper bound") {
  const auto exact = qcc::trivial_upper(15, {2, 2, 1});
  CHECK(exact.value == 6);
  CHECK(exact.source == qcc::BoundSource::TrivialBinary);
  const auto empty = qcc::A2Cache::parse("# nothing\n");
  const auto sur = qcc::trivial_upper(15, {2, 2, 1}, empty);
  CHECK(sur.value == 9);
  CHECK(sur.source == qcc::BoundSource::TrivialSurrogate);
  CHECK(qcc::trivial_upper(6, {2, 2}).value == 1);
  CHECK(qcc::binary_surrogate(15, 5) == 9);
  CHECK(qcc::binary_surrogate(7, 1) == 7);
  CHECK(qcc::to_string(qcc::BoundSource::JohnsonCcc) == "johnson-ccc");
}

TEST_CASE("cache values are exact and never exceed the surrogate") {
  const auto& cache = qcc::A2Cache::embedded();
  REQUIRE(cache.size() > 0);
  for (int w = 2; w <= 6; ++w) {
    for (int n = w; n <= 40; ++n) {
      const auto e = cache.find(n, w);
      if (!e) continue;
      REQUIRE(e->value <= qcc::binary_surrogate(n, w));
    }
  }
  // Spot checks against the oracle.
  for (auto [n, w] : {std::pair{6, 4}, std::pair{9, 3}, std::pair{8, 4}}) {
    const auto e = cache.find(n, w);
    REQUIRE(e);
    qcc::SearchSpec spec{n, 2 * w - 2, qcc::WeightTarget{w, 2}};
    spec.budget = 100'000'000;
    const auto r = qcc::exact_max_code(spec);
    REQUIRE(r.optimal);
    CHECK(static_cast<long>(r.size) == e->value);
  }
  CHECK_THROWS(qcc::A2Cache::parse("5 2 x oracle\n"));
}

TEST_CASE("nccc bounds") {
  CHECK(qcc::nccc_bounds({2, 2}) == std::pair{10L, 37L});
  CHECK(qcc::nccc_bounds({3, 2}) == std::pair{13L, 97L});
  CHECK(qcc::nccc_bounds({1, 1, 1, 1}) == std::pair{13L, 19L});
  CHECK(qcc::nccc_bounds({1, 1}) == std::pair{3L, 3L});
  for (int total = 2; total <= 12; ++total) {
    for (const auto& comp : qcc::testing::partitions_of(total)) {
      const auto [lo, hi] = qcc::nccc_bounds(comp);
      REQUIRE(lo <= hi);
      REQUIRE((lo == hi) == (comp == Partition{1, 1}));
    }
  }
  CHECK(qcc::composition_length_lower_bound({2, 2}) == 10);
}

TEST_CASE("cwc thresholds") {
  const auto t = qcc::cwc_thresholds(5, 4);
  CHECK(t.etzion == 13);
  CHECK(t.direct == 40);
  CHECK_FALSE(t.n_min_lb);
  CHECK(qcc::cwc_thresholds(3, 2).direct == 4);
  const auto with = qcc::cwc_thresholds(3, 4, std::nullopt, Partition{2, 2});
  REQUIRE(with.n_min_lb);
  CHECK(*with.n_min_lb == 10);
  // 2l(l(q-1)-1)p(l(q-1)-1)+1 at q=5, w=4: l=4 gives 2*4*15*16+1.
  CHECK(t.ncwc_upper == 2 * 4 * 15 * 16 + 1);
  CHECK(qcc::cwc_thresholds(5, 4, 2).ncwc_upper == 2 * 2 * 7 * 7 + 1);
}
