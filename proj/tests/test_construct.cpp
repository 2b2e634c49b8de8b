#include <doctest.h>

#include "qcc/arrays.hpp"
#include "qcc/bounds.hpp"
#include "qcc/conditions.hpp"
#include "qcc/construct.hpp"
#include "qcc/errors.hpp"
#include "support.hpp"

using qcc::Codeword;
using qcc::Grid;
using qcc::Partition;

namespace {

qcc::LambdaArray grid_array(const Grid& rows, const Partition& shape) {
  const auto r = qcc::verify_array(rows, shape);
  REQUIRE(r.valid);
  return {shape, rows, r.scope};
}

const Grid kArray322{{1, 7, 16}, {2, std::nullopt, 14}, {0, 3, std::nullopt}};
const Grid kArray24{{19, 23, 35, 61}, {0, 6, 20, 30}};

std::vector<int> support_of_symbol(const Codeword& g, int s) {
  std::vector<int> out;
  for (int x = 0; x < g.length(); ++x)
    if (g[x] == s) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("ccc base codewords from arrays") {
  const auto set = qcc::ccc_base_from_array(grid_array(kArray322, {3, 2, 2}), 33);
  REQUIRE(set.bases.size() == 1);
  CHECK(set.shift == 3);
  CHECK(set.bases.front() == Codeword::from_digits("11120002000000303", 4, 33));
  CHECK(qcc::check_base_ccc(set.bases.front(), 3).passed);

  const auto small = qcc::ccc_base_from_array(qcc::array_for_partition({1, 1}), 3);
  CHECK(small.bases.front().to_string() == "120");

  const auto eight = qcc::ccc_base_from_array(grid_array(kArray24, {2, 2, 2, 2}), 86);
  CHECK(qcc::composition_of(eight.bases.front()) == Partition{2, 2, 2, 2});
  CHECK(qcc::check_base_ccc(eight.bases.front(), 2).passed);
  CHECK_THROWS_AS(qcc::ccc_base_from_array(grid_array(kArray322, {3, 2, 2}), 30), qcc::InvalidInput);
}

TEST_CASE("cwc base codewords from the printed array") {
  const auto set = qcc::cwc_bases_from_array(grid_array(kArray24, {2, 2, 2, 2}), 2, 2, 86);
  REQUIRE(set.bases.size() == 2);
  CHECK(set.shift == 2);
  const auto& g1 = set.bases[0];
  const auto& g2 = set.bases[1];
  CHECK(support_of_symbol(g1, 1) == std::vector<int>{0, 19});
  CHECK(support_of_symbol(g1, 2) == std::vector<int>{6, 23});
  CHECK(support_of_symbol(g2, 3) == std::vector<int>{20, 35});
  CHECK(support_of_symbol(g2, 4) == std::vector<int>{30, 61});
  CHECK(g1.weight() == 4);
  CHECK(qcc::check_bases_cwc(set.bases, 2).passed);

  const auto one = qcc::cwc_bases_from_array(grid_array(kArray24, {2, 2, 2, 2}), 4, 1, 86);
  REQUIRE(one.bases.size() == 1);
  CHECK(one.bases.front() == qcc::ccc_base_from_array(grid_array(kArray24, {2, 2, 2, 2}), 86).bases.front());

  const auto singles = qcc::cwc_bases_from_array(grid_array(kArray24, {2, 2, 2, 2}), 1, 4, 86);
  REQUIRE(singles.bases.size() == 4);
  for (const auto& b : singles.bases) CHECK(b.weight() == 2);
  CHECK(qcc::check_bases_cwc(singles.bases, 2).passed);
}

TEST_CASE("direct cwc bases") {
  const auto s = qcc::cwc_bases_direct(2, 3, 6);
  REQUIRE(s.bases.size() == 2);
  CHECK(s.bases[0].support() == std::vector<int>{0, 1});
  CHECK(s.bases[1].support() == std::vector<int>{0, 3});
  const auto c = qcc::develop(s);
  CHECK(c.size() == 6);
  CHECK(qcc::verify_code(c).min_distance == 3);

  const auto t = qcc::cwc_bases_direct(3, 4, 15);
  CHECK(t.bases[0].support() == std::vector<int>{0, 1, 2});
  CHECK(t.bases[1].support() == std::vector<int>{0, 4, 8});
  CHECK(t.bases[2].support() == std::vector<int>{0, 7, 14});
  const auto ct = qcc::develop(t);
  CHECK(ct.size() == 15);
  CHECK(qcc::verify_code(ct).distance_at_least(5));

  const auto bin = qcc::cwc_bases_direct(3, 2, 6);
  REQUIRE(bin.bases.size() == 1);
  CHECK(bin.bases[0].support() == std::vector<int>{0, 1, 2});
  CHECK(qcc::direct_cwc_threshold(4, 5) == 40);
  CHECK_THROWS_AS(qcc::cwc_bases_direct(4, 5, 16), qcc::InvalidInput);
  CHECK_THROWS_AS(qcc::cwc_bases_direct(2, 3, 5), qcc::InvalidInput);
}

TEST_CASE("optimal constructions") {
  const auto c = qcc::construct_optimal_ccc({1, 1, 1}, 4, 7);
  CHECK(c.size() == 7);
  CHECK(qcc::verify_code(c).min_distance == 5);
  const auto big = qcc::construct_optimal_cwc(5, 4, 86);
  CHECK(big.size() == 86);
  CHECK(qcc::verify_code(big).distance_at_least(7));
  const auto small = qcc::construct_optimal_cwc(3, 2, 6);
  CHECK(small.size() == 6);
  CHECK(qcc::verify_code(small).distance_at_least(3));
  CHECK_THROWS_AS(qcc::construct_optimal_ccc({1, 1, 1}, 4, 6), qcc::UnsupportedLength);
  CHECK_THROWS_AS(qcc::construct_optimal_ccc({1, 1, 1}, 5, 7), qcc::InvalidInput);
  CHECK_THROWS_AS(qcc::construct_optimal_cwc(4, 4, 7), qcc::InvalidInput);
  try {
    qcc::construct_optimal_ccc({2, 2}, 3, 6);
    FAIL("expected UnsupportedLength");
  } catch (const qcc::UnsupportedLength& e) {
    CHECK(e.threshold() == qcc::ccc_threshold({2, 2}));
  }
}

TEST_CASE("ccc pipeline end to end for every composition of weight <= 8") {
  for (int total = 1; total <= 8; ++total) {
    for (const auto& comp : qcc::testing::partitions_of(total)) {
      const auto label = comp.to_string();
      CAPTURE(label);
      const auto array = qcc::array_for_partition(comp);
      const int w1 = comp.largest();
      const long n0 = qcc::ccc_threshold(comp);
      REQUIRE(n0 % w1 == 0);
      REQUIRE(n0 >= 2 * array.scope + 1);
      for (long n : {n0, n0 + w1, n0 + 10L * w1}) {
        const auto set = qcc::ccc_base_from_array(array, static_cast<int>(n));
        REQUIRE(qcc::check_base_ccc(set.bases.front(), w1).passed);
        const auto code = qcc::develop(set);
        const auto r = qcc::verify_code(code);
        REQUIRE(r.size == static_cast<std::size_t>(n / w1));
        REQUIRE(r.constant_composition == comp);
        REQUIRE(r.distance_at_least(2 * total - 1));
      }
    }
  }
}

TEST_CASE("cwc array route over all divisor splits") {
  for (int q = 2; q <= 7; ++q) {
    for (int w = 2; w <= 6; ++w) {
      for (int ell = 1; ell <= w; ++ell) {
        if (w % ell) continue;
        const int beta = w / ell;
        if ((q - 1) % beta) continue;
        const int m = (q - 1) / beta;
        const Partition shape(std::vector<int>(q - 1, ell));
        const auto array = qcc::array_for_partition(shape);
        long n = 2L * array.scope + 1;
        while (n % ell) ++n;
        if (n > 400) continue;
        CAPTURE(q);
        CAPTURE(w);
        CAPTURE(ell);
        CAPTURE(n);
        const auto set = qcc::cwc_bases_from_array(array, beta, m, static_cast<int>(n));
        REQUIRE(qcc::check_bases_cwc(set.bases, ell).passed);
        const auto r = qcc::verify_code(qcc::develop(set));
        REQUIRE(r.size == static_cast<std::size_t>(m * n / ell));
        REQUIRE(r.constant_weight == w);
        REQUIRE(r.distance_at_least(2 * w - 1));
      }
    }
  }
}

TEST_CASE("constructed codes respect the upper bounds") {
  for (const auto& comp : qcc::testing::partitions_of(4)) {
    const int q = static_cast<int>(comp.size()) + 1;
    const long n = qcc::ccc_threshold(comp);
    const auto code = qcc::construct_optimal_ccc(comp, q, static_cast<int>(n));
    const int d = 2 * comp.sum() - 1;
    CHECK(static_cast<long>(code.size()) <= qcc::johnson_ccc(static_cast<int>(n), d, comp));
    CHECK(static_cast<long>(code.size()) <= qcc::trivial_upper(static_cast<int>(n), comp).value);
  }
}
