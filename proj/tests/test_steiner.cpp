#include <doctest.h>

#include "qcc/construct.hpp"
#include "qcc/errors.hpp"
#include "qcc/steiner.hpp"

using qcc::Code;

TEST_CASE("block counts") {
  CHECK(qcc::gs_block_count(6, 2, 2, 1) == 6);
  CHECK(qcc::gs_block_count(15, 3, 3, 1) == 15);
  CHECK(qcc::gs_block_count(7, 1, 3, 2) == 7);
  CHECK(qcc::gs_block_count(5, 2, 2, 1) == 5);
  CHECK(qcc::gs_block_count(5, 2, 3, 1) == -1);
}

TEST_CASE("GS(1,2,6,2) from the small cwc code") {
  const Code c = qcc::construct_optimal_cwc(3, 2, 6);
  const auto g = qcc::code_to_gs(c, 1);
  CHECK(g.n == 6);
  CHECK(g.q == 2);
  CHECK(g.w == 2);
  CHECK(g.blocks.size() == 6);
  const auto r = qcc::verify_gs(g);
  CHECK(r.valid);
  CHECK(r.block_count_ok);
  CHECK(r.uniform);
  CHECK(r.transverse);
  CHECK(r.uncovered == 0);
  CHECK(r.multiply_covered == 0);
  CHECK(qcc::gs_to_code(g).same_words(c));

  auto missing = g;
  missing.blocks.pop_back();
  const auto rm = qcc::verify_gs(missing);
  CHECK_FALSE(rm.valid);
  CHECK(rm.uncovered > 0);
  auto doubled = g;
  doubled.blocks.push_back(g.blocks.front());
  const auto rd = qcc::verify_gs(doubled);
  CHECK_FALSE(rd.valid);
  CHECK(rd.multiply_covered > 0);
  CHECK_THROWS_AS(qcc::gs_to_code(missing), qcc::InvalidInput);
}

TEST_CASE("GS(1,3,15,3) round trip") {
  const Code c = qcc::construct_optimal_cwc(4, 3, 15);
  const auto g = qcc::code_to_gs(c, 1);
  CHECK(g.blocks.size() == 15);
  CHECK(qcc::verify_gs(g).valid);
  CHECK(qcc::gs_to_code(g).same_words(c));
  const auto text = qcc::write_gs(g);
  CHECK(text.rfind("15 3 3 1\n", 0) == 0);
  const auto back = qcc::read_gs(text);
  CHECK(qcc::verify_gs(back).valid);
  CHECK(qcc::gs_to_code(back).same_words(c));
}

TEST_CASE("code_to_gs errors") {
  const Code c = qcc::construct_optimal_cwc(3, 2, 6);
  const Code part(c.q(), c.length(), {c.words().begin(), c.words().begin() + 3});
  CHECK_THROWS_AS(qcc::code_to_gs(part, 1), qcc::NotASteinerSystem);
  CHECK_THROWS_AS(qcc::code_to_gs(c, 2), qcc::NotASteinerSystem);
  CHECK_THROWS_AS(qcc::read_gs("2 2 2 1\n1:1 3:1\n"), qcc::InvalidInput);
}

TEST_CASE("single-block design") {
  qcc::GSDesign d{3, 1, 3, 3, {{{1, 1}, {2, 1}, {3, 1}}}};
  const auto r = qcc::verify_gs(d);
  CHECK(r.valid);
  const auto c = qcc::gs_to_code(d);
  CHECK(c.size() == 1);
  CHECK(c.words().front().weight() == 3);
}

TEST_CASE("every constructed optimal cwc code gives a 1-design") {
  for (int q = 3; q <= 5; ++q) {
    for (int w = 2; w <= 3; ++w) {
      for (int n = w; n <= 40; ++n) {
        if ((q - 1) * n % w) continue;
        Code c;
        try {
          c = qcc::construct_optimal_cwc(q, w, n);
        } catch (const qcc::UnsupportedLength&) {
          continue;
        }
        CAPTURE(q);
        CAPTURE(w);
        CAPTURE(n);
        const auto g = qcc::code_to_gs(c, 1);
        REQUIRE(qcc::verify_gs(g).valid);
        REQUIRE(static_cast<long>(g.blocks.size()) == qcc::gs_block_count(n, q - 1, w, 1));
        REQUIRE(qcc::gs_to_code(g).same_words(c));
      }
    }
  }
}
