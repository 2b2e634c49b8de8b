#include <doctest.h>

#include "qcc/code_io.hpp"
#include "qcc/codes.hpp"
#include "qcc/embedded.hpp"
#include "qcc/errors.hpp"
#include "support.hpp"

using qcc::Code;
using qcc::Codeword;
using qcc::Partition;

namespace {

Code listing(const char* name) { return qcc::read_code(qcc::embedded_file(std::string("catalog/") + name)); }

const char* const kListings[] = {"a10_1111.code", "a11_1111.code", "a12_1111.code",  "a15_221.code",
                                 "a17_221.code",  "a19_11111.code", "a20_11111.code", "a20_33.code",
                                 "a21_222.code",  "a23_222.code",  "a24_222.code",   "a25_222.code",
                                 "a27_111111.code", "a28_222.code"};

}  // namespace

TEST_CASE("codeword basics") {
  const auto u = Codeword::from_digits("1203", 4);
  const auto v = Codeword::from_digits("0312", 4);
  CHECK(qcc::hamming_distance(u, u) == 0);
  CHECK(qcc::hamming_distance(u, v) == 4);
  CHECK(u.weight() == 3);
  CHECK(u.support() == std::vector<int>{0, 1, 3});
  const auto g = Codeword::from_digits("11120002000000303", 4, 33);
  CHECK(g.length() == 33);
  CHECK(qcc::composition_of(g) == Partition{3, 2, 2});
  CHECK(Codeword::from_digits("12", 3, 4).shifted(1).to_string() == "0120");
  CHECK(Codeword::from_digits("12", 3, 4).shifted(-1).to_string() == "2001");
  CHECK_THROWS_AS(Codeword(3, {0, 3}), qcc::InvalidInput);
  CHECK_THROWS_AS(qcc::hamming_distance(u, Codeword::from_digits("12", 4)), qcc::InvalidInput);
  CHECK(Codeword(12, {0, 11, 3}).to_string() == "0,11,3");
}

TEST_CASE("code construction rejects duplicates and mismatches") {
  CHECK_THROWS_AS(Code(3, 2, {Codeword::from_digits("12", 3), Codeword::from_digits("12", 3)}), qcc::InvalidInput);
  CHECK_THROWS_AS(Code(3, 3, {Codeword::from_digits("12", 3)}), qcc::InvalidInput);
  CHECK_THROWS_AS(Code(4, 2, {Codeword::from_digits("12", 3)}), qcc::InvalidInput);
}

TEST_CASE("develop") {
  const Code c = qcc::develop({{Codeword::from_digits("1203", 4, 7)}, 1});
  CHECK(c.size() == 7);
  const auto r = qcc::verify_code(c);
  CHECK(r.min_distance == 5);
  CHECK(r.constant_composition == Partition{1, 1, 1});
  // Closure under the shift.
  std::vector<Codeword> shifted;
  for (const auto& w : c) shifted.push_back(w.shifted(1));
  CHECK(c.same_words(Code(4, 7, shifted)));

  const auto g = Codeword::from_digits("1203", 4, 4);
  CHECK(qcc::develop({{g}, 4}).size() == 1);
  CHECK_THROWS_AS(qcc::develop({{g}, 3}), qcc::InvalidInput);
  CHECK_THROWS_AS(qcc::develop({{Codeword::from_digits("1010", 2)}, 1}), qcc::DegenerateBase);
}

TEST_CASE("printed cwc bases develop to an optimal code") {
  std::vector<int> g1(86, 0), g2(86, 0);
  g1[0] = g1[19] = 1;
  g1[6] = g1[23] = 2;
  g2[20] = g2[35] = 3;
  g2[30] = g2[61] = 4;
  const Code c = qcc::develop({{Codeword(5, g1), Codeword(5, g2)}, 2});
  CHECK(c.size() == 86);
  const auto r = qcc::verify_code(c);
  CHECK(r.min_distance >= 7);
  CHECK(r.constant_weight == 4);
  CHECK(r.supports_meet_at_most_once == true);
  CHECK(r.shared_positions_differ == true);
  CHECK(qcc::testing::naive_min_distance(c) == *r.min_distance);
}

TEST_CASE("verify_code on listings") {
  const auto r = qcc::verify_code(listing("a15_221.code"));
  CHECK(r.size == 6);
  CHECK(r.min_distance == 9);
  CHECK(r.constant_composition == Partition{2, 2, 1});
  const auto r10 = qcc::verify_code(listing("a10_1111.code"));
  CHECK(r10.size == 5);
  CHECK(r10.min_distance == 7);
  const Code single(3, 3, {Codeword::from_digits("120", 3)});
  const auto r1 = qcc::verify_code(single);
  CHECK(r1.size == 1);
  CHECK_FALSE(r1.min_distance.has_value());
  CHECK(r1.distance_at_least(1000));
  const Code mixed(3, 3, {Codeword::from_digits("120", 3), Codeword::from_digits("100", 3)});
  CHECK_FALSE(qcc::verify_code(mixed).constant_weight);
}

TEST_CASE("verify_code distance agrees with the naive oracle") {
  for (const char* name : kListings) {
    const auto c = listing(name);
    CAPTURE(name);
    REQUIRE(qcc::verify_code(c).min_distance == qcc::testing::naive_min_distance(c));
  }
}

TEST_CASE("lengthen, shorten and refine") {
  const auto c15 = listing("a15_221.code");
  CHECK(qcc::lengthen(c15, 0).same_words(c15));
  const auto c16 = qcc::lengthen(c15, 1);
  CHECK(c16.length() == 16);
  CHECK(c16.size() == 6);
  CHECK(qcc::verify_code(c16).min_distance == 9);

  const Code c10 = qcc::develop({{Codeword::from_digits("112002", 3, 10)}, 2});
  const auto c11 = qcc::lengthen(c10, 1);
  CHECK(c11.size() == 5);
  CHECK(qcc::verify_code(c11).min_distance == 7);

  // A zero column keeps every codeword.
  CHECK(qcc::shorten(c11, 10).size() == 5);
  int nonzero = 0;
  for (const auto& w : c10) nonzero += w[3] != 0;
  CHECK(qcc::shorten(c10, 3).size() == c10.size() - nonzero);

  const Code base(3, 6, {Codeword::from_digits("112002", 3)});
  const auto refined = qcc::refine_code(base, {2, 1, 1}, *qcc::refinement_witness({2, 1, 1}, {2, 2}));
  CHECK(refined.words().front().to_string() == "112003");
  CHECK(refined.q() == 4);
  CHECK(qcc::refine_code(c15, {2, 2, 1}, *qcc::refinement_witness({2, 2, 1}, {2, 2, 1})).same_words(c15));
}

TEST_CASE("transforms never lower the distance on the listings") {
  for (const char* name : kListings) {
    CAPTURE(name);
    const auto c = listing(name);
    const auto r = qcc::verify_code(c);
    const auto comp = *r.constant_composition;
    const auto len = qcc::verify_code(qcc::lengthen(c, 3));
    REQUIRE(len.size == r.size);
    REQUIRE(len.min_distance == r.min_distance);
    for (int pos = 0; pos < c.length(); ++pos) {
      REQUIRE(qcc::verify_code(qcc::shorten(c, pos)).distance_at_least(*r.min_distance));
    }
    for (const auto& fine : qcc::testing::partitions_of(comp.sum())) {
      const auto wit = qcc::refinement_witness(fine, comp);
      if (!wit) continue;
      const auto rr = qcc::verify_code(qcc::refine_code(c, fine, *wit));
      REQUIRE(rr.size == r.size);
      REQUIRE(rr.constant_composition == fine);
      REQUIRE(rr.distance_at_least(*r.min_distance));
    }
  }
}

TEST_CASE("code file format") {
  const auto c = listing("a20_33.code");
  const auto text = qcc::write_code(c);
  CHECK(text.rfind("q=3 n=20\n# d=11\n# comp=3,3\n", 0) == 0);
  const auto back = qcc::read_code(text);
  CHECK(back.same_words(c));
  CHECK(back.declared_distance == 11);
  CHECK(back.declared_composition == Partition{3, 3});
  const auto crlf = qcc::read_code("q=3 n=4\r\n# note\r\n12  \r\n\r\n0012\r\n");
  CHECK(crlf.size() == 2);
  CHECK(crlf.words()[0].to_string() == "1200");
  const auto wide = qcc::read_code("q=12 n=3\n0,11,3\n");
  CHECK(wide.words()[0][1] == 11);
  CHECK(qcc::read_code(qcc::write_code(wide)).same_words(wide));
  CHECK_THROWS_AS(qcc::read_code("q=3 n=2\n13\n"), qcc::InvalidInput);
  CHECK_THROWS_AS(qcc::read_code("n=2\n12\n"), qcc::InvalidInput);
  CHECK_THROWS_AS(qcc::read_code("q=3 n=2\n121\n"), qcc::InvalidInput);
}

TEST_CASE("constant composition needs the same count of each symbol") {
  const Code mixed(3, 4, {Codeword::from_digits("1120", 3), Codeword::from_digits("0122", 3)});
  const auto r = qcc::verify_code(mixed);
  CHECK(r.constant_weight == 3);
  CHECK_FALSE(r.constant_composition);
  CHECK(qcc::symbol_counts(Codeword::from_digits("0122", 3)) == std::vector<int>{1, 2});
}
