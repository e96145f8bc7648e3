#include <doctest.h>

#include "qhd/word.hpp"

using namespace qhd::fpgroup;

namespace {
const std::vector<std::string> AB{"a", "b"};
}

TEST_CASE("free reduction cancels inverse pairs") {
  CHECK(free_reduce({1, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, 1}) == Word{1, 1});
  // (g r g^-1)(g r^-1 g^-1)
  Word g{1}, r{2, 1, 2};
  Word w = concat(concat(concat(g, r), inverse(g)), concat(concat(g, inverse(r)), inverse(g)));
  CHECK(w == Word{});
}

TEST_CASE("cyclic reduction strips conjugating ends") {
  CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
  CHECK(cyclic_reduce({-2, 1, 1, 2}) == Word{1, 1});
  CHECK(cyclic_reduce({1, -1}) == Word{});
  CHECK(cyclic_reduce({1, 2}) == Word{1, 2});
}

TEST_CASE("inverse, concat, conjugate, power") {
  CHECK(inverse({1, 2, -1}) == Word{1, -2, -1});
  CHECK(concat({1, 2}, {-2, 1}) == Word{1, 1});
  CHECK(conjugate({2}, {1}) == Word{-1, 2, 1});
  CHECK(power({1, 2}, 2) == Word{1, 2, 1, 2});
  CHECK(power({1, 2}, -1) == Word{-2, -1});
  CHECK(power({1}, 0) == Word{});
}

TEST_CASE("substitute maps letters through images") {
  // a -> ab, b -> b: (ab)b(ab)^-1 reduces back to aba^-1
  CHECK(substitute({1, 2, -1}, {{1, 2}, {2}}) == Word{1, 2, -1});
  CHECK(substitute({2, 1}, {{1, 2}, {2}}) == Word{2, 1, 2});
  CHECK(substitute({1, -1}, {{1, 2}, {2}}) == Word{});
}

TEST_CASE("cyclic canonical form identifies rotations and inversion") {
  CHECK(cyclic_canonical({1, 2, -1, -2}) == cyclic_canonical({2, -1, -2, 1}));
  CHECK(cyclic_canonical({1, 2, -1, -2}) == cyclic_canonical(inverse(Word{1, 2, -1, -2})));
  CHECK(cyclic_canonical({1}) != cyclic_canonical({2}));
}

TEST_CASE("parser handles names, powers, products, conjugation") {
  CHECK(parse_word("a", AB) == Word{1});
  CHECK(parse_word("a^3", AB) == Word{1, 1, 1});
  CHECK(parse_word("a^-2", AB) == Word{-1, -1});
  CHECK(parse_word("a*b^-1*a", AB) == Word{1, -2, 1});
  // (w)^g = g^-1 w g
  CHECK(parse_word("(a)^b", AB) == Word{-2, 1, 2});
  CHECK(parse_word("(a*b)^(b*a)", AB) == free_reduce({-1, -2, 1, 2, 2, 1}));
  CHECK(parse_word("", AB) == Word{});
  CHECK(parse_word("1", AB) == Word{});
  CHECK(parse_word("a^2^b", AB) == Word{-2, 1, 1, 2});
  CHECK(parse_word(" a * b ", AB) == Word{1, 2});
  CHECK_THROWS_AS(parse_word("c", AB), ParseError);
  CHECK_THROWS_AS(parse_word("a^", AB), ParseError);
  CHECK_THROWS_AS(parse_word("(a", AB), ParseError);
  CHECK_THROWS_AS(parse_word("a b", AB), ParseError);
}

TEST_CASE("printer round-trips through the parser") {
  std::vector<Word> samples{{}, {1}, {-2}, {1, 1, 1}, {1, -2, -2, 1}, {-2, 1, 2, -1}};
  for (const Word& w : samples) {
    CHECK(parse_word(print_word(w, AB), AB) == w);
  }
  CHECK(print_word({}, AB) == "1");
  CHECK(print_word({1, 1, -2}, AB) == "a^2*b^-1");
}
