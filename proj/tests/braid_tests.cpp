#include <doctest.h>

#include <random>

#include "qhd/braid.hpp"

using namespace qhd::zvk;
using qhd::fpgroup::Word;
using qhd::fpgroup::concat;
using qhd::fpgroup::free_reduce;
using qhd::fpgroup::substitute;

namespace {

Word conj(const Word& w, const Word& g) { return qhd::fpgroup::conjugate(w, g); }

BraidWord random_braid(std::mt19937& rng, int strands, int len) {
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  BraidWord b;
  b.strands = strands;
  for (int i = 0; i < len; ++i) b.letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
  return b;
}

std::vector<Word> compose(const std::vector<Word>& first, const std::vector<Word>& then) {
  std::vector<Word> out(first.size());
  for (size_t i = 0; i < first.size(); ++i) out[i] = substitute(first[i], then);
  return out;
}

}  // namespace

TEST_CASE("braid parsing follows the word grammar") {
  BraidWord b = parse_braid("s2^-6", 3);
  CHECK(b.letters == std::vector<int>(6, -2));
  CHECK(parse_braid("s1*s2", 3).letters == std::vector<int>{1, 2});
  CHECK(parse_braid("1", 3).letters.empty());
  CHECK(parse_braid("", 4).letters.empty());
  CHECK_THROWS_AS(parse_braid("s3", 3), qhd::fpgroup::ParseError);
  CHECK_THROWS_AS(parse_braid("s1", 0), BadBraid);
}

TEST_CASE("elementary crossing rewrites its two strands") {
  auto im = artin_images(parse_braid("s1", 2));
  CHECK(im[0] == Word{1, 2, -1});
  CHECK(im[1] == Word{1});
  im = artin_images(parse_braid("s1^-1", 2));
  CHECK(im[0] == Word{2});
  CHECK(im[1] == Word{-2, 1, 2});
}

TEST_CASE("artin action respects the braid relations") {
  CHECK(artin_images(parse_braid("s1*s2*s1", 3)) == artin_images(parse_braid("s2*s1*s2", 3)));
  CHECK(artin_images(parse_braid("s1*s3", 4)) == artin_images(parse_braid("s3*s1", 4)));
  // inverses really invert
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord b = random_braid(rng, 4, 8);
    auto round = artin_images(concat(b, inverse(b)));
    for (int i = 0; i < 4; ++i) CHECK(round[i] == Word{i + 1});
  }
}

TEST_CASE("composition order is act(uv) = act(v) after act(u)") {
  std::mt19937 rng(987123);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord u = random_braid(rng, 4, 6);
    BraidWord v = random_braid(rng, 4, 6);
    CHECK(artin_images(concat(u, v)) == compose(artin_images(u), artin_images(v)));
  }
}

TEST_CASE("every braid fixes the full boundary product") {
  std::mt19937 rng(55501);
  for (int strands = 2; strands <= 5; ++strands) {
    Word boundary;
    for (int i = 1; i <= strands; ++i) boundary.push_back(i);
    for (int trial = 0; trial < 30; ++trial) {
      BraidWord b = random_braid(rng, strands, 10);
      CHECK(artin_act(b, boundary) == boundary);
    }
  }
}

TEST_CASE("squared crossing conjugates both strands by their product") {
  auto im = artin_images(parse_braid("s1^2", 2));
  Word w{1, 2};
  CHECK(im[0] == free_reduce(concat(concat(w, {1}), qhd::fpgroup::inverse(w))));
  CHECK(im[1] == free_reduce(concat(concat(w, {2}), qhd::fpgroup::inverse(w))));
}

TEST_CASE("full twist on three strands is global conjugation") {
  auto im = artin_images(parse_braid("(s1*s2)^3", 3));
  Word w{1, 2, 3};
  for (int i = 0; i < 3; ++i)
    CHECK(im[i] == free_reduce(concat(concat(w, {i + 1}), qhd::fpgroup::inverse(w))));
}

TEST_CASE("negative full twists conjugate a two strand block") {
  // s2^-6 = three full negative twists of strands 2,3: conjugation by (x2 x3)^3
  auto im = artin_images(parse_braid("s2^-6", 3));
  Word w{2, 3, 2, 3, 2, 3};
  CHECK(im[0] == Word{1});
  CHECK(im[1] == conj(Word{2}, w));
  CHECK(im[2] == conj(Word{3}, w));
}

TEST_CASE("transport composite used for the conic pencil") {
  // s1^-1*s2 carries the fibre basis (x1,x2,x3) to
  // (x2 x3 x2^-1, (x2 x3 x2^-1)^-1 x1 (x2 x3 x2^-1), x2)
  auto im = artin_images(parse_braid("s1^-1*s2", 3));
  Word t{2, 3, -2};
  CHECK(im[0] == t);
  CHECK(im[1] == conj(Word{1}, t));
  CHECK(im[2] == Word{2});
}

TEST_CASE("artin_act validates letters against the strand count") {
  CHECK(artin_act(parse_braid("s1", 2), Word{1, 2, -1}) == Word{1, 2, 1, -2, -1});
  CHECK_THROWS_AS(artin_act(parse_braid("s1", 2), Word{3}), BadBraid);
}
