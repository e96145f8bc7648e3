#include <doctest.h>

#include <random>

#include "qhd/certificate.hpp"
#include "qhd/coset.hpp"

using namespace qhd::fpgroup;

TEST_CASE("direct, inverted and conjugated single-factor certificates") {
  Presentation p{{"a", "b"}, {free_reduce({1, 2, -1, -2})}};
  Word target{1, 2, -1, -2};
  CHECK(check_relator_certificate(p, target, {{{0, 1, {}}}}));
  CHECK(check_relator_certificate(p, inverse(target), {{{0, -1, {}}}}));
  Word g{2, 1};
  CHECK(check_relator_certificate(p, conjugate(target, g), {{{0, 1, g}}}));
  CHECK_FALSE(check_relator_certificate(p, {1, 2}, {{{0, 1, {}}}}));
  CHECK_FALSE(check_relator_certificate(p, target, {{{3, 1, {}}}}));
  CHECK_FALSE(check_relator_certificate(p, target, {{{0, 2, {}}}}));
}

TEST_CASE("multi-factor products") {
  Presentation p{{"x"}, {power({1}, 3)}};
  CHECK(check_relator_certificate(p, power({1}, 6), {{{0, 1, {}}, {0, 1, {}}}}));
  CHECK(check_relator_certificate(p, {}, {{{0, 1, {}}, {0, -1, {}}}}));
  CHECK_FALSE(check_relator_certificate(p, power({1}, 6), {{{0, 1, {}}}}));
}

TEST_CASE("certificate search proves consequences and fails cleanly") {
  Presentation p{{"a", "b"}, {free_reduce({1, 2, -1, -2})}};
  auto c0 = search_relator_certificate(p, {});
  REQUIRE(c0);
  CHECK(c0->factors.empty());

  Word t1{2, 1, -2, -1};
  auto c1 = search_relator_certificate(p, t1);
  REQUIRE(c1);
  CHECK(check_relator_certificate(p, t1, *c1));

  Word t2 = concat(concat(power({1}, 2), power({2}, 2)), inverse(power({1, 2}, 2)));
  auto c2 = search_relator_certificate(p, t2);
  REQUIRE(c2);
  CHECK(check_relator_certificate(p, t2, *c2));

  Presentation cyc{{"x"}, {power({1}, 3)}};
  Word t3 = power({1}, 6);
  auto c3 = search_relator_certificate(cyc, t3);
  REQUIRE(c3);
  CHECK(check_relator_certificate(cyc, t3, *c3));

  // exponent sums obstruct membership; the bounded search gives up
  CHECK_FALSE(search_relator_certificate(p, {1, 2}, {16, 2000}));
  Presentation fr{{"x", "y"}, {}};
  CHECK_FALSE(search_relator_certificate(fr, {1, 2}));
}

TEST_CASE("certificates are sound against the coset action") {
  Presentation p = b23_presentation(0);
  CosetTable t = coset_enumerate(p, {}, 100000);
  REQUIRE(t.complete);
  auto ident = t.permutation({});

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> nfac(1, 3), rel(0, 2), sgn(0, 1), len(0, 3), let(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    RelatorCertificate cert;
    Word target;
    int k = nfac(rng);
    for (int f = 0; f < k; ++f) {
      RelatorCertificate::Factor fac;
      fac.relator = rel(rng);
      fac.sign = sgn(rng) ? 1 : -1;
      int L = len(rng);
      for (int i = 0; i < L; ++i) {
        static const int letters[4] = {1, -1, 2, -2};
        fac.conjugator.push_back(letters[let(rng)]);
      }
      fac.conjugator = free_reduce(fac.conjugator);
      Word r = fac.sign == 1 ? p.relators[fac.relator] : inverse(p.relators[fac.relator]);
      target = concat(target, conjugate(r, fac.conjugator));
      cert.factors.push_back(std::move(fac));
    }
    REQUIRE(check_relator_certificate(p, target, cert));
    CHECK(t.permutation(target) == ident);
  }
}
