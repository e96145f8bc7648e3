#include <doctest.h>

#include <complex>

#include "qhd/monomial.hpp"
#include "qhd/oracle.hpp"

using namespace qhd::matgroup;
using qhd::fpgroup::b23_presentation;
using qhd::fpgroup::verify_homomorphism;
using qhd::polyalg::Coefficient;
using qhd::polyalg::Rational;
using qhd::polyalg::SparsePolynomial;

TEST_CASE("generator shapes and defining relations") {
  auto [S, T] = make_generators(2);
  CHECK(S.modulus == 12);
  CHECK(S.perm == std::array<uint8_t, 4>{0, 1, 2, 3});
  CHECK(S.exps == std::array<long, 4>{1, 7, 5, 11});
  CHECK(T.perm == std::array<uint8_t, 4>{1, 0, 3, 2});

  for (long m = 2; m <= 6; ++m) {
    auto [s, t] = make_generators(m);
    CHECK(t * t == s.pow(m));
    CHECK(t * s * t.inverse() == s.pow(-(2 * m + 1)));
    CHECK(s.order() == 2 * m * (m + 1));
  }
  CHECK_THROWS(make_generators(1));
}

TEST_CASE("closure sizes") {
  auto [S, T] = make_generators(2);
  CHECK(closure({S, T}).order() == 24);
  CHECK(closure({S}).order() == 12);
  auto g3 = make_generators(3);
  CHECK(closure({g3.S, g3.T}).order() == 48);
  for (long m = 2; m <= 6; ++m) {
    auto [s, t] = make_generators(m);
    CHECK(closure({s, t}).order() == (size_t)(4 * m * (m + 1)));
  }
  CHECK_THROWS_AS(closure({S, T}, 10), SizeBound);
}

TEST_CASE("center is generated by S^m with order 2(m+1)") {
  for (long m = 2; m <= 6; ++m) {
    auto [S, T] = make_generators(m);
    EnumeratedGroup g = closure({S, T});
    GroupInvariants inv = group_invariants(g);
    CHECK(inv.order == (size_t)(4 * m * (m + 1)));
    CHECK(inv.center_order == (size_t)(2 * (m + 1)));
    std::vector<MonomialElement> zs = generated_subgroup({S.pow(m)});
    CHECK(inv.center == zs);
  }
}

TEST_CASE("abelianization by commutator enumeration") {
  for (long m = 2; m <= 6; ++m) {
    auto [S, T] = make_generators(m);
    GroupInvariants inv = group_invariants(closure({S, T}));
    if (m % 2 == 1)
      CHECK(inv.abelian == std::vector<long>{4 * (m + 1)});
    else
      CHECK(inv.abelian == std::vector<long>{2, 2 * (m + 1)});
  }
}

TEST_CASE("element order histogram respects Lagrange") {
  for (long m = 2; m <= 4; ++m) {
    auto [S, T] = make_generators(m);
    GroupInvariants inv = group_invariants(closure({S, T}));
    size_t total = 0;
    for (auto [ord, count] : inv.order_histogram) {
      CHECK(inv.order % ord == 0);
      total += count;
    }
    CHECK(total == inv.order);
    CHECK(inv.order_histogram.at(1) == 1);
  }
}

TEST_CASE("the action is fixed point free for the main family") {
  for (long m = 2; m <= 6; ++m) {
    auto [S, T] = make_generators(m);
    FixedPointReport rep = fixed_point_free(closure({S, T}));
    CHECK(rep.free);
    CHECK_FALSE(rep.witness.has_value());
  }
}

TEST_CASE("the primed variant fails freeness exactly for odd m") {
  for (long m : {3L, 5L}) {
    auto [S, Tp] = make_generators(m, Variant::Gprime);
    EnumeratedGroup g = closure({S, Tp});
    FixedPointReport rep = fixed_point_free(g);
    CHECK_FALSE(rep.free);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->has_eigenvalue_one());
    CHECK_FALSE(rep.witness->is_identity());
    CHECK(g.contains(*rep.witness));
    // S^((m+1)/2) T' is an order-2 element with fixed points
    MonomialElement w = S.pow((m + 1) / 2) * Tp;
    CHECK(w.order() == 2);
    CHECK(w.has_eigenvalue_one());
    CHECK(g.contains(w));
  }
  auto [S2, Tp2] = make_generators(2, Variant::Gprime);
  CHECK(fixed_point_free(closure({S2, Tp2})).free);
}

TEST_CASE("primed variant is isomorphic to the plain one exactly for even m") {
  using qhd::fpgroup::Presentation;
  using qhd::fpgroup::Word;
  using qhd::fpgroup::power;
  using qhd::fpgroup::concat;
  for (long m : {2L, 4L}) {
    auto g = make_generators(m);
    auto gp = make_generators(m, Variant::Gprime);
    long N = 2 * m * (m + 1);
    // common presentation: s^N, t^2 = s^{N/2}, t s t^-1 = s^{-(2m+1)}
    Presentation pres{{"s", "t"},
                      {power({1}, N), concat(power({2}, 2), power({1}, -N / 2)),
                       concat(Word{2, 1, -2}, power({1}, 2 * m + 1))}};
    CHECK(qhd::fpgroup::group_order(pres) == (size_t)(2 * N));
    MatOracle oracle{N};
    std::vector<MonomialElement> primed{gp.S, gp.T};
    std::vector<MonomialElement> plain{g.S, g.S.pow((m + 2) / 2) * g.T};
    CHECK(verify_homomorphism(pres, primed, oracle));
    CHECK(verify_homomorphism(pres, plain, oracle));
    CHECK(closure(primed).order() == (size_t)(2 * N));
    CHECK(closure(plain).order() == (size_t)(2 * N));
  }
  // odd m: involution counts differ, so no isomorphism exists
  for (long m : {3L, 5L}) {
    auto g = make_generators(m);
    auto gp = make_generators(m, Variant::Gprime);
    auto plain_hist = group_invariants(closure({g.S, g.T})).order_histogram;
    auto primed_hist = group_invariants(closure({gp.S, gp.T})).order_histogram;
    CHECK(plain_hist.at(2) == 1);
    CHECK(primed_hist.at(2) > 1);
  }
}

TEST_CASE("eigenvalue criterion agrees with floating point eigenvalues at m=2") {
  auto [S, T] = make_generators(2);
  EnumeratedGroup g = closure({S, T});
  const double pi = 3.14159265358979323846;
  for (const MonomialElement& e : g.elements) {
    double best = 10.0;
    std::array<bool, 4> seen{};
    for (int s = 0; s < 4; ++s) {
      if (seen[s]) continue;
      long esum = 0;
      int len = 0, j = s;
      do {
        seen[j] = true;
        esum += e.exps[j];
        j = e.perm[j];
        ++len;
      } while (j != s);
      for (int k = 0; k < len; ++k) {
        std::complex<double> lambda =
            std::exp(std::complex<double>(0, 2 * pi * ((double)esum / e.modulus + k) / len));
        best = std::min(best, std::abs(lambda - std::complex<double>(1, 0)));
      }
    }
    CHECK(e.has_eigenvalue_one() == (best < 1e-9));
  }
}

TEST_CASE("presentation maps onto the matrix group") {
  for (long m = 2; m <= 5; ++m) {
    auto [S, T] = make_generators(m);
    MatOracle oracle{S.modulus};
    qhd::fpgroup::Presentation pre = b23_presentation((int)(m - 2));
    // a -> S, l -> T S^-1 (so l*a maps to T)
    std::vector<MonomialElement> images{S, T * S.inverse()};
    CHECK(verify_homomorphism(pre, images, oracle));
    EnumeratedGroup img = closure(images);
    CHECK(img.order() == (size_t)(4 * m * (m + 1)));
  }
  auto [S, T] = make_generators(2);
  MatOracle oracle{S.modulus};
  std::vector<MonomialElement> bad{S * S, T};
  CHECK_FALSE(verify_homomorphism(b23_presentation(0), bad, oracle));
}

TEST_CASE("polynomial action fixes xw + yz") {
  SparsePolynomial f(4);
  f.add_term({1, 0, 0, 1}, Coefficient(Rational(1)));  // xw
  f.add_term({0, 1, 1, 0}, Coefficient(Rational(1)));  // yz
  for (long m = 2; m <= 4; ++m) {
    auto [S, T] = make_generators(m);
    CHECK(polynomial_action(S, f) == f);
    CHECK(polynomial_action(T, f) == f);
    auto one = is_scalar_multiple(polynomial_action(S, f), f);
    REQUIRE(one.has_value());
    CHECK(*one == Coefficient(Rational(1)));
  }
}

TEST_CASE("polynomial action scales the hypersurface equation") {
  for (long m = 2; m <= 4; ++m) {
    auto [S, T] = make_generators(m);
    unsigned N = (unsigned)S.modulus;
    SparsePolynomial h(4);
    h.add_term({0, 0, 1, 1}, Coefficient(Rational(1)));                    // zw
    h.add_term({2 * (unsigned)m, 0, 0, 0}, Coefficient(Rational(1)));      // x^2m
    h.add_term({0, 2 * (unsigned)m, 0, 0}, Coefficient(Rational(1), N, m));  // zeta y^2m
    auto st = is_scalar_multiple(polynomial_action(T, h), h);
    REQUIRE(st.has_value());
    CHECK(*st == Coefficient(Rational(1), N, m));  // zeta
    auto ss = is_scalar_multiple(polynomial_action(S, h), h);
    REQUIRE(ss.has_value());
    CHECK(*ss == Coefficient(Rational(1), N, -2 * m));  // omega^{-2m}
  }
}

TEST_CASE("action composes contravariantly with the product") {
  auto [S, T] = make_generators(3);
  SparsePolynomial f(4);
  f.add_term({1, 2, 0, 1}, Coefficient(Rational(3)));
  f.add_term({0, 0, 3, 0}, Coefficient(Rational(1), (unsigned)S.modulus, 5));
  CHECK(polynomial_action(S * T, f) == polynomial_action(S, polynomial_action(T, f)));
}
