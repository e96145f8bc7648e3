#include "qhd/sylow.hpp"

#include <algorithm>

namespace qhd::matgroup {

namespace {

bool member(const std::vector<MonomialElement>& sorted, const MonomialElement& e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

bool normal_under(const std::vector<MonomialElement>& sub,
                  const std::vector<MonomialElement>& conjugators) {
  for (const auto& g : conjugators)
    for (const auto& x : sub)
      if (!member(sub, g * x * g.inverse())) return false;
  return true;
}

long mod(long x, long n) {
  x %= n;
  return x < 0 ? x + n : x;
}

}  // namespace

SylowReport sylow_structure(long m) {
  SylowReport rep;
  rep.m = m;
  rep.N = 2 * m * (m + 1);
  long odd = rep.N;
  int v2 = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++v2;
  }
  rep.r = v2 - 1;
  rep.odd_part = odd;

  auto [S, T] = make_generators(m);
  EnumeratedGroup G = closure({S, T});

  long two_part = 1L << (rep.r + 1);
  std::vector<MonomialElement> H = generated_subgroup({S.pow(two_part)});
  rep.odd_order_ok = (long)H.size() == rep.odd_part;
  rep.odd_normal = normal_under(H, {S, T});
  rep.odd_is_odd_elements = true;
  for (const auto& e : G.elements)
    if ((e.order() % 2 == 1) != member(H, e)) rep.odd_is_odd_elements = false;

  rep.two_order = (size_t)1 << (rep.r + 2);
  std::vector<MonomialElement> J;
  if (m % 2 == 1) {
    long u = ((m + 1) / (1L << rep.r) + 1) / 2;
    MonomialElement g = S.pow(u) * T;
    J = generated_subgroup({g});
    rep.two_type = "C" + std::to_string(rep.two_order);
    rep.two_recognized = J.size() == rep.two_order && (size_t)g.order() == rep.two_order;
  } else {
    long q = m >> rep.r;
    MonomialElement g1 = S.pow(q * (m + 1));
    MonomialElement g2 = S.pow((m + 2) / 2) * T;
    J = generated_subgroup({g1, g2});
    rep.two_type = "Q" + std::to_string(rep.r + 2);
    rep.two_recognized = false;
    if (J.size() == rep.two_order) {
      long a_ord = 1L << (rep.r + 1);
      for (const auto& A : J) {
        if (A.order() != a_ord) continue;
        MonomialElement half = A.pow(a_ord / 2);
        MonomialElement Ainv = A.inverse();
        for (const auto& B : J) {
          if (!(B * B == half)) continue;
          if (!(B * A * B.inverse() == Ainv)) continue;
          if (generated_subgroup({A, B}).size() == J.size()) {
            rep.two_recognized = true;
            break;
          }
        }
        if (rep.two_recognized) break;
      }
    }
  }

  rep.two_normal = normal_under(J, {S, T});
  bool pow2 = (m & (m - 1)) == 0;
  rep.two_normal_iff_pow2 = rep.two_normal == pow2;

  size_t common = 0;
  for (const auto& x : H)
    if (member(J, x)) ++common;
  bool trivial_intersection = common == 1;
  bool full_product = H.size() * J.size() == G.order();

  bool commute = true;
  for (const auto& x : H) {
    for (const auto& y : J)
      if (!(x * y == y * x)) {
        commute = false;
        break;
      }
    if (!commute) break;
  }
  rep.split = rep.two_normal && commute ? "direct" : "semidirect";
  rep.split_ok = rep.odd_normal && trivial_intersection && full_product &&
                 (rep.split == "semidirect" || (commute && rep.two_normal));

  rep.squares_identity = true;
  rep.even_order_gt2 = true;
  MonomialElement Si = MonomialElement::identity(rep.N);
  for (long i = 0; i < rep.N; ++i) {
    MonomialElement e = Si * T;  // S^i * T
    if (!((e * e) == S.pow(mod(-m * (2 * i - 1), rep.N)))) rep.squares_identity = false;
    long o = e.order();
    if (o % 2 != 0 || o <= 2) rep.even_order_gt2 = false;
    Si = Si * S;
  }
  return rep;
}

}  // namespace qhd::matgroup
