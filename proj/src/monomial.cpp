#include "qhd/monomial.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace qhd::matgroup {

namespace {
long mod(long x, long n) {
  x %= n;
  return x < 0 ? x + n : x;
}
}  // namespace

MonomialElement MonomialElement::identity(long modulus) {
  MonomialElement e;
  e.modulus = modulus;
  return e;
}

MonomialElement MonomialElement::operator*(const MonomialElement& o) const {
  if (modulus != o.modulus) throw std::invalid_argument("modulus mismatch");
  MonomialElement out;
  out.modulus = modulus;
  for (int j = 0; j < 4; ++j) {
    out.perm[j] = perm[o.perm[j]];
    out.exps[j] = mod(o.exps[j] + exps[o.perm[j]], modulus);
  }
  return out;
}

MonomialElement MonomialElement::inverse() const {
  MonomialElement out;
  out.modulus = modulus;
  std::array<uint8_t, 4> ip{};
  for (int j = 0; j < 4; ++j) ip[perm[j]] = (uint8_t)j;
  for (int j = 0; j < 4; ++j) {
    out.perm[j] = ip[j];
    out.exps[j] = mod(-exps[ip[j]], modulus);
  }
  return out;
}

MonomialElement MonomialElement::pow(long k) const {
  MonomialElement base = k < 0 ? inverse() : *this;
  long n = k < 0 ? -k : k;
  MonomialElement out = identity(modulus);
  while (n) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

bool MonomialElement::is_identity() const {
  return perm == std::array<uint8_t, 4>{0, 1, 2, 3} &&
         exps == std::array<long, 4>{0, 0, 0, 0};
}

long MonomialElement::order() const {
  MonomialElement e = *this;
  long n = 1;
  while (!e.is_identity()) {
    e = e * *this;
    ++n;
    if (n > 8 * modulus) throw std::logic_error("order: runaway");
  }
  return n;
}

bool MonomialElement::has_eigenvalue_one() const {
  std::array<bool, 4> seen{false, false, false, false};
  for (int s = 0; s < 4; ++s) {
    if (seen[s]) continue;
    long sum = 0;
    int j = s;
    do {
      seen[j] = true;
      sum += exps[j];
      j = perm[j];
    } while (j != s);
    if (mod(sum, modulus) == 0) return true;
  }
  return false;
}

Generators make_generators(long m, Variant v) {
  if (m < 2) throw std::invalid_argument("make_generators: m must be >= 2");
  long N = 2 * m * (m + 1);
  MonomialElement S;
  S.modulus = N;
  S.exps = {mod(1, N), mod(-(2 * m + 1), N), mod(2 * m + 1, N), mod(-1, N)};
  MonomialElement T;
  T.modulus = N;
  T.perm = {1, 0, 3, 2};
  if (v == Variant::G)
    T.exps = {mod(m, N), 0, 0, mod(-m, N)};
  else
    T.exps = {N / 2, 0, N / 2, 0};
  return {S, T};
}

bool EnumeratedGroup::contains(const MonomialElement& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

std::vector<MonomialElement> generated_subgroup(const std::vector<MonomialElement>& gens,
                                                size_t size_bound) {
  if (gens.empty()) return {};
  long N = gens[0].modulus;
  std::set<MonomialElement> seen{MonomialElement::identity(N)};
  std::deque<MonomialElement> queue{MonomialElement::identity(N)};
  while (!queue.empty()) {
    MonomialElement e = queue.front();
    queue.pop_front();
    for (const MonomialElement& g : gens) {
      MonomialElement n = e * g;
      if (seen.insert(n).second) {
        if (seen.size() > size_bound) throw SizeBound("enumeration exceeded size bound");
        queue.push_back(n);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

EnumeratedGroup closure(const std::vector<MonomialElement>& gens, size_t size_bound) {
  EnumeratedGroup out;
  out.generators = gens;
  out.elements = generated_subgroup(gens, size_bound);
  return out;
}

namespace {

// invariant factors (ascending divisibility) of a finite abelian group given
// by element indices and a multiplication callback
std::vector<long> abelian_decompose(std::vector<size_t> ids,
                                    const std::function<size_t(size_t, size_t)>& mul,
                                    size_t identity) {
  if (ids.size() <= 1) return {};
  auto order_of = [&](size_t x) {
    long n = 1;
    size_t e = x;
    while (e != identity) {
      e = mul(e, x);
      ++n;
    }
    return n;
  };
  size_t best = ids[0];
  long best_ord = 1;
  for (size_t x : ids) {
    long o = order_of(x);
    if (o > best_ord) {
      best_ord = o;
      best = x;
    }
  }
  if (best_ord == 1) return {};
  std::vector<size_t> cyc;
  size_t e = identity;
  do {
    cyc.push_back(e);
    e = mul(e, best);
  } while (e != identity);

  // quotient: canonical representative = least index in the coset
  std::map<size_t, size_t> rep;
  for (size_t x : ids) {
    size_t r = x;
    for (size_t h : cyc) r = std::min(r, mul(x, h));
    rep[x] = r;
  }
  std::vector<size_t> qids;
  for (auto& [x, r] : rep)
    if (x == r) qids.push_back(x);
  auto qmul = [&](size_t a, size_t b) { return rep.at(mul(a, b)); };
  std::vector<long> inv = abelian_decompose(qids, qmul, rep.at(identity));
  inv.push_back(best_ord);
  return inv;
}

}  // namespace

GroupInvariants group_invariants(const EnumeratedGroup& g) {
  GroupInvariants out;
  out.order = g.elements.size();
  for (const MonomialElement& e : g.elements) {
    bool central = true;
    for (const MonomialElement& h : g.generators)
      if (!(e * h == h * e)) {
        central = false;
        break;
      }
    if (central) out.center.push_back(e);
  }
  out.center_order = out.center.size();

  for (const MonomialElement& e : g.elements) ++out.order_histogram[e.order()];

  // derived subgroup: all conjugates of generator commutators generate it
  std::vector<MonomialElement> seeds;
  for (const MonomialElement& a : g.generators)
    for (const MonomialElement& b : g.generators) {
      MonomialElement c = a.inverse() * b.inverse() * a * b;
      for (const MonomialElement& x : g.elements) seeds.push_back(x.inverse() * c * x);
    }
  std::vector<MonomialElement> derived = generated_subgroup(seeds);

  // index elements, assign cosets of the derived subgroup
  auto index_of = [&](const MonomialElement& e) {
    return (size_t)(std::lower_bound(g.elements.begin(), g.elements.end(), e) -
                    g.elements.begin());
  };
  std::vector<size_t> coset_rep(g.elements.size());
  for (size_t i = 0; i < g.elements.size(); ++i) {
    size_t r = i;
    for (const MonomialElement& d : derived) r = std::min(r, index_of(g.elements[i] * d));
    coset_rep[i] = r;
  }
  std::vector<size_t> qids;
  for (size_t i = 0; i < coset_rep.size(); ++i)
    if (coset_rep[i] == i) qids.push_back(i);
  std::function<size_t(size_t, size_t)> qmul = [&](size_t a, size_t b) {
    return coset_rep[index_of(g.elements[a] * g.elements[b])];
  };
  size_t ident = coset_rep[index_of(MonomialElement::identity(
      g.elements.empty() ? 1 : g.elements[0].modulus))];
  out.abelian = abelian_decompose(qids, qmul, ident);
  return out;
}

FixedPointReport fixed_point_free(const EnumeratedGroup& g) {
  for (const MonomialElement& e : g.elements) {
    if (e.is_identity()) continue;
    if (e.has_eigenvalue_one()) return {false, e};
  }
  return {true, std::nullopt};
}

polyalg::SparsePolynomial polynomial_action(const MonomialElement& e,
                                            const polyalg::SparsePolynomial& f) {
  if (f.arity != 4) throw std::invalid_argument("polynomial_action: arity must be 4");
  polyalg::PolyMap images;
  for (size_t i = 0; i < 4; ++i) {
    polyalg::SparsePolynomial v = polyalg::SparsePolynomial::variable(4, e.perm[i]);
    polyalg::SparsePolynomial c = polyalg::SparsePolynomial::constant(
        4, polyalg::Coefficient(polyalg::Rational(1), (unsigned)e.modulus, -e.exps[i]));
    images.push_back(c * v);
  }
  return substitute(f, images);
}

}  // namespace qhd::matgroup
