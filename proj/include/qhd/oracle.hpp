#pragma once

#include <concepts>
#include <vector>

#include "qhd/coset.hpp"
#include "qhd/presentation.hpp"

namespace qhd::fpgroup {

// Black-box multiplicative structure with decidable equality. Words are
// evaluated left to right, so multiply(a, b) means "a then b".
template <typename O>
concept GroupOracle = requires(const O& o, const typename O::Element& x,
                               const typename O::Element& y) {
  { o.identity() } -> std::convertible_to<typename O::Element>;
  { o.multiply(x, y) } -> std::convertible_to<typename O::Element>;
  { o.inverse(x) } -> std::convertible_to<typename O::Element>;
  { o.equal(x, y) } -> std::convertible_to<bool>;
};

template <GroupOracle O>
typename O::Element evaluate_word(const O& oracle, const Word& w,
                                  const std::vector<typename O::Element>& images) {
  auto e = oracle.identity();
  for (int x : w) {
    size_t i = (x > 0 ? x : -x) - 1;
    e = oracle.multiply(e, x > 0 ? images[i] : oracle.inverse(images[i]));
  }
  return e;
}

// True iff every relator of src maps to the identity under gen -> images.
template <GroupOracle O>
bool verify_homomorphism(const Presentation& src,
                         const std::vector<typename O::Element>& images, const O& oracle) {
  if (images.size() != src.ngens()) return false;
  for (const Word& r : src.relators)
    if (!oracle.equal(evaluate_word(oracle, r, images), oracle.identity())) return false;
  return true;
}

// The regular-ish permutation action read off a completed coset table.
struct PermOracle {
  using Element = std::vector<size_t>;
  size_t n = 0;

  static PermOracle from_table(const CosetTable& t) { return PermOracle{t.index}; }

  Element identity() const {
    Element e(n);
    for (size_t i = 0; i < n; ++i) e[i] = i;
    return e;
  }
  Element multiply(const Element& a, const Element& b) const {
    Element out(n);
    for (size_t i = 0; i < n; ++i) out[i] = b[a[i]];
    return out;
  }
  Element inverse(const Element& a) const {
    Element out(n);
    for (size_t i = 0; i < n; ++i) out[a[i]] = i;
    return out;
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
};

}  // namespace qhd::fpgroup
