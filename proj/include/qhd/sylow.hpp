#pragma once

#include <string>

#include "qhd/monomial.hpp"

namespace qhd::matgroup {

// Decomposition data for G(m), with N = 2m(m+1) = 2^{r+1} * odd_part.
struct SylowReport {
  long m = 0;
  long N = 0;
  int r = 0;
  long odd_part = 0;

  // odd part H = <S^{2^{r+1}}>
  bool odd_order_ok = false;     // |H| = odd_part
  bool odd_normal = false;       // closed under conjugation by S, T
  bool odd_is_odd_elements = false;  // H = set of odd-order elements

  // 2-Sylow J
  std::string two_type;          // "C<order>" (m odd) or "Q<r+2>" (m even)
  size_t two_order = 0;          // always 2^{r+2}
  bool two_recognized = false;   // cyclic / generalized quaternion certified
  bool two_normal = false;
  bool two_normal_iff_pow2 = false;  // normal exactly when m is a power of 2

  std::string split;             // "direct" when H x J, else "semidirect"
  bool split_ok = false;         // trivial intersection, full product, H normal

  bool squares_identity = false;  // (S^i T)^2 = S^{-m(2i-1)} for all i
  bool even_order_gt2 = false;    // every S^i T has even order > 2

  bool all_ok() const {
    return odd_order_ok && odd_normal && odd_is_odd_elements && two_recognized &&
           two_normal_iff_pow2 && split_ok && squares_identity && even_order_gt2;
  }
};

SylowReport sylow_structure(long m);

}  // namespace qhd::matgroup
