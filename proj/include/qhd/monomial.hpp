#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhd/polynomial.hpp"

namespace qhd::matgroup {

struct SizeBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 4x4 monomial matrix over the cyclotomic integers: basis vector e_j maps
// to omega^{exps[j]} * e_{perm[j]}, omega a primitive N-th root of unity.
struct MonomialElement {
  std::array<uint8_t, 4> perm{0, 1, 2, 3};
  std::array<long, 4> exps{0, 0, 0, 0};
  long modulus = 1;  // N

  static MonomialElement identity(long modulus);

  MonomialElement operator*(const MonomialElement& o) const;  // matrix product
  MonomialElement inverse() const;
  MonomialElement pow(long k) const;
  bool operator==(const MonomialElement& o) const = default;
  auto operator<=>(const MonomialElement& o) const = default;

  bool is_identity() const;
  long order() const;
  // eigenvalue 1 exists iff some permutation cycle has exponent sum 0 mod N
  bool has_eigenvalue_one() const;
};

enum class Variant { G, Gprime };

struct Generators {
  MonomialElement S, T;
};

// S diagonal (1, -(2m+1), 2m+1, -1); T swaps pairs with exps (m, 0, 0, -m);
// the Gprime variant replaces T by T' with exps (N/2, 0, N/2, 0)
Generators make_generators(long m, Variant v = Variant::G);

struct EnumeratedGroup {
  std::vector<MonomialElement> elements;  // sorted
  std::vector<MonomialElement> generators;

  size_t order() const { return elements.size(); }
  bool contains(const MonomialElement& e) const;
};

EnumeratedGroup closure(const std::vector<MonomialElement>& gens,
                        size_t size_bound = 10000000);

// subgroup generated inside the same matrix group (no bound checks beyond
// the same default)
std::vector<MonomialElement> generated_subgroup(const std::vector<MonomialElement>& gens,
                                                size_t size_bound = 10000000);

struct GroupInvariants {
  size_t order = 0;
  size_t center_order = 0;
  std::vector<MonomialElement> center;           // sorted
  std::vector<long> abelian;                     // invariant factors, ascending
  std::map<long, size_t> order_histogram;        // element order -> count
};

GroupInvariants group_invariants(const EnumeratedGroup& g);

struct FixedPointReport {
  bool free = false;
  std::optional<MonomialElement> witness;  // non-identity element with eigenvalue 1
};

FixedPointReport fixed_point_free(const EnumeratedGroup& g);

// group oracle over monomial matrices (word evaluation, homomorphism checks)
struct MatOracle {
  using Element = MonomialElement;
  long modulus = 1;

  Element identity() const { return MonomialElement::identity(modulus); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
};

// f |-> f composed with the inverse matrix: variable i maps to
// omega^{-exps[i]} * x_{perm[i]}; f must have arity 4
polyalg::SparsePolynomial polynomial_action(const MonomialElement& e,
                                            const polyalg::SparsePolynomial& f);

}  // namespace qhd::matgroup
