#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhd::polyalg {

using Rational = boost::multiprecision::cpp_rational;

struct CoefficientMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PolyParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rational * omega^k, omega a primitive root of unity of order omega_mod;
// omega_mod 0 means a plain rational. For even omega_mod the sign is folded
// into the rational so k lies in [0, omega_mod/2).
struct Coefficient {
  Rational rat;
  unsigned omega_mod = 0;
  long k = 0;

  Coefficient() = default;
  Coefficient(Rational r) : rat(std::move(r)) { canonicalize(); }
  Coefficient(Rational r, unsigned mod, long kk) : rat(std::move(r)), omega_mod(mod), k(kk) {
    canonicalize();
  }

  void canonicalize();
  bool is_zero() const { return rat == 0; }
  bool is_rational() const { return omega_mod == 0 || k == 0; }

  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator+(const Coefficient& o) const;  // throws on unlike omega parts
  Coefficient operator-() const;
  Coefficient operator/(const Coefficient& o) const;
  bool operator==(const Coefficient& o) const;
};

using ExponentVec = std::vector<unsigned>;

// descending graded lexicographic order, so map.begin() is the leading term
struct GradedLexDesc {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

struct SparsePolynomial {
  size_t arity = 0;
  std::map<ExponentVec, Coefficient, GradedLexDesc> terms;

  SparsePolynomial() = default;
  explicit SparsePolynomial(size_t n) : arity(n) {}

  static SparsePolynomial constant(size_t arity, Coefficient c);
  static SparsePolynomial variable(size_t arity, size_t i);

  bool is_zero() const { return terms.empty(); }
  void add_term(const ExponentVec& e, const Coefficient& c);  // merges, drops zeros

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial operator-() const;
  bool operator==(const SparsePolynomial& o) const;

  long total_degree() const;  // max over terms; -1 for the zero polynomial
};

SparsePolynomial pow(const SparsePolynomial& f, unsigned long n);

// images[i] substitutes for variable i; all images share one arity
using PolyMap = std::vector<SparsePolynomial>;

SparsePolynomial substitute(const SparsePolynomial& f, const PolyMap& images);

// quotient when g divides f exactly, nullopt otherwise
std::optional<SparsePolynomial> divide_exact(const SparsePolynomial& f,
                                             const SparsePolynomial& g);

// minimal-total-degree part of f after the chart substitution
SparsePolynomial tangent_cone(const SparsePolynomial& f, const PolyMap& chart);

// requires every coefficient rational
Rational evaluate(const SparsePolynomial& f, const std::vector<Rational>& point);

long weighted_degree(const SparsePolynomial& f, const std::vector<long>& weights);
bool is_weighted_homogeneous(const SparsePolynomial& f, const std::vector<long>& weights);

// c * g == f for some coefficient c
std::optional<Coefficient> is_scalar_multiple(const SparsePolynomial& f,
                                              const SparsePolynomial& g);

// literals like "y^2*z - x^2*(x+z)" with integer or a/b coefficients
SparsePolynomial parse_polynomial(const std::string& text,
                                  const std::vector<std::string>& vars);
std::string to_string(const SparsePolynomial& f, const std::vector<std::string>& vars);

}  // namespace qhd::polyalg
