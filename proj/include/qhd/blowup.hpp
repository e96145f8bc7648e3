#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhd/plumbing.hpp"

namespace qhd {

struct UnknownCurve : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a requested dual graph is not a simple normal crossing
// configuration: some pair of curves has intersection number outside {0, 1}.
struct NotSNC : std::runtime_error {
  NotSNC(std::string a_, std::string b_, Int product_);
  std::string a, b;
  Int product;
};

// Divisor classes on an iterated blow-up of the plane, in the orthogonal
// basis (H, E1, ..., En) with intersection form diag(1, -1, ..., -1). Each
// blow_up call appends one basis vector; a curve through the centre with
// multiplicity k has its class replaced by the strict transform, i.e. loses
// k times the new exceptional class.
class BlowupModel {
 public:
  void add_curve(const std::string& label, long degree);
  void blow_up(const std::vector<std::pair<std::string, long>>& at,
               const std::string& exc_label);

  size_t rank() const { return rank_; }
  bool has_curve(const std::string& label) const;
  // class vector padded to the current rank
  std::vector<Int> curve_class(const std::string& label) const;
  Int product(const std::string& a, const std::string& b) const;
  Int self_intersection(const std::string& label) const;
  const std::vector<std::string>& labels() const { return order_; }

 private:
  const std::vector<Int>& raw(const std::string& label) const;
  std::vector<std::string> order_;
  std::map<std::string, std::vector<Int>> classes_;
  size_t rank_ = 1;
};

// Dual graph of the listed curves: vertices carry self-intersections, edges
// appear where the pairwise product is 1. Throws NotSNC on any product
// outside {0, 1} and UnknownCurve on a bad label.
PlumbingGraph dual_graph(const BlowupModel& m,
                         const std::vector<std::string>& kept);

// First homology of the complement of the listed curves: the cokernel of
// the matrix of their classes (valid on a simply connected surface whose
// second homology the basis spans). Invariant factors > 1 first, one zero
// per free rank.
std::vector<Int> complement_h1(const BlowupModel& m,
                               const std::vector<std::string>& kept);

}  // namespace qhd
