#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhd/smith.hpp"

namespace qhd {

struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonFree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PlumbingVertex {
  std::string label;
  Int weight;  // self-intersection
  int genus = 0;
};

// Weighted dual graph of a curve configuration. Edges are unordered pairs of
// vertex indices; parallel edges are not used by the families here.
struct PlumbingGraph {
  std::vector<PlumbingVertex> vertices;
  std::vector<std::pair<size_t, size_t>> edges;

  size_t add_vertex(std::string label, Int weight, int genus = 0);
  void add_edge(size_t a, size_t b);
  // Index of the vertex with the given label; throws BadInput if absent.
  size_t vertex(const std::string& label) const;
  bool adjacent(size_t a, size_t b) const;
  IntMatrix intersection_matrix() const;
};

// Canonical certificate of the underlying weighted tree, independent of
// labels and of vertex/edge order. Throws BadInput if the graph is not a
// connected tree (all graphs in this project are).
std::string tree_certificate(const PlumbingGraph& g);
bool same_weighted_tree(const PlumbingGraph& a, const PlumbingGraph& b);

// Hirzebruch-Jung (negative-regular) continued fractions:
//   n/q = a1 - 1/(a2 - 1/(... - 1/as)),  all ai >= 2.
// hj_expand requires 0 < q < n coprime; hj_value requires all entries >= 2
// and returns the coprime pair (n, q) with 0 < q <= n.
std::vector<Int> hj_expand(const Int& n, const Int& q);
std::pair<Int, Int> hj_value(const std::vector<Int>& seq);

struct CyclicType {
  Int n;
  Int q;  // 0 < q < n, gcd(q, n) = 1
  bool operator==(const CyclicType&) const = default;
};

// Normalizes the cyclic action (x, y) -> (mu^w1 x, mu^w2 y) of order n to the
// standard form (x, y) -> (mu x, mu^q y): q = w2 * w1^-1 mod n. Throws
// NonFree when either weight shares a factor with n (the action would fix a
// curve), BadInput when n < 2 or the normalized q is 0.
CyclicType normalize_cyclic_type(const Int& n, const Int& w1, const Int& w2);

// Star-shaped graph: central vertex plus chains; arms[i] lists the positive
// continued-fraction entries of arm i read from the centre outward, so the
// vertex of weight -arms[i][0] is the one attached to the centre.
PlumbingGraph star_graph(const Int& center_weight,
                         const std::vector<std::vector<Int>>& arms,
                         int center_genus = 0);

// Resolution dual graphs of the singularity families, weights as in the
// published figures ("no weight means -2"). Arms/chains derived from the
// continued-fraction data are read from the outside in.
PlumbingGraph b23_graph(long p);
PlumbingGraph c23_graph(long p);
PlumbingGraph c33_graph(long p);
PlumbingGraph gnq_graph(const Int& n, const Int& q);
// Seifert resolution star for the order-4m(m+1) quotient: central rational
// curve of weight -d, two [4] arms and the arm of the cyclic point
// (1/2m^2)[-(2m+1), 1].
PlumbingGraph b23_seifert_graph(long m, const Int& d);

struct DiscriminantGroup {
  bool negative_definite = false;
  Int order;                          // |det| of the intersection matrix
  std::vector<Int> invariant_factors;  // entries > 1, divisibility order
};

// Discriminant group (cokernel of the intersection matrix). Throws
// SingularMatrix when the determinant vanishes; a failed definiteness check
// only clears the flag.
DiscriminantGroup discriminant_group(const PlumbingGraph& g);

// Smallest integer d >= 1 such that the star with centre weight -d and the
// given arms has |det| = target; std::nullopt if no such d exists. The
// determinant is affine in d, so the search is exact.
std::optional<Int> solve_central_weight(const std::vector<std::vector<Int>>& arms,
                                        const Int& target);

}  // namespace qhd
