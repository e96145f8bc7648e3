#include "qhd/plumbing.hpp"

#include <algorithm>
#include <functional>

namespace qhd {

size_t PlumbingGraph::add_vertex(std::string label, Int weight, int genus) {
  vertices.push_back({std::move(label), std::move(weight), genus});
  return vertices.size() - 1;
}

void PlumbingGraph::add_edge(size_t a, size_t b) {
  if (a >= vertices.size() || b >= vertices.size() || a == b)
    throw BadInput("add_edge: bad vertex index");
  edges.emplace_back(a, b);
}

size_t PlumbingGraph::vertex(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].label == label) return i;
  throw BadInput("no vertex labelled " + label);
}

bool PlumbingGraph::adjacent(size_t a, size_t b) const {
  for (const auto& [x, y] : edges)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

IntMatrix PlumbingGraph::intersection_matrix() const {
  const size_t n = vertices.size();
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = vertices[i].weight;
  for (const auto& [a, b] : edges) {
    m[a][b] += 1;
    m[b][a] += 1;
  }
  return m;
}

std::string tree_certificate(const PlumbingGraph& g) {
  const size_t n = g.vertices.size();
  if (n == 0) throw BadInput("tree_certificate: empty graph");
  if (g.edges.size() != n - 1) throw BadInput("tree_certificate: not a tree");
  std::vector<std::vector<size_t>> adj(n);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<size_t> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw BadInput("tree_certificate: not connected");

  std::function<std::string(size_t, size_t)> enc = [&](size_t v, size_t parent) {
    std::vector<std::string> kids;
    for (size_t w : adj[v])
      if (w != parent) kids.push_back(enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + g.vertices[v].weight.str();
    if (g.vertices[v].genus != 0) s += "g" + std::to_string(g.vertices[v].genus);
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best = enc(0, n);
  for (size_t r = 1; r < n; ++r) best = std::min(best, enc(r, n));
  return best;
}

bool same_weighted_tree(const PlumbingGraph& a, const PlumbingGraph& b) {
  return tree_certificate(a) == tree_certificate(b);
}

std::vector<Int> hj_expand(const Int& n, const Int& q) {
  if (!(Int(0) < q && q < n)) throw BadInput("hj_expand: need 0 < q < n");
  if (gcd(n, q) != 1) throw BadInput("hj_expand: n, q not coprime");
  std::vector<Int> out;
  Int a = n, b = q;
  while (b > 0) {
    Int c = (a + b - 1) / b;  // ceil(a/b), both positive
    out.push_back(c);
    Int next = c * b - a;
    a = b;
    b = next;
  }
  return out;
}

std::pair<Int, Int> hj_value(const std::vector<Int>& seq) {
  if (seq.empty()) throw BadInput("hj_value: empty expansion");
  for (const Int& a : seq)
    if (a < 2) throw BadInput("hj_value: entries must be >= 2");
  // fold from the right; the tail value is always > 1, kept as num/den
  Int num = seq.back(), den = 1;
  for (size_t i = seq.size() - 1; i-- > 0;) {
    // a - den/num = (a*num - den)/num
    Int nn = seq[i] * num - den;
    den = num;
    num = nn;
  }
  Int g = gcd(num, den);
  return {num / g, den / g};
}

namespace {

// extended gcd: returns g and x with x*a == g (mod m), a, m > 0
Int mod_inverse(Int a, const Int& m) {
  Int r0 = m, r1 = a % m, x0 = 0, x1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int x2 = x0 - q * x1;
    r0 = r1;
    r1 = r2;
    x0 = x1;
    x1 = x2;
  }
  if (r0 != 1) throw NonFree("weight not invertible mod n");
  x0 %= m;
  if (x0 < 0) x0 += m;
  return x0;
}

}  // namespace

CyclicType normalize_cyclic_type(const Int& n, const Int& w1, const Int& w2) {
  if (n < 2) throw BadInput("normalize_cyclic_type: need n >= 2");
  auto reduce = [&](Int w) {
    w %= n;
    if (w < 0) w += n;
    return w;
  };
  Int u1 = reduce(w1), u2 = reduce(w2);
  if (gcd(u1, n) != 1 || gcd(u2, n) != 1)
    throw NonFree("cyclic action has a weight sharing a factor with n");
  Int q = (u2 * mod_inverse(u1, n)) % n;
  return {n, q};
}

PlumbingGraph star_graph(const Int& center_weight,
                         const std::vector<std::vector<Int>>& arms,
                         int center_genus) {
  PlumbingGraph g;
  size_t c = g.add_vertex("c", center_weight, center_genus);
  for (size_t i = 0; i < arms.size(); ++i) {
    size_t prev = c;
    for (size_t j = 0; j < arms[i].size(); ++j) {
      size_t v = g.add_vertex(
          "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
          -arms[i][j]);
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

namespace {

std::vector<Int> reversed(std::vector<Int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// chain with the given weights plus one extra leaf attached to chain[at]
PlumbingGraph chain_with_leaf(const std::vector<Int>& weights, size_t at,
                              const Int& leaf_weight) {
  PlumbingGraph g;
  for (size_t i = 0; i < weights.size(); ++i) {
    g.add_vertex("v" + std::to_string(i + 1), weights[i]);
    if (i > 0) g.add_edge(i - 1, i);
  }
  size_t leaf = g.add_vertex("t", leaf_weight);
  g.add_edge(at, leaf);
  return g;
}

}  // namespace

PlumbingGraph b23_graph(long p) {
  if (p < 0) throw BadInput("b23_graph: need p >= 0");
  // long arm read from the outside in: 2(p+2)^2 / (2p+3)
  Int n = 2 * Int(p + 2) * Int(p + 2);
  std::vector<Int> arm = reversed(hj_expand(n, Int(2 * p + 3)));
  return star_graph(Int(-2), {{4}, {4}, arm});
}

PlumbingGraph c23_graph(long p) {
  if (p < 0) throw BadInput("c23_graph: need p >= 0");
  std::vector<Int> chain;
  chain.push_back(Int(-(p + 3)));
  for (long i = 0; i < p + 2; ++i) chain.push_back(Int(-2));
  chain.push_back(Int(-3));
  return chain_with_leaf(chain, chain.size() - 2, Int(-6));
}

PlumbingGraph c33_graph(long p) {
  if (p < 0) throw BadInput("c33_graph: need p >= 0");
  std::vector<Int> chain;
  chain.push_back(Int(-(p + 4)));
  for (long i = 0; i < p + 3; ++i) chain.push_back(Int(-2));
  return chain_with_leaf(chain, chain.size() - 2, Int(-6));
}

PlumbingGraph gnq_graph(const Int& n, const Int& q) {
  if (n < 2 || q < 1 || q >= n || gcd(n, q) != 1)
    throw BadInput("gnq_graph: need 2 <= n, 1 <= q < n coprime");
  std::vector<Int> entries = hj_expand(n * n, n * q - 1);
  PlumbingGraph g;
  for (size_t i = 0; i < entries.size(); ++i) {
    g.add_vertex("g" + std::to_string(i + 1), -entries[i]);
    if (i > 0) g.add_edge(i - 1, i);
  }
  return g;
}

PlumbingGraph b23_seifert_graph(long m, const Int& d) {
  if (m < 2) throw BadInput("b23_seifert_graph: need m >= 2");
  Int n = 2 * Int(m) * Int(m);
  CyclicType t = normalize_cyclic_type(n, Int(-(2 * m + 1)), Int(1));
  // the resolved cyclic point meets the central curve at the -a_s end, so
  // the arm read from the centre outward is the reversed expansion
  std::vector<Int> arm = reversed(hj_expand(t.n, t.q));
  return star_graph(-d, {{4}, {4}, arm});
}

DiscriminantGroup discriminant_group(const PlumbingGraph& g) {
  IntMatrix m = g.intersection_matrix();
  Int det = determinant(m);
  if (det == 0) throw SingularMatrix("intersection matrix is singular");
  DiscriminantGroup out;
  out.negative_definite = is_negative_definite(m);
  out.order = abs(det);
  out.invariant_factors = cokernel_invariants(m, m.size());
  return out;
}

std::optional<Int> solve_central_weight(
    const std::vector<std::vector<Int>>& arms, const Int& target) {
  if (target <= 0) throw BadInput("solve_central_weight: need target > 0");
  // det is affine in the centre weight: sample at d = 0, 1 and solve exactly
  Int f0 = determinant(star_graph(Int(0), arms).intersection_matrix());
  Int f1 = determinant(star_graph(Int(-1), arms).intersection_matrix());
  Int slope = f1 - f0;
  if (slope == 0)
    return abs(f0) == target ? std::optional<Int>(1) : std::nullopt;
  std::optional<Int> best;
  for (const Int& s : {target, Int(-target)}) {
    Int num = s - f0;
    if (num % slope != 0) continue;
    Int d = num / slope;
    if (d >= 1 && (!best || d < *best)) best = d;
  }
  return best;
}

}  // namespace qhd
