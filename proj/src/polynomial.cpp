#include "qhd/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qhd::polyalg {

void Coefficient::canonicalize() {
  if (rat == 0) {
    omega_mod = 0;
    k = 0;
    return;
  }
  if (omega_mod == 0) {
    k = 0;
    return;
  }
  k %= (long)omega_mod;
  if (k < 0) k += omega_mod;
  if (omega_mod % 2 == 0 && k >= (long)(omega_mod / 2)) {
    k -= omega_mod / 2;
    rat = -rat;
  }
  if (k == 0) omega_mod = 0;
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  if (omega_mod && o.omega_mod && omega_mod != o.omega_mod)
    throw CoefficientMismatch("product of roots of unity of different orders");
  Coefficient out;
  out.rat = rat * o.rat;
  out.omega_mod = omega_mod ? omega_mod : o.omega_mod;
  out.k = k + o.k;
  out.canonicalize();
  return out;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (omega_mod != o.omega_mod || k != o.k)
    throw CoefficientMismatch("sum of unlike root-of-unity parts");
  Coefficient out = *this;
  out.rat += o.rat;
  out.canonicalize();
  return out;
}

Coefficient Coefficient::operator-() const {
  Coefficient out = *this;
  out.rat = -out.rat;
  return out;
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
  if (o.is_zero()) throw std::domain_error("coefficient division by zero");
  if (omega_mod && o.omega_mod && omega_mod != o.omega_mod)
    throw CoefficientMismatch("quotient of roots of unity of different orders");
  Coefficient out;
  out.rat = rat / o.rat;
  out.omega_mod = omega_mod ? omega_mod : o.omega_mod;
  out.k = k - o.k;
  out.canonicalize();
  return out;
}

bool Coefficient::operator==(const Coefficient& o) const {
  return rat == o.rat && omega_mod == o.omega_mod && k == o.k;
}

bool GradedLexDesc::operator()(const ExponentVec& a, const ExponentVec& b) const {
  unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
  unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
  if (da != db) return da > db;
  return a > b;
}

SparsePolynomial SparsePolynomial::constant(size_t arity, Coefficient c) {
  SparsePolynomial f(arity);
  if (!c.is_zero()) f.terms.emplace(ExponentVec(arity, 0), std::move(c));
  return f;
}

SparsePolynomial SparsePolynomial::variable(size_t arity, size_t i) {
  if (i >= arity) throw std::out_of_range("variable index");
  SparsePolynomial f(arity);
  ExponentVec e(arity, 0);
  e[i] = 1;
  f.terms.emplace(std::move(e), Coefficient(Rational(1)));
  return f;
}

void SparsePolynomial::add_term(const ExponentVec& e, const Coefficient& c) {
  if (e.size() != arity) throw std::invalid_argument("exponent arity mismatch");
  if (c.is_zero()) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    Coefficient s = it->second + c;
    if (s.is_zero())
      terms.erase(it);
    else
      it->second = std::move(s);
  }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  if (arity != o.arity) throw std::invalid_argument("arity mismatch");
  SparsePolynomial out = *this;
  for (const auto& [e, c] : o.terms) out.add_term(e, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  return *this + (-o);
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out(arity);
  for (const auto& [e, c] : terms) out.terms.emplace(e, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  if (arity != o.arity) throw std::invalid_argument("arity mismatch");
  SparsePolynomial out(arity);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      ExponentVec e(arity);
      for (size_t i = 0; i < arity; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
  return arity == o.arity &&
         std::equal(terms.begin(), terms.end(), o.terms.begin(), o.terms.end());
}

long SparsePolynomial::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms)
    d = std::max(d, (long)std::accumulate(e.begin(), e.end(), 0ul));
  return d;
}

SparsePolynomial pow(const SparsePolynomial& f, unsigned long n) {
  SparsePolynomial out = SparsePolynomial::constant(f.arity, Coefficient(Rational(1)));
  SparsePolynomial base = f;
  while (n) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

SparsePolynomial substitute(const SparsePolynomial& f, const PolyMap& images) {
  if (images.size() != f.arity) throw std::invalid_argument("substitute: every variable needs an image");
  size_t arity = images.empty() ? 0 : images[0].arity;
  for (const auto& g : images)
    if (g.arity != arity) throw std::invalid_argument("substitute: image arity mismatch");
  SparsePolynomial out(arity);
  for (const auto& [e, c] : f.terms) {
    SparsePolynomial term = SparsePolynomial::constant(arity, c);
    for (size_t i = 0; i < f.arity; ++i)
      if (e[i]) term = term * pow(images[i], e[i]);
    out = out + term;
  }
  return out;
}

std::optional<SparsePolynomial> divide_exact(const SparsePolynomial& f,
                                             const SparsePolynomial& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  if (f.arity != g.arity) throw std::invalid_argument("arity mismatch");
  const auto& [ge, gc] = *g.terms.begin();
  SparsePolynomial q(f.arity), r = f;
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms.begin();
    ExponentVec e(f.arity);
    for (size_t i = 0; i < f.arity; ++i) {
      if (re[i] < ge[i]) return std::nullopt;
      e[i] = re[i] - ge[i];
    }
    SparsePolynomial t(f.arity);
    t.terms.emplace(e, rc / gc);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

SparsePolynomial tangent_cone(const SparsePolynomial& f, const PolyMap& chart) {
  SparsePolynomial g = substitute(f, chart);
  if (g.is_zero()) throw ZeroPolynomial("tangent cone of the zero polynomial");
  unsigned long dmin = (unsigned long)-1;
  for (const auto& [e, c] : g.terms)
    dmin = std::min(dmin, (unsigned long)std::accumulate(e.begin(), e.end(), 0ul));
  SparsePolynomial out(g.arity);
  for (const auto& [e, c] : g.terms)
    if (std::accumulate(e.begin(), e.end(), 0ul) == dmin) out.terms.emplace(e, c);
  return out;
}

Rational evaluate(const SparsePolynomial& f, const std::vector<Rational>& point) {
  if (point.size() != f.arity) throw std::invalid_argument("evaluate: point arity mismatch");
  Rational out = 0;
  for (const auto& [e, c] : f.terms) {
    if (!c.is_rational()) throw std::domain_error("evaluate: non-rational coefficient");
    Rational v = c.rat;
    for (size_t i = 0; i < f.arity; ++i)
      for (unsigned j = 0; j < e[i]; ++j) v *= point[i];
    out += v;
  }
  return out;
}

long weighted_degree(const SparsePolynomial& f, const std::vector<long>& weights) {
  if (weights.size() != f.arity) throw std::invalid_argument("weights arity mismatch");
  long d = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    long w = 0;
    for (size_t i = 0; i < f.arity; ++i) w += weights[i] * (long)e[i];
    if (first || w > d) d = w;
    first = false;
  }
  return first ? -1 : d;
}

bool is_weighted_homogeneous(const SparsePolynomial& f, const std::vector<long>& weights) {
  if (weights.size() != f.arity) throw std::invalid_argument("weights arity mismatch");
  std::optional<long> d;
  for (const auto& [e, c] : f.terms) {
    long w = 0;
    for (size_t i = 0; i < f.arity; ++i) w += weights[i] * (long)e[i];
    if (d && *d != w) return false;
    d = w;
  }
  return true;
}

std::optional<Coefficient> is_scalar_multiple(const SparsePolynomial& f,
                                              const SparsePolynomial& g) {
  if (f.arity != g.arity) return std::nullopt;
  if (g.is_zero()) return f.is_zero() ? std::optional<Coefficient>(Coefficient(Rational(1))) : std::nullopt;
  if (f.is_zero()) return Coefficient(Rational(0));
  if (f.terms.size() != g.terms.size()) return std::nullopt;
  std::optional<Coefficient> scalar;
  auto itf = f.terms.begin();
  auto itg = g.terms.begin();
  for (; itf != f.terms.end(); ++itf, ++itg) {
    if (itf->first != itg->first) return std::nullopt;
    Coefficient ratio;
    try {
      ratio = itf->second / itg->second;
    } catch (const CoefficientMismatch&) {
      return std::nullopt;
    }
    if (scalar && !(*scalar == ratio)) return std::nullopt;
    scalar = ratio;
  }
  return scalar;
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;
  const std::vector<std::string>& vars;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw PolyParseError(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  unsigned long uint_lit() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected number");
    return std::stoul(s.substr(start, pos - start));
  }

  SparsePolynomial base() {
    skip_ws();
    if (eat('(')) {
      SparsePolynomial f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      Rational num = Rational((boost::multiprecision::cpp_int)uint_lit());
      if (eat('/')) num /= Rational((boost::multiprecision::cpp_int)uint_lit());
      return SparsePolynomial::constant(vars.size(), Coefficient(num));
    }
    size_t start = pos;
    while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
    if (pos == start) fail("expected variable or number");
    std::string name = s.substr(start, pos - start);
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return SparsePolynomial::variable(vars.size(), i);
    fail("unknown variable \"" + name + "\"");
  }

  SparsePolynomial factor() {
    SparsePolynomial f = base();
    while (eat('^')) f = pow(f, uint_lit());
    return f;
  }

  SparsePolynomial term() {
    SparsePolynomial f = factor();
    while (eat('*')) f = f * factor();
    return f;
  }

  SparsePolynomial expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    SparsePolynomial f = term();
    if (neg) f = -f;
    while (true) {
      skip_ws();
      if (eat('+'))
        f = f + term();
      else if (eat('-'))
        f = f - term();
      else
        break;
    }
    return f;
  }
};

std::string coef_string(const Coefficient& c) {
  std::string out = c.rat.str();
  if (!c.is_rational()) out += "*w^" + std::to_string(c.k);
  return out;
}

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text,
                                  const std::vector<std::string>& vars) {
  PolyParser p{text, 0, vars};
  p.skip_ws();
  if (p.pos == text.size()) return SparsePolynomial(vars.size());
  SparsePolynomial f = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::string to_string(const SparsePolynomial& f, const std::vector<std::string>& vars) {
  if (vars.size() != f.arity) throw std::invalid_argument("to_string: arity mismatch");
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms) {
    Coefficient cc = c;
    bool neg = cc.rat < 0;
    if (neg) cc.rat = -cc.rat;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (size_t i = 0; i < f.arity; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool unit_coef = cc.rat == 1 && cc.is_rational();
    if (mono.empty())
      out += coef_string(cc);
    else if (unit_coef)
      out += mono;
    else
      out += coef_string(cc) + "*" + mono;
  }
  return out;
}

}  // namespace qhd::polyalg
