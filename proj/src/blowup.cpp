#include "qhd/blowup.hpp"

namespace qhd {

NotSNC::NotSNC(std::string a_, std::string b_, Int product_)
    : std::runtime_error("curves " + a_ + " and " + b_ +
                         " meet with intersection number " + product_.str()),
      a(std::move(a_)),
      b(std::move(b_)),
      product(std::move(product_)) {}

void BlowupModel::add_curve(const std::string& label, long degree) {
  if (classes_.count(label)) throw BadInput("duplicate curve " + label);
  std::vector<Int> c(rank_, 0);
  c[0] = degree;
  classes_[label] = std::move(c);
  order_.push_back(label);
}

bool BlowupModel::has_curve(const std::string& label) const {
  return classes_.count(label) != 0;
}

const std::vector<Int>& BlowupModel::raw(const std::string& label) const {
  auto it = classes_.find(label);
  if (it == classes_.end()) throw UnknownCurve("no curve labelled " + label);
  return it->second;
}

void BlowupModel::blow_up(const std::vector<std::pair<std::string, long>>& at,
                          const std::string& exc_label) {
  if (classes_.count(exc_label))
    throw BadInput("duplicate curve " + exc_label);
  for (const auto& [label, mult] : at) {
    raw(label);  // throws UnknownCurve early, before any mutation
    if (mult < 1) throw BadInput("multiplicity must be >= 1 at " + label);
  }
  size_t coord = rank_++;
  std::vector<Int> exc(rank_, 0);
  exc[coord] = 1;
  for (const auto& [label, mult] : at) {
    auto& c = classes_[label];
    c.resize(rank_, 0);
    c[coord] -= mult;
  }
  classes_[exc_label] = std::move(exc);
  order_.push_back(exc_label);
}

std::vector<Int> BlowupModel::curve_class(const std::string& label) const {
  std::vector<Int> c = raw(label);
  c.resize(rank_, 0);
  return c;
}

Int BlowupModel::product(const std::string& a, const std::string& b) const {
  std::vector<Int> ca = curve_class(a), cb = curve_class(b);
  Int s = ca[0] * cb[0];
  for (size_t i = 1; i < rank_; ++i) s -= ca[i] * cb[i];
  return s;
}

Int BlowupModel::self_intersection(const std::string& label) const {
  return product(label, label);
}

PlumbingGraph dual_graph(const BlowupModel& m,
                         const std::vector<std::string>& kept) {
  PlumbingGraph g;
  for (const auto& label : kept)
    g.add_vertex(label, m.self_intersection(label));
  for (size_t i = 0; i < kept.size(); ++i)
    for (size_t j = i + 1; j < kept.size(); ++j) {
      Int p = m.product(kept[i], kept[j]);
      if (p == 1)
        g.add_edge(i, j);
      else if (p != 0)
        throw NotSNC(kept[i], kept[j], p);
    }
  return g;
}

std::vector<Int> complement_h1(const BlowupModel& m,
                               const std::vector<std::string>& kept) {
  IntMatrix rows;
  rows.reserve(kept.size());
  for (const auto& label : kept) rows.push_back(m.curve_class(label));
  return cokernel_invariants(rows, m.rank());
}

}  // namespace qhd
