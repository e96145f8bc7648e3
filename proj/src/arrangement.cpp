#include "qhd/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qhd/json_io.hpp"

namespace qhd::zvk {

using fpgroup::Word;

namespace {

Rational y_at(const Line& l, const Rational& x) { return -(l.a * x + l.c) / l.b; }

struct Event {
  Rational x, y;
  std::vector<size_t> lines;
};

void validate_lines(const std::vector<Line>& lines) {
  std::set<std::string> seen;
  for (const auto& l : lines) {
    if (l.label.empty()) throw std::invalid_argument("line without label");
    if (!seen.insert(l.label).second)
      throw std::invalid_argument("duplicate line label: " + l.label);
    if (l.a == 0 && l.b == 0) throw DegenerateArrangement("degenerate equation: " + l.label);
    if (l.b == 0) throw DegenerateArrangement("vertical line: " + l.label);
  }
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i].a * lines[j].b == lines[j].a * lines[i].b)
        throw DegenerateArrangement("parallel lines: " + lines[i].label + ", " +
                                    lines[j].label);
}

std::vector<Event> collect_events(const std::vector<Line>& lines, const Rational& base_x) {
  std::map<std::pair<Rational, Rational>, std::set<size_t>> at_point;
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      // a1 x + b1 y + c1 = 0 = a2 x + b2 y + c2
      Rational det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
      Rational x = (lines[j].c * lines[i].b - lines[i].c * lines[j].b) / det;
      Rational y = (lines[i].c * lines[j].a - lines[j].c * lines[i].a) / det;
      auto& s = at_point[{x, y}];
      s.insert(i);
      s.insert(j);
    }
  std::vector<Event> events;
  std::set<Rational> xs;
  for (const auto& [pt, s] : at_point) {
    if (!xs.insert(pt.first).second)
      throw DegenerateArrangement("two singular points share x = " + pt.first.str());
    if (pt.first == base_x)
      throw DegenerateArrangement("base fibre passes through a singular point");
    events.push_back({pt.first, pt.second, {s.begin(), s.end()}});
  }
  return events;
}

// Bottom-to-top order of all lines at x.
std::vector<size_t> fibre_order(const std::vector<Line>& lines, const Rational& x) {
  std::vector<size_t> order(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return y_at(lines[i], x) < y_at(lines[j], x);
  });
  return order;
}

Word commutator(const Word& u, const Word& v) {
  using fpgroup::concat;
  return fpgroup::free_reduce(
      concat(concat(u, v), concat(fpgroup::inverse(u), fpgroup::inverse(v))));
}

}  // namespace

const Word& MeridianMap::at(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end()) throw UnknownLabel("no meridian named " + name);
  return it->second;
}

WiringResult wiring_presentation(const LineArrangement& arr) {
  validate_lines(arr.lines);
  const auto& lines = arr.lines;
  auto events = collect_events(lines, arr.base_x);

  // nearest to the base fibre first, each side independently
  std::vector<Event> left, right;
  for (auto& e : events) (e.x < arr.base_x ? left : right).push_back(e);
  std::sort(left.begin(), left.end(), [](const Event& a, const Event& b) { return a.x > b.x; });
  std::sort(right.begin(), right.end(), [](const Event& a, const Event& b) { return a.x < b.x; });

  WiringResult out;
  for (const auto& l : lines) out.pres.gens.push_back(l.label);
  out.meridians.gens = out.pres.gens;

  // full product of the base fibre, bottom to top
  Word infinity;
  for (size_t i : fibre_order(lines, arr.base_x)) infinity.push_back((int)i + 1);
  out.pres.relators.push_back(infinity);

  std::map<std::vector<std::string>, std::string> names;
  for (const auto& [name, labels] : arr.point_names) {
    std::vector<std::string> key = labels;
    std::sort(key.begin(), key.end());
    names[key] = name;
  }
  std::set<std::string> named_used;
  size_t auto_counter = 0;

  auto run_side = [&](const std::vector<Event>& side) {
    std::vector<Word> words(lines.size());
    for (size_t i = 0; i < lines.size(); ++i) words[i] = Word{(int)i + 1};
    Rational prev_x = arr.base_x;
    for (const auto& ev : side) {
      Rational sample = (prev_x + ev.x) / 2;
      auto order = fibre_order(lines, sample);
      std::vector<size_t> pos;
      for (size_t p = 0; p < order.size(); ++p)
        if (std::find(ev.lines.begin(), ev.lines.end(), order[p]) != ev.lines.end())
          pos.push_back(p);
      size_t k = ev.lines.size();
      if (k > 3)
        throw DegenerateArrangement("point of multiplicity above three at x = " +
                                    ev.x.str());
      for (size_t j = 1; j < pos.size(); ++j)
        if (pos[j] != pos[j - 1] + 1)
          throw DegenerateArrangement("sweep order broken at x = " + ev.x.str());

      // current words through the point, bottom to top
      std::vector<size_t> through;
      std::vector<Word> w;
      for (size_t p : pos) through.push_back(order[p]);
      for (size_t i : through) w.push_back(words[i]);

      Word product;
      for (const auto& wi : w) product = fpgroup::concat(product, wi);
      product = fpgroup::free_reduce(product);
      for (size_t j = k - 1; j >= 1; --j) {
        Word rel = commutator(product, w[j]);
        if (!rel.empty()) out.pres.relators.push_back(rel);
      }

      std::vector<std::string> key;
      for (size_t i : ev.lines) key.push_back(lines[i].label);
      std::sort(key.begin(), key.end());
      std::string name;
      if (auto it = names.find(key); it != names.end()) {
        name = it->second;
        named_used.insert(name);
      } else {
        name = "p" + std::to_string(++auto_counter);
      }
      if (!out.meridians.entries.emplace(name, product).second)
        throw std::invalid_argument("duplicate meridian name: " + name);

      // crossing the point reverses the block; only a middle strand changes
      // its word, conjugated by the bottom one
      if (k == 3)
        words[through[1]] = fpgroup::free_reduce(fpgroup::concat(
            fpgroup::concat(w[0], w[1]), fpgroup::inverse(w[0])));
      prev_x = ev.x;
    }
  };
  run_side(left);
  run_side(right);

  for (const auto& [key, name] : names)
    if (!named_used.count(name)) throw UnknownLabel("named point not in arrangement: " + name);
  return out;
}

MeridianMap derived_meridians(
    MeridianMap mm, const std::vector<std::pair<std::string, std::string>>& defs) {
  for (const auto& [name, expr] : defs) {
    bool clash = mm.entries.count(name) ||
                 std::find(mm.gens.begin(), mm.gens.end(), name) != mm.gens.end();
    if (clash) throw std::invalid_argument("duplicate meridian name: " + name);

    std::vector<std::string> vocab = mm.gens;
    std::vector<Word> images;
    for (size_t i = 0; i < mm.gens.size(); ++i) images.push_back(Word{(int)i + 1});
    for (const auto& [key, word] : mm.entries) {
      vocab.push_back(key);
      images.push_back(word);
    }

    for (size_t i = 0; i < expr.size();) {
      if (std::isalpha((unsigned char)expr[i]) || expr[i] == '_') {
        size_t j = i;
        while (j < expr.size() && (std::isalnum((unsigned char)expr[j]) || expr[j] == '_')) ++j;
        std::string id = expr.substr(i, j - i);
        if (std::find(vocab.begin(), vocab.end(), id) == vocab.end())
          throw UnknownLabel("unknown name in meridian expression: " + id);
        i = j;
      } else {
        ++i;
      }
    }
    Word raw = fpgroup::parse_word(expr, vocab);
    mm.entries[name] = fpgroup::substitute(raw, images);
  }
  return mm;
}

LineArrangement load_arrangement(const std::string& path) {
  auto j = io::load_json(path);
  LineArrangement arr;
  auto labels = j.at("labels").get<std::vector<std::string>>();
  const auto& eqs = j.at("lines");
  if (labels.size() != eqs.size())
    throw std::runtime_error(path + ": labels and lines differ in length");
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto& e = eqs[i];
    arr.lines.push_back(
        {io::parse_rational(e.at(0)), io::parse_rational(e.at(1)), io::parse_rational(e.at(2)),
         labels[i]});
  }
  arr.base_x = io::parse_rational(j.at("base_x"));
  if (j.contains("points"))
    for (const auto& [name, val] : j.at("points").items())
      arr.point_names.emplace_back(name, val.get<std::vector<std::string>>());
  return arr;
}

}  // namespace qhd::zvk
