#include "qhd/braid_monodromy.hpp"

#include <algorithm>
#include <set>

#include "qhd/json_io.hpp"

namespace qhd::zvk {

using fpgroup::Word;

BraidMonodromyData load_braid_monodromy(const std::string& path) {
  auto j = io::load_json(path);
  BraidMonodromyData d;
  d.strands = j.at("strands").get<int>();
  d.layout = j.at("layout").get<std::vector<std::string>>();
  if (j.contains("vertical")) d.vertical_gen = j.at("vertical").get<std::string>();
  for (const auto& e : j.at("events")) {
    MonodromyEvent ev;
    if (e.contains("value")) ev.value = e.at("value").get<std::string>();
    ev.tau = parse_braid(e.value("tau", ""), d.strands);
    if (e.contains("clusters")) {
      ev.vertical = true;
      for (const auto& c : e.at("clusters")) {
        VerticalCluster k;
        k.strands = c.at("strands").get<std::vector<int>>();
        k.label = c.value("label", "");
        ev.clusters.push_back(std::move(k));
      }
    } else {
      ev.beta = parse_braid(e.at("beta").get<std::string>(), d.strands);
    }
    d.events.push_back(std::move(ev));
  }
  return d;
}

WiringResult braid_monodromy_presentation(const BraidMonodromyData& d) {
  if (d.strands <= 0 || (int)d.layout.size() != d.strands)
    throw std::invalid_argument("layout must name every strand");
  bool has_vertical =
      std::any_of(d.events.begin(), d.events.end(), [](const MonodromyEvent& e) {
        return e.vertical;
      });
  if (has_vertical && d.vertical_gen.empty())
    throw std::invalid_argument("vertical event without a fibre generator name");

  WiringResult out;
  out.pres.gens = d.layout;
  if (has_vertical) out.pres.gens.push_back(d.vertical_gen);
  out.meridians.gens = out.pres.gens;
  const int fibre = d.strands + 1;
  if (has_vertical) out.meridians.entries[d.vertical_gen] = Word{fibre};

  std::set<Word> seen;
  auto push = [&](Word rel) {
    rel = fpgroup::free_reduce(std::move(rel));
    if (rel.empty()) return;
    if (!seen.insert(fpgroup::cyclic_canonical(rel)).second) return;
    out.pres.relators.push_back(std::move(rel));
  };

  for (const auto& ev : d.events) {
    auto phi = artin_images(ev.tau);
    auto transported = [&](const Word& w) { return fpgroup::substitute(w, phi); };
    if (!ev.vertical) {
      if (ev.beta.strands != d.strands) throw BadBraid("event braid on wrong strand count");
      auto moved = artin_images(ev.beta);
      for (int i = 0; i < d.strands; ++i) {
        if (moved[i] == Word{i + 1}) continue;
        push(fpgroup::concat(fpgroup::inverse(transported(Word{i + 1})),
                             transported(moved[i])));
      }
    } else {
      for (const auto& k : ev.clusters) {
        if (k.strands.empty()) throw std::invalid_argument("empty cluster");
        std::vector<Word> factors{Word{fibre}};
        for (int s : k.strands) {
          if (s < 1 || s > d.strands) throw std::invalid_argument("cluster strand out of range");
          factors.push_back(transported(Word{s}));
        }
        Word e;
        for (const auto& m : factors) e = fpgroup::concat(e, m);
        for (size_t j = 0; j + 1 < factors.size(); ++j)
          push(fpgroup::concat(fpgroup::concat(e, factors[j]),
                               fpgroup::concat(fpgroup::inverse(e),
                                               fpgroup::inverse(factors[j]))));
        if (!k.label.empty()) {
          if (!out.meridians.entries.emplace(k.label, e).second)
            throw std::invalid_argument("duplicate meridian name: " + k.label);
        }
      }
    }
  }
  return out;
}

}  // namespace qhd::zvk
