// Regenerates data/certs/c23_certs.json: machine checkable proofs that the
// conic pencil presentation is equivalent to its reference form and that the
// simplification steps hold. Run from the repository root after changing
// anything in the pencil pipeline; the output is committed.

#include <cstdio>
#include <fstream>

#include "qhd/braid_monodromy.hpp"
#include "qhd/certificate.hpp"
#include "qhd/json_io.hpp"

using namespace qhd;
using namespace qhd::fpgroup;

namespace {

Word reduced_parse(const std::string& s, const std::vector<std::string>& gens) {
  return free_reduce(parse_word(s, gens));
}

nlohmann::json factors_json(const RelatorCertificate& c,
                            const std::vector<std::string>& gens) {
  auto arr = nlohmann::json::array();
  for (const auto& f : c.factors)
    arr.push_back({{"relator", f.relator},
                   {"sign", f.sign},
                   {"conjugator", print_word(f.conjugator, gens)}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/certs/c23_certs.json";

  auto res = zvk::braid_monodromy_presentation(
      zvk::load_braid_monodromy("data/braids/c23.json"));
  auto killed = quotient_by_normal_closure(res.pres, {res.meridians.at("T0")});
  auto no_q2 = tietze_eliminate(killed, "q2", find_defining_relator(killed, "q2"));
  auto reduced = tietze_eliminate(no_q2, "f", find_defining_relator(no_q2, "f"));

  Presentation reference{{"q", "c", "f"},
                         {reduced_parse("q*(q*c)^3*q^-1*(q*c)^-3", {"q", "c", "f"}),
                          reduced_parse("f*(q*c*q^-1)*f^-1*(q*c*q^-1)^-1", {"q", "c", "f"}),
                          reduced_parse("f*q*c^-1*q*c", {"q", "c", "f"})}};

  Word step1 = reduced_parse("q1*(c*q1*c)*q1^-1*(c*q1*c)^-1", reduced.gens);
  auto extended = quotient_by_normal_closure(reduced, {step1});
  Word step2 = reduced_parse("q1*c*q1^-1*c^-1", reduced.gens);

  std::map<std::string, const Presentation*> table{{"killed", &killed},
                                                   {"reference", &reference},
                                                   {"reduced", &reduced},
                                                   {"extended", &extended}};

  auto certs = nlohmann::json::array();
  bool ok = true;
  auto add = [&](const std::string& pres_name, const Word& target,
                 const std::string& note) {
    const Presentation& p = *table.at(pres_name);
    auto cert = search_relator_certificate(p, target);
    if (!cert || !check_relator_certificate(p, target, *cert)) {
      std::fprintf(stderr, "FAILED: %s\n", note.c_str());
      ok = false;
      return;
    }
    certs.push_back({{"presentation", pres_name},
                     {"target", print_word(free_reduce(target), p.gens)},
                     {"factors", factors_json(*cert, p.gens)},
                     {"note", note}});
  };

  // an isomorphism with the reference presentation: both generator maps send
  // relators to consequences, and the composite fixes every generator
  std::vector<Word> to_reference = {{1}, {1}, {2}, {3}};
  for (size_t i = 0; i < killed.relators.size(); ++i)
    add("reference", substitute(killed.relators[i], to_reference),
        "image of pencil relator " + std::to_string(i));
  std::vector<Word> to_killed = {{2}, {3}, {4}};
  for (size_t i = 0; i < reference.relators.size(); ++i)
    add("killed", substitute(reference.relators[i], to_killed),
        "image of reference relator " + std::to_string(i));
  add("killed", {1, -2}, "round trip of the second conic meridian");

  // the two simplification steps towards the abelian form
  add("reduced", step1, "central element commutation");
  add("extended", step2, "commuting generators");

  if (!ok) return 1;

  nlohmann::json doc;
  for (const auto& [name, p] : table) doc["presentations"][name] = io::presentation_to_json(*p);
  doc["maps"]["to_reference"] = std::vector<std::string>{"q", "q", "c", "f"};
  doc["maps"]["to_killed"] = std::vector<std::string>{"q1", "c", "f"};
  doc["certificates"] = certs;

  std::ofstream out(out_path);
  out << doc.dump(2) << "\n";
  if (!out) {
    std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
    return 1;
  }
  std::printf("%s: %zu certificates\n", out_path.c_str(), certs.size());
  return 0;
}
