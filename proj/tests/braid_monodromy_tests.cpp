#include <doctest.h>

#include "qhd/braid_monodromy.hpp"
#include "qhd/certificate.hpp"
#include "qhd/json_io.hpp"

using namespace qhd;
using namespace qhd::zvk;
using fpgroup::Word;

namespace {

BraidMonodromyData c23() { return load_braid_monodromy("data/braids/c23.json"); }

bool provable(const fpgroup::Presentation& p, const Word& w) {
  auto cert = fpgroup::search_relator_certificate(p, w);
  return cert && fpgroup::check_relator_certificate(p, w, *cert);
}

Word reduced_parse(const std::string& s, const std::vector<std::string>& gens) {
  return fpgroup::free_reduce(fpgroup::parse_word(s, gens));
}

}  // namespace

TEST_CASE("conic pencil monodromy data loads") {
  auto d = c23();
  CHECK(d.strands == 3);
  CHECK(d.layout == std::vector<std::string>{"q2", "q1", "c"});
  CHECK(d.vertical_gen == "f");
  REQUIRE(d.events.size() == 4);
  CHECK_FALSE(d.events[0].vertical);
  CHECK(d.events[2].tau.letters == std::vector<int>(6, -2));
  REQUIRE(d.events[3].vertical);
  REQUIRE(d.events[3].clusters.size() == 2);
  CHECK(d.events[3].clusters[0].strands == std::vector<int>{1});
  CHECK(d.events[3].clusters[1].label == "T0");
}

TEST_CASE("transported bases next to the events match the fibre pictures") {
  auto d = c23();
  // left of the node value: three negative full twists of the last two strands
  auto at_minus3 = artin_images(d.events[2].tau);
  Word w = fpgroup::power({2, 3}, 3);
  CHECK(at_minus3[0] == Word{1});
  CHECK(at_minus3[1] == fpgroup::conjugate(Word{2}, w));
  CHECK(at_minus3[2] == fpgroup::conjugate(Word{3}, w));
  // next to the fibre inside the curve
  auto at_zero = artin_images(d.events[3].tau);
  Word t{2, 3, -2};
  CHECK(at_zero[0] == t);
  CHECK(at_zero[1] == fpgroup::conjugate(Word{1}, t));
  CHECK(at_zero[2] == Word{2});
}

TEST_CASE("conic pencil presentation has the expected relators") {
  auto res = braid_monodromy_presentation(c23());
  const auto& gens = res.pres.gens;
  CHECK(gens == std::vector<std::string>{"q2", "q1", "c", "f"});
  auto W = [&](const std::string& s) { return reduced_parse(s, gens); };

  const std::string m = "(q1*c^-1*q1^-1*q2*q1*c*q1^-1)";
  const std::string e = "(f*" + m + "*q1)";
  std::vector<Word> expected = {
      W("q1*q2^-1"),
      W("q1^-1*(q1*c)^6*q1*(q1*c)^-6"),
      W("(q1*c)^-3*q1*(q1*c)^3*q2^-1"),
      W("f*(q1*c*q1^-1)*f*(q1*c*q1^-1)^-1*f^-2"),
      W(e + "*f*" + e + "^-1*f^-1"),
      W(e + "*" + m + "*" + e + "^-1*" + m + "^-1"),
  };
  REQUIRE(res.pres.relators.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) CHECK(res.pres.relators[i] == expected[i]);

  CHECK(res.meridians.at("f") == Word{4});
  CHECK(res.meridians.at("T0") == W("f*q1*c^-1*q1^-1*q2*q1*c"));
  // both commutators at the twelfth power event collapse to one cyclic class
  CHECK(fpgroup::cyclic_canonical(W("c^-1*(q1*c)^6*c*(q1*c)^-6")) ==
        fpgroup::cyclic_canonical(expected[1]));
}

TEST_CASE("reference pencil relations and emitted relators prove each other") {
  auto res = braid_monodromy_presentation(c23());
  const auto& gens = res.pres.gens;
  auto W = [&](const std::string& s) { return reduced_parse(s, gens); };

  const std::string m = "(q1*c^-1*q1^-1*q2*q1*c*q1^-1)";
  const std::string e = "(f*" + m + "*q1)";
  std::vector<Word> reference = {
      W("q1*q2^-1"),
      W("q1*(q1*c)^6*q1^-1*(q1*c)^-6"),
      W("q2^-1*(q1*c)^-3*q1*(q1*c)^3"),
      W("f*(q1*c*q1^-1)*f^-1*(q1*c*q1^-1)^-1"),
      W(e + "*f*" + e + "^-1*f^-1"),
      W(e + "*" + m + "*" + e + "^-1*" + m + "^-1"),
  };
  for (const auto& r : reference) CHECK(provable(res.pres, r));

  fpgroup::Presentation reference_pres{res.pres.gens, reference};
  for (const auto& r : res.pres.relators) CHECK(provable(reference_pres, r));
}

TEST_CASE("killing the blown down fibre component leaves a rank two abelian group") {
  auto res = braid_monodromy_presentation(c23());
  auto killed =
      fpgroup::quotient_by_normal_closure(res.pres, {res.meridians.at("T0")});
  REQUIRE(killed.relators.size() == 7);

  // the tangency relation identifies the two conic meridians
  auto no_q2 = fpgroup::tietze_eliminate(killed, "q2", 0);
  CHECK(no_q2.gens == std::vector<std::string>{"q1", "c", "f"});

  // the killed meridian now reads f*q1*c^-1*q1*c and solves for f
  size_t fdef = fpgroup::find_defining_relator(no_q2, "f");
  CHECK(fpgroup::print_word(no_q2.relators[fdef], no_q2.gens) == "f*q1*c^-1*q1*c");
  auto reduced = fpgroup::tietze_eliminate(no_q2, "f", fdef);
  CHECK(reduced.gens == std::vector<std::string>{"q1", "c"});

  // the two steps of the usual simplification, both certified
  Word step1 = reduced_parse("q1*(c*q1*c)*q1^-1*(c*q1*c)^-1", reduced.gens);
  auto cert1 = fpgroup::search_relator_certificate(reduced, step1);
  REQUIRE(cert1);
  CHECK(fpgroup::check_relator_certificate(reduced, step1, *cert1));

  auto extended = fpgroup::quotient_by_normal_closure(reduced, {step1});
  Word step2 = reduced_parse("q1*c*q1^-1*c^-1", reduced.gens);
  auto cert2 = fpgroup::search_relator_certificate(extended, step2);
  REQUIRE(cert2);
  CHECK(fpgroup::check_relator_certificate(extended, step2, *cert2));

  auto inv = fpgroup::abelian_invariants(reduced);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 0);
  CHECK(inv[1] == 0);
}

TEST_CASE("pencil group is equivalent to its reference three relator presentation") {
  auto res = braid_monodromy_presentation(c23());
  auto killed =
      fpgroup::quotient_by_normal_closure(res.pres, {res.meridians.at("T0")});

  fpgroup::Presentation reference{
      {"q", "c", "f"},
      {reduced_parse("q*(q*c)^3*q^-1*(q*c)^-3", {"q", "c", "f"}),
       reduced_parse("f*(q*c*q^-1)*f^-1*(q*c*q^-1)^-1", {"q", "c", "f"}),
       reduced_parse("f*q*c^-1*q*c", {"q", "c", "f"})}};

  // both conic meridians land on q
  std::vector<Word> to_reference = {{1}, {1}, {2}, {3}};
  for (const auto& r : killed.relators)
    CHECK(provable(reference, fpgroup::substitute(r, to_reference)));

  std::vector<Word> to_killed = {{2}, {3}, {4}};
  for (const auto& r : reference.relators)
    CHECK(provable(killed, fpgroup::substitute(r, to_killed)));

  // round trip sends q2 to q1, their equality is the first relator
  CHECK(provable(killed, fpgroup::concat(Word{1}, fpgroup::inverse(Word{2}))));
}

TEST_CASE("stored equivalence certificates stay valid for the current pipeline") {
  auto file = io::load_certificates("data/certs/c23_certs.json");
  auto res = braid_monodromy_presentation(c23());
  auto killed =
      fpgroup::quotient_by_normal_closure(res.pres, {res.meridians.at("T0")});
  auto no_q2 =
      fpgroup::tietze_eliminate(killed, "q2", fpgroup::find_defining_relator(killed, "q2"));
  auto reduced =
      fpgroup::tietze_eliminate(no_q2, "f", fpgroup::find_defining_relator(no_q2, "f"));

  // the stored snapshots must match what the pipeline computes today
  REQUIRE(file.presentations.count("killed"));
  CHECK(file.presentations.at("killed").gens == killed.gens);
  CHECK(file.presentations.at("killed").relators == killed.relators);
  REQUIRE(file.presentations.count("reduced"));
  CHECK(file.presentations.at("reduced").gens == reduced.gens);
  CHECK(file.presentations.at("reduced").relators == reduced.relators);

  REQUIRE(file.maps.count("to_reference"));
  CHECK(file.maps.at("to_reference").size() == killed.gens.size());
  REQUIRE(file.maps.count("to_killed"));
  CHECK(file.maps.at("to_killed").size() == 3);

  REQUIRE(file.entries.size() == 13);
  for (const auto& e : file.entries) {
    CAPTURE(e.note);
    CHECK(fpgroup::check_relator_certificate(file.presentations.at(e.presentation),
                                             e.target, e.cert));
  }
}

TEST_CASE("malformed monodromy data is rejected") {
  BraidMonodromyData d;
  d.strands = 3;
  d.layout = {"x", "y"};
  CHECK_THROWS_AS(braid_monodromy_presentation(d), std::invalid_argument);

  d.layout = {"x", "y", "z"};
  MonodromyEvent ev;
  ev.vertical = true;
  ev.tau = parse_braid("", 3);
  ev.clusters = {{{1}, ""}};
  d.events = {ev};
  CHECK_THROWS_AS(braid_monodromy_presentation(d), std::invalid_argument);

  d.vertical_gen = "f";
  d.events[0].clusters[0].strands = {5};
  CHECK_THROWS_AS(braid_monodromy_presentation(d), std::invalid_argument);

  d.events[0].clusters[0].strands = {};
  CHECK_THROWS_AS(braid_monodromy_presentation(d), std::invalid_argument);

  MonodromyEvent bad;
  bad.tau = parse_braid("", 3);
  bad.beta = parse_braid("s1", 2);
  d.events = {bad};
  CHECK_THROWS_AS(braid_monodromy_presentation(d), BadBraid);
}
