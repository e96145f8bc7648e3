#include <doctest.h>

#include <set>

#include "qhd/arrangement.hpp"
#include "qhd/certificate.hpp"
#include "qhd/coset.hpp"

using namespace qhd;
using namespace qhd::zvk;
using fpgroup::Word;

namespace {

LineArrangement seven() { return load_arrangement("data/arrangements/seven_line.json"); }

bool provable(const fpgroup::Presentation& p, const Word& w) {
  auto cert = fpgroup::search_relator_certificate(p, w);
  return cert && fpgroup::check_relator_certificate(p, w, *cert);
}

bool same_in_group(const fpgroup::Presentation& p, const Word& u, const Word& v) {
  return provable(p, fpgroup::concat(u, fpgroup::inverse(v)));
}

Word comm(const Word& u, const Word& v) {
  using fpgroup::concat;
  return concat(concat(u, v), concat(fpgroup::inverse(u), fpgroup::inverse(v)));
}

}  // namespace

TEST_CASE("seven line arrangement loads from json") {
  auto arr = seven();
  REQUIRE(arr.lines.size() == 7);
  CHECK(arr.lines[0].label == "l1");
  CHECK(arr.lines[6].label == "a3");
  CHECK(arr.base_x == Rational(-1, 2));
  CHECK(arr.point_names.size() == 9);
  CHECK(arr.lines[0].a == 4);
  CHECK(arr.lines[0].b == -1);
  CHECK(arr.lines[0].c == 5);
}

TEST_CASE("sweep of the seven line arrangement emits the expected relators in order") {
  auto res = wiring_presentation(seven());
  CHECK(res.pres.gens ==
        std::vector<std::string>{"l1", "l2", "l3", "l4", "a1", "a2", "a3"});
  const char* expected[] = {
      "l3*a2*a3*l4*l2*a1*l1",
      "l2*a1*l1*a1^-1*l2^-1*l1^-1",
      "l2*a1*l1*a1*l1^-1*a1^-1*l2^-1*a1^-1",
      "a3*l4*l1*l4^-1*a3^-1*l1^-1",
      "a3*l4*l1*l4*l1^-1*l4^-1*a3^-1*l4^-1",
      "l3*a2*l1*a2^-1*l3^-1*l1^-1",
      "l3*a2*l1*a2*l1^-1*a2^-1*l3^-1*a2^-1",
      "a3*l2*a1*l2^-1*a3^-1*l2*a1^-1*l2^-1",
      "a2*a3*a2^-1*a3^-1",
      "a2*l4*l2*l4^-1*a2^-1*l2^-1",
      "a2*l4*l2*l4*l2^-1*l4^-1*a2^-1*l4^-1",
      "a2*a1*a2^-1*a1^-1",
      "l3*a3*l2*a3^-1*l3^-1*l2^-1",
      "l3*a3*l2*a3*l2^-1*a3^-1*l3^-1*a3^-1",
      "l3*a2*l4*a2^-1*a1*a2*l4^-1*a2^-1*l3^-1*a1^-1",
      "l3*a2*l4*a2^-1*a1*a2*l4*a2^-1*a1^-1*a2*l4^-1*a2^-1*l3^-1*a2*l4^-1*a2^-1",
  };
  REQUIRE(res.pres.relators.size() == 16);
  for (size_t i = 0; i < 16; ++i)
    CHECK(fpgroup::print_word(res.pres.relators[i], res.pres.gens) == expected[i]);
}

TEST_CASE("meridians of the nine singular points") {
  auto res = wiring_presentation(seven());
  const auto& gens = res.pres.gens;
  auto word_of = [&](const char* name) {
    return fpgroup::print_word(res.meridians.at(name), gens);
  };
  CHECK(res.meridians.entries.size() == 9);
  CHECK(word_of("e12") == "l2*a1*l1");
  CHECK(word_of("e13") == "l3*a2*l1");
  CHECK(word_of("e14") == "a3*l4*l1");
  CHECK(word_of("e23") == "l3*a3*l2");
  CHECK(word_of("e24") == "a2*l4*l2");
  CHECK(word_of("e34") == "l3*a2*l4*a2^-1*a1");
  CHECK(word_of("e1") == "a2*a3");
  CHECK(word_of("e2") == "a3*l2*a1*l2^-1");
  CHECK(word_of("e3") == "a2*a1");
  CHECK_THROWS_AS((void)res.meridians.at("e99"), UnknownLabel);
}

TEST_CASE("meridian words agree with their reference forms in the group") {
  auto res = wiring_presentation(seven());
  const auto& p = res.pres;
  auto W = [&](const char* s) { return fpgroup::parse_word(s, p.gens); };

  // five come out of the sweep verbatim
  CHECK(res.meridians.at("e12") == W("l2*a1*l1"));
  CHECK(res.meridians.at("e13") == W("l3*a2*l1"));
  CHECK(res.meridians.at("e23") == W("l3*a3*l2"));
  CHECK(res.meridians.at("e1") == W("a2*a3"));
  CHECK(res.meridians.at("e2") == W("a3*l2*a1*l2^-1"));

  // the rest differ by a rotation that the local relations absorb
  CHECK(same_in_group(p, res.meridians.at("e14"), W("l1*a3*l4")));
  CHECK(same_in_group(p, res.meridians.at("e24"), W("l2*a2*l4")));
  CHECK(same_in_group(p, res.meridians.at("e34"), W("a2*l4*a2^-1*a1*l3")));
  CHECK(same_in_group(p, res.meridians.at("e3"), W("a1*a2")));

  // products with a3 used for the infinitely near points
  Word q1 = fpgroup::concat(res.meridians.at("e23"), W("a3"));
  Word q2 = fpgroup::concat(res.meridians.at("e14"), W("a3"));
  CHECK(q1 == W("l3*a3*l2*a3"));
  CHECK(same_in_group(p, q1, W("l2*l3*a3^2")));
  CHECK(same_in_group(p, q2, W("l4*l1*a3^2")));
}

TEST_CASE("emitted relator pairs carry the whole local commutation") {
  auto res = wiring_presentation(seven());
  const auto& p = res.pres;
  auto W = [&](const char* s) { return fpgroup::parse_word(s, p.gens); };

  // each multiple point makes its full fibre product commute with every
  // strand through it; two commutators per triple point suffice
  struct Triple {
    const char* x;
    const char* y;
    const char* z;
  };
  const Triple triples[] = {
      {"l2", "a1", "l1"},          {"a3", "l4", "l1"}, {"l3", "a2", "l1"},
      {"a2", "l4", "l2"},          {"l3", "a3", "l2"}, {"l3", "a2*l4*a2^-1", "a1"},
  };
  std::set<Word> reference;
  for (const auto& t : triples) {
    Word e = fpgroup::concat(fpgroup::concat(W(t.x), W(t.y)), W(t.z));
    for (const char* s : {t.x, t.y, t.z}) {
      Word rel = comm(e, W(s));
      CHECK(provable(p, rel));
      reference.insert(fpgroup::cyclic_canonical(rel));
    }
  }
  for (const char* s : {"a2*a3*a2^-1*a3^-1", "a3*l2*a1*l2^-1*a3^-1*l2*a1^-1*l2^-1",
                        "a1*a2*a1^-1*a2^-1"}) {
    Word rel = W(s);
    CHECK(provable(p, rel));
    reference.insert(fpgroup::cyclic_canonical(rel));
  }

  // and conversely, the sweep never emits anything outside that list
  reference.insert(fpgroup::cyclic_canonical(W("l3*a2*a3*l4*l2*a1*l1")));
  for (const auto& r : p.relators) CHECK(reference.count(fpgroup::cyclic_canonical(r)));
}

TEST_CASE("derived meridians substitute earlier entries") {
  auto res = wiring_presentation(seven());
  const auto& gens = res.pres.gens;
  auto mm = derived_meridians(res.meridians, {{"e3_0", "a2"},
                                              {"e3_1", "a1*a2"},
                                              {"e3_2", "a1^2*a2"},
                                              {"q1", "e23*a3"},
                                              {"q2", "e14*a3"},
                                              {"t", "q1*q2^-1"}});
  auto word_of = [&](const char* name) { return fpgroup::print_word(mm.at(name), gens); };
  CHECK(word_of("e3_0") == "a2");
  CHECK(word_of("e3_1") == "a1*a2");
  CHECK(word_of("e3_2") == "a1^2*a2");
  CHECK(word_of("q1") == "l3*a3*l2*a3");
  CHECK(word_of("q2") == "a3*l4*l1*a3");
  CHECK(word_of("t") == "l3*a3*l2*l1^-1*l4^-1*a3^-1");

  CHECK_THROWS_AS(derived_meridians(res.meridians, {{"bad", "e23*zz"}}), UnknownLabel);
  CHECK_THROWS_AS(derived_meridians(res.meridians, {{"e12", "a2"}}), std::invalid_argument);
  CHECK_THROWS_AS(derived_meridians(res.meridians, {{"a1", "a2"}}), std::invalid_argument);
}

TEST_CASE("killing the exceptional meridians leaves the finite smoothing groups") {
  auto res = wiring_presentation(seven());
  for (int p = 0; p <= 3; ++p) {
    auto mm = derived_meridians(
        res.meridians, {{"e3_top", "a1^" + std::to_string(p + 1) + "*a2"},
                        {"q1", "e23*a3"},
                        {"q2", "e14*a3"}});
    std::vector<Word> kill = {mm.at("e13"), mm.at("e24"),    mm.at("e34"),
                              mm.at("q1"),  mm.at("e3_top"), mm.at("q2")};
    auto q = fpgroup::quotient_by_normal_closure(res.pres, kill);
    auto order = fpgroup::group_order(q, 200000);
    REQUIRE(order);
    CHECK(*order == size_t(4 * (p + 2) * (p + 3)));
    qhd::Int prod = 1;
    for (const auto& d : fpgroup::abelian_invariants(q)) {
      CHECK(d != 0);
      prod *= d;
    }
    CHECK(prod == 4 * (p + 3));
  }
}

TEST_CASE("degenerate arrangements are rejected") {
  auto mk = [](std::vector<Line> lines, Rational base) {
    LineArrangement arr;
    arr.lines = std::move(lines);
    arr.base_x = base;
    return arr;
  };
  // parallel pair
  CHECK_THROWS_AS(
      wiring_presentation(mk({{1, 1, 0, "u"}, {1, 1, 3, "v"}, {0, 1, 0, "w"}}, 5)),
      DegenerateArrangement);
  // coincident pair
  CHECK_THROWS_AS(wiring_presentation(mk({{1, 1, 0, "u"}, {2, 2, 0, "v"}}, 5)),
                  DegenerateArrangement);
  // vertical line
  CHECK_THROWS_AS(wiring_presentation(mk({{1, 0, 0, "u"}, {1, 1, 3, "v"}}, 5)),
                  DegenerateArrangement);
  // two crossings on one vertical fibre
  CHECK_THROWS_AS(wiring_presentation(mk({{1, -1, 0, "u"},
                                          {1, 1, 0, "v"},
                                          {2, -1, 2, "w"},
                                          {2, 1, -2, "x"}},
                                         5)),
                  DegenerateArrangement);
  // four concurrent lines
  CHECK_THROWS_AS(wiring_presentation(mk({{1, -1, 0, "u"},
                                          {2, -1, 0, "v"},
                                          {3, -1, 0, "w"},
                                          {1, 1, 0, "x"}},
                                         1)),
                  DegenerateArrangement);
  // base fibre through a crossing
  CHECK_THROWS_AS(wiring_presentation(mk({{1, -1, 0, "u"}, {1, 1, 0, "v"}}, 0)),
                  DegenerateArrangement);
  // point name that matches no crossing
  LineArrangement named = mk({{1, -1, 0, "u"}, {1, 1, 0, "v"}}, 2);
  named.point_names = {{"q", {"u", "w"}}};
  CHECK_THROWS_AS(wiring_presentation(named), UnknownLabel);
}

TEST_CASE("a single crossing gives the projective two line complement") {
  LineArrangement arr;
  arr.lines = {{1, -1, 0, "u"}, {1, 1, 0, "v"}};
  arr.base_x = -1;
  auto res = wiring_presentation(arr);
  REQUIRE(res.pres.relators.size() == 2);
  CHECK(res.pres.relators[0] == Word{1, 2});
  CHECK(res.pres.relators[1] == Word{1, 2, -1, -2});
  CHECK(res.meridians.at("p1") == Word{1, 2});
  auto inv = fpgroup::abelian_invariants(res.pres);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == 0);
}
