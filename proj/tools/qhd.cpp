// Command line front end. Every subcommand prints one JSON report on stdout
// (sorted keys, so identical inputs give identical bytes) or a flat key/value
// table with --pretty. Exit codes: 0 ok, 1 bad usage or unreadable input,
// 2 a mathematical check failed.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qhd/arrangement.hpp"
#include "qhd/braid_monodromy.hpp"
#include "qhd/coset.hpp"
#include "qhd/json_io.hpp"
#include "qhd/models.hpp"
#include "qhd/plumbing.hpp"
#include "qhd/polynomial.hpp"
#include "qhd/presentation.hpp"
#include "qhd/verify.hpp"

using nlohmann::json;
using qhd::verify::Check;
using qhd::verify::Report;

namespace {

json int_json(const qhd::Int& v) { return v.convert_to<long long>(); }

json factors_json(const std::vector<qhd::Int>& v) {
  json a = json::array();
  for (const qhd::Int& x : v) a.push_back(int_json(x));
  return a;
}

std::string resolve(const std::string& data_dir, const std::string& path) {
  if (std::filesystem::exists(path)) return path;
  return data_dir + "/" + path;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

json graph_json(const qhd::PlumbingGraph& g) {
  json verts = json::array();
  for (const auto& v : g.vertices)
    verts.push_back({{"label", v.label}, {"weight", int_json(v.weight)}});
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : g.edges) {
    std::string x = g.vertices[a].label, y = g.vertices[b].label;
    if (y < x) std::swap(x, y);
    edges.insert({x, y});
  }
  json es = json::array();
  for (const auto& [x, y] : edges) es.push_back(json::array({x, y}));
  return json{{"vertices", verts}, {"edges", es}};
}

qhd::PlumbingGraph family_graph(const std::string& family, long p) {
  if (family == "b23") return qhd::b23_graph(p);
  if (family == "c23") return qhd::c23_graph(p);
  return qhd::c33_graph(p);
}

qhd::ModelFixture family_model(const std::string& family, long p,
                               const std::string& data_dir) {
  if (family == "b23") return qhd::b23_model(p, data_dir);
  if (family == "c23") return qhd::c23_model(p, data_dir);
  return qhd::c33_model(p, data_dir);
}

// checks whose names start with one of the given prefixes
std::vector<Check> named_slice(const std::vector<Check>& all,
                               const std::vector<std::string>& prefixes) {
  std::vector<Check> out;
  for (const Check& c : all)
    for (const std::string& pre : prefixes)
      if (c.name.rfind(pre, 0) == 0) {
        out.push_back(c);
        break;
      }
  return out;
}

Report verify_b23(int p, const std::string& data_dir) {
  std::vector<Check> checks = qhd::verify::seven_line_pipeline(p, data_dir);
  qhd::verify::append(checks, qhd::verify::two_generator_equivalence(p, data_dir));
  std::vector<Check> iso = qhd::verify::matrix_presentation_match(p + 2);
  bool matrix_iso = qhd::verify::all_ok(iso);
  qhd::verify::append(checks, std::move(iso));

  qhd::fpgroup::Presentation fam = qhd::fpgroup::b23_presentation(p);
  auto order = qhd::fpgroup::group_order(fam, 100000);
  Report r;
  r.command = "verify";
  r.results["order"] = order ? json((long long)*order) : json(nullptr);
  r.results["ab"] = factors_json(qhd::fpgroup::abelian_invariants(fam));
  r.results["matrix_iso"] = matrix_iso;
  r.results["checks"] = qhd::verify::checks_json(checks);
  r.ok = qhd::verify::all_ok(checks);
  return r;
}

Report verify_c23(int p, const std::string& data_dir) {
  std::vector<Check> checks = qhd::verify::pencil_equivalence(data_dir);
  bool certs = qhd::verify::all_ok(checks);
  qhd::verify::append(checks, named_slice(qhd::verify::surface_models(p, data_dir),
                                          {"conic pencil"}));
  qhd::ModelFixture fx = qhd::c23_model(p, data_dir);
  std::vector<qhd::Int> h1 = qhd::complement_h1(fx.model, fx.kept);

  Report r;
  r.command = "verify";
  r.results["h1"] = factors_json(h1);
  r.results["h1_cyclic"] = h1.size() == 1 && h1[0] != 0;
  r.results["ab"] = json::array({0, 0});
  r.results["certificates_ok"] = certs;
  r.results["checks"] = qhd::verify::checks_json(checks);
  r.ok = qhd::verify::all_ok(checks);
  return r;
}

Report verify_c33(int p, const std::string& data_dir) {
  std::vector<Check> checks =
      named_slice(qhd::verify::surface_models(p, data_dir), {"cubic pair"});
  qhd::verify::append(checks,
                      named_slice(qhd::verify::family_discriminants(p), {"c33"}));
  qhd::ModelFixture fx = qhd::c33_model(p, data_dir);
  std::vector<qhd::Int> h1 = qhd::complement_h1(fx.model, fx.kept);

  Report r;
  r.command = "verify";
  r.results["h1"] = factors_json(h1);
  r.results["h1_cyclic"] = h1.size() == 1 && h1[0] != 0;
  r.results["discriminant"] = int_json(qhd::discriminant_group(qhd::c33_graph(p)).order);
  r.results["checks"] = qhd::verify::checks_json(checks);
  r.ok = qhd::verify::all_ok(checks);
  return r;
}

Report verify_matgroup(long m) {
  std::vector<Check> checks = qhd::verify::matrix_group_structure(m);
  qhd::verify::append(checks, qhd::verify::invariant_polynomials(m));
  qhd::verify::append(checks, qhd::verify::abelianization_agreement(m));
  Report r;
  r.command = "verify";
  r.results = qhd::verify::matgroup_report(m);
  r.results["checks"] = qhd::verify::checks_json(checks);
  r.ok = qhd::verify::all_ok(checks);
  return r;
}

Report verify_all(int max_p, long max_m, const std::string& data_dir) {
  std::vector<Check> checks;
  for (int p = 0; p <= max_p; ++p) {
    qhd::verify::append(checks, qhd::verify::seven_line_pipeline(p, data_dir));
    qhd::verify::append(checks, qhd::verify::two_generator_equivalence(p, data_dir));
    qhd::verify::append(checks, qhd::verify::family_discriminants(p));
    qhd::verify::append(checks, qhd::verify::surface_models(p, data_dir));
    qhd::verify::append(checks, qhd::verify::lagrange_consistency(p));
  }
  for (long m = 2; m <= max_m; ++m) {
    qhd::verify::append(checks, qhd::verify::matrix_group_structure(m));
    qhd::verify::append(checks, qhd::verify::matrix_presentation_match(m));
    qhd::verify::append(checks, qhd::verify::invariant_polynomials(m));
    qhd::verify::append(checks, qhd::verify::seifert_central_weight(m));
    qhd::verify::append(checks, qhd::verify::abelianization_agreement(m));
  }
  qhd::verify::append(checks, qhd::verify::pencil_equivalence(data_dir));
  qhd::verify::append(checks, qhd::verify::plane_sextic());
  qhd::verify::append(checks, qhd::verify::braid_action_properties());
  qhd::verify::append(checks, qhd::verify::continued_fraction_roundtrip(500));

  json failures = json::array();
  for (const Check& c : checks)
    if (!c.ok)
      failures.push_back({{"name", c.name}, {"got", c.got}, {"want", c.want}});
  Report r;
  r.command = "verify";
  r.results["checks_run"] = checks.size();
  r.results["failures"] = failures;
  r.ok = qhd::verify::all_ok(checks);
  return r;
}

int emit(Report r, bool pretty, bool timing, double seconds) {
  if (timing) r.seconds = seconds;
  json j = qhd::verify::report_json(r);
  if (pretty)
    std::cout << qhd::verify::render_pretty(j);
  else
    std::cout << j.dump() << "\n";
  return r.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checks for the plane curve complement and quotient surface computations"};
  app.require_subcommand(1);

  std::string data_dir = "data";
  bool pretty = false, timing = false;
  app.add_option("--data", data_dir, "directory holding the bundled fixtures")
      ->envname("QHD_DATA")
      ->capture_default_str();
  app.add_flag("--pretty", pretty, "flat key/value table instead of JSON");
  app.add_flag("--timing", timing, "attach elapsed wall time to the report");

  // group
  CLI::App* group = app.add_subcommand("group", "orders and abelianizations of presented groups");
  std::string group_family = "b23";
  int group_p = 0;
  std::string group_file;
  std::vector<std::string> group_subgens;
  size_t group_max = 200000;
  long long group_expect = -1;
  group->add_option("family", group_family, "presentation family")
      ->check(CLI::IsMember({"b23"}));
  group->add_option("--p", group_p, "family parameter")->check(CLI::Range(0, 64));
  group->add_option("--file", group_file, "presentation JSON instead of a family");
  group->add_option("--subgroup", group_subgens, "subgroup generator word (repeatable)");
  group->add_option("--max-cosets", group_max, "coset enumeration bound");
  group->add_option("--expect-order", group_expect, "fail unless the order equals this");

  // zvk
  CLI::App* zvkc = app.add_subcommand("zvk", "complement presentations from sweep fixtures");
  std::string zvk_arr, zvk_braid;
  CLI::Option* oarr = zvkc->add_option("--arrangement", zvk_arr, "line arrangement fixture");
  CLI::Option* obraid = zvkc->add_option("--braid", zvk_braid, "braid monodromy fixture");
  oarr->excludes(obraid);

  // matgroup
  CLI::App* mat = app.add_subcommand("matgroup", "monomial matrix group invariants");
  long mat_m = 2;
  mat->add_option("--m", mat_m, "family parameter")->required()->check(CLI::Range(2L, 64L));

  // graph
  CLI::App* graph = app.add_subcommand("graph", "resolution graphs and discriminants");
  std::string graph_family;
  long graph_p = 0, graph_n = 2, graph_q = 1, graph_m = 2;
  long long graph_d = 2;
  bool graph_disc = false;
  graph->add_option("family", graph_family, "graph family")
      ->required()
      ->check(CLI::IsMember({"b23", "c23", "c33", "gnq", "seifert"}));
  graph->add_option("--p", graph_p, "family parameter")->check(CLI::Range(0L, 64L));
  graph->add_option("--n", graph_n, "cyclic order (gnq)");
  graph->add_option("--q", graph_q, "cyclic weight (gnq)");
  graph->add_option("--m", graph_m, "seifert parameter")->check(CLI::Range(2L, 64L));
  graph->add_option("--d", graph_d, "seifert central weight");
  graph->add_flag("--discriminant", graph_disc, "include the discriminant group");

  // h1
  CLI::App* h1c = app.add_subcommand("h1", "first homology of the divisor complement");
  std::string h1_family;
  long h1_p = 0;
  h1c->add_option("--family", h1_family, "model family")
      ->required()
      ->check(CLI::IsMember({"b23", "c23", "c33"}));
  h1c->add_option("--p", h1_p, "family parameter")->check(CLI::Range(0L, 64L));

  // poly
  CLI::App* poly = app.add_subcommand("poly", "exact polynomial queries");
  std::string poly_expr, poly_vars, poly_weights, poly_eval;
  poly->add_option("--expr", poly_expr, "polynomial literal")->required();
  poly->add_option("--vars", poly_vars, "comma separated variable names")->required();
  poly->add_option("--weights", poly_weights, "comma separated variable weights");
  poly->add_option("--eval", poly_eval, "comma separated rational point");

  // hj
  CLI::App* hj = app.add_subcommand("hj", "continued fraction expansion of n/q");
  long long hj_n = 0, hj_q = 0;
  hj->add_option("n", hj_n, "numerator")->required();
  hj->add_option("q", hj_q, "denominator")->required();

  // verify
  CLI::App* ver = app.add_subcommand("verify", "run a family's check battery");
  std::string ver_target;
  int ver_p = 0, ver_max_p = 3;
  long ver_m = 2, ver_max_m = 5;
  ver->add_option("target", ver_target, "what to verify")
      ->required()
      ->check(CLI::IsMember({"b23", "c23", "c33", "matgroup", "all"}));
  ver->add_option("--p", ver_p, "family parameter")->check(CLI::Range(0, 64));
  ver->add_option("--m", ver_m, "matrix group parameter")->check(CLI::Range(2L, 64L));
  ver->add_option("--max-p", ver_max_p, "largest p for verify all")->check(CLI::Range(0, 16));
  ver->add_option("--max-m", ver_max_m, "largest m for verify all")->check(CLI::Range(2L, 16L));

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n";
    CLI::App* scope = &app;
    for (int i = 1; i < argc; ++i)
      for (CLI::App* sub : app.get_subcommands({}))
        if (sub->get_name() == argv[i]) scope = sub;
    std::cerr << scope->help();
    return 1;
  }

  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    if (*group) {
      qhd::fpgroup::Presentation pres =
          group_file.empty()
              ? qhd::fpgroup::b23_presentation(group_p)
              : qhd::io::presentation_from_json(
                    qhd::io::load_json(resolve(data_dir, group_file)));
      Report r;
      r.command = "group";
      r.inputs["family"] = group_file.empty() ? json(group_family) : json(nullptr);
      r.inputs["p"] = group_p;
      r.inputs["file"] = group_file.empty() ? json(nullptr) : json(group_file);
      r.inputs["max_cosets"] = group_max;
      auto order = qhd::fpgroup::group_order(pres, group_max);
      r.results["gens"] = pres.gens;
      r.results["order"] = order ? json((long long)*order) : json(nullptr);
      r.results["ab"] = factors_json(qhd::fpgroup::abelian_invariants(pres));
      if (!group_subgens.empty()) {
        std::vector<qhd::fpgroup::Word> sub;
        for (const std::string& s : group_subgens)
          sub.push_back(qhd::fpgroup::parse_word(s, pres.gens));
        qhd::fpgroup::CosetTable t = qhd::fpgroup::coset_enumerate(pres, sub, group_max);
        r.inputs["subgroup"] = group_subgens;
        r.results["index"] = t.complete ? json((long long)t.index) : json(nullptr);
      }
      if (group_expect >= 0) {
        r.results["expected_order"] = group_expect;
        r.ok = order.has_value() && (long long)*order == group_expect;
      }
      return emit(std::move(r), pretty, timing, elapsed());
    }

    if (*zvkc) {
      if (zvk_arr.empty() == zvk_braid.empty())
        throw CLI::ValidationError("zvk", "pass exactly one of --arrangement and --braid");
      qhd::zvk::WiringResult res =
          zvk_arr.empty()
              ? qhd::zvk::braid_monodromy_presentation(
                    qhd::zvk::load_braid_monodromy(resolve(data_dir, zvk_braid)))
              : qhd::zvk::wiring_presentation(
                    qhd::zvk::load_arrangement(resolve(data_dir, zvk_arr)));
      Report r;
      r.command = "zvk";
      r.inputs = {{"arrangement", zvk_arr.empty() ? json(nullptr) : json(zvk_arr)},
                  {"braid", zvk_braid.empty() ? json(nullptr) : json(zvk_braid)}};
      r.results = qhd::io::presentation_to_json(res.pres);
      json mer;
      for (const auto& [name, w] : res.meridians.entries)
        mer[name] = qhd::fpgroup::print_word(w, res.pres.gens);
      r.results["meridians"] = mer;
      return emit(std::move(r), pretty, timing, elapsed());
    }

    if (*mat) {
      Report r;
      r.command = "matgroup";
      r.inputs = {{"m", mat_m}};
      r.results = qhd::verify::matgroup_report(mat_m);
      return emit(std::move(r), pretty, timing, elapsed());
    }

    if (*graph) {
      qhd::PlumbingGraph g;
      Report r;
      r.command = "graph";
      r.inputs = {{"family", graph_family}};
      if (graph_family == "gnq") {
        g = qhd::gnq_graph(graph_n, graph_q);
        r.inputs["n"] = graph_n;
        r.inputs["q"] = graph_q;
      } else if (graph_family == "seifert") {
        g = qhd::b23_seifert_graph(graph_m, qhd::Int(graph_d));
        r.inputs["m"] = graph_m;
        r.inputs["d"] = graph_d;
      } else {
        g = family_graph(graph_family, graph_p);
        r.inputs["p"] = graph_p;
      }
      r.results = graph_json(g);
      if (graph_disc) {
        qhd::DiscriminantGroup d = qhd::discriminant_group(g);
        r.results["discriminant"] = {{"negative_definite", d.negative_definite},
                                     {"order", int_json(d.order)},
                                     {"invariant_factors", factors_json(d.invariant_factors)}};
      }
      return emit(std::move(r), pretty, timing, elapsed());
    }

    if (*h1c) {
      qhd::ModelFixture fx = family_model(h1_family, h1_p, data_dir);
      std::vector<qhd::Int> h1 = qhd::complement_h1(fx.model, fx.kept);
      qhd::Int torsion = 1;
      bool finite = true;
      for (const qhd::Int& f : h1) {
        if (f == 0) finite = false;
        else torsion *= f;
      }
      Report r;
      r.command = "h1";
      r.inputs = {{"family", h1_family}, {"p", h1_p}};
      r.results = {{"h1", factors_json(h1)},
                   {"cyclic", h1.size() == 1 && finite},
                   {"torsion", finite ? int_json(torsion) : json(nullptr)}};
      return emit(std::move(r), pretty, timing, elapsed());
    }

    if (*poly) {
      std::vector<std::string> vars = split_csv(poly_vars);
      qhd::polyalg::SparsePolynomial f = qhd::polyalg::parse_polynomial(poly_expr, vars);
      Report r;
      r.command = "poly";
      r.inputs = {{"expr", poly_expr}, {"vars", vars}};
      r.results["degree"] = f.total_degree();
      r.results["terms"] = f.terms.size();
      if (!poly_weights.empty()) {
        std::vector<long> w;
        for (const std::string& s : split_csv(poly_weights)) w.push_back(std::stol(s));
        if (w.size() != vars.size())
          throw CLI::ValidationError("poly", "--weights needs one entry per variable");
        r.inputs["weights"] = w;
        bool hom = qhd::polyalg::is_weighted_homogeneous(f, w);
        r.results["weighted_homogeneous"] = hom;
        r.results["weighted_degree"] =
            hom && !f.is_zero() ? json(qhd::polyalg::weighted_degree(f, w)) : json(nullptr);
      }
      if (!poly_eval.empty()) {
        std::vector<qhd::polyalg::Rational> pt;
        for (const std::string& s : split_csv(poly_eval))
          pt.push_back(qhd::io::parse_rational(json(s)));
        if (pt.size() != vars.size())
          throw CLI::ValidationError("poly", "--eval needs one entry per variable");
        r.inputs["eval"] = split_csv(poly_eval);
        r.results["value"] = qhd::polyalg::evaluate(f, pt).str();
      }
      return emit(std::move(r), pretty, timing, elapsed());
    }

    if (*hj) {
      std::vector<qhd::Int> seq = qhd::hj_expand(hj_n, hj_q);
      Report r;
      r.command = "hj";
      r.inputs = {{"n", hj_n}, {"q", hj_q}};
      r.results = {{"seq", factors_json(seq)}};
      r.ok = qhd::hj_value(seq) == std::pair<qhd::Int, qhd::Int>{hj_n, hj_q};
      return emit(std::move(r), pretty, timing, elapsed());
    }

    if (*ver) {
      Report r;
      if (ver_target == "b23") {
        r = verify_b23(ver_p, data_dir);
        r.inputs = {{"target", ver_target}, {"p", ver_p}};
      } else if (ver_target == "c23") {
        r = verify_c23(ver_p, data_dir);
        r.inputs = {{"target", ver_target}, {"p", ver_p}};
      } else if (ver_target == "c33") {
        r = verify_c33(ver_p, data_dir);
        r.inputs = {{"target", ver_target}, {"p", ver_p}};
      } else if (ver_target == "matgroup") {
        r = verify_matgroup(ver_m);
        r.inputs = {{"target", ver_target}, {"m", ver_m}};
      } else {
        r = verify_all(ver_max_p, ver_max_m, data_dir);
        r.inputs = {{"target", ver_target}, {"max_p", ver_max_p}, {"max_m", ver_max_m}};
      }
      return emit(std::move(r), pretty, timing, elapsed());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n\n";
    std::vector<CLI::App*> parsed = app.get_subcommands();
    std::cerr << (parsed.empty() ? &app : parsed.front())->help();
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
