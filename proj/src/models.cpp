#include "qhd/models.hpp"

#include <fstream>

#include <json.hpp>

namespace qhd {

namespace {

using nlohmann::json;

// "6", "p", "p+2": the only count shapes the scripts need
long eval_count(const json& v, long p) {
  if (v.is_number_integer()) return v.get<long>();
  std::string s = v.get<std::string>();
  if (s == "p") return p;
  if (s.rfind("p+", 0) == 0) return p + std::stol(s.substr(2));
  return std::stol(s);
}

std::vector<std::pair<std::string, long>> parse_centre(const json& at) {
  std::vector<std::pair<std::string, long>> out;
  for (const auto& e : at) out.emplace_back(e.at(0).get<std::string>(), e.at(1).get<long>());
  return out;
}

}  // namespace

ModelFixture load_model_fixture(const std::string& path, long p) {
  if (p < 0) throw BadInput("model fixture: need p >= 0");
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open model fixture " + path);
  json doc = json::parse(in);

  ModelFixture fx;
  for (const auto& c : doc.at("curves"))
    fx.model.add_curve(c.at(0).get<std::string>(), c.at(1).get<long>());

  for (const auto& step : doc.at("steps")) {
    if (step.contains("tower")) {
      const json& t = step.at("tower");
      std::string prefix = t.at("prefix").get<std::string>();
      long count = eval_count(t.at("count"), p);
      auto base = parse_centre(t.at("base"));
      auto then = parse_centre(t.at("then"));
      for (long j = 1; j <= count; ++j) {
        auto at = (j == 1) ? base : then;
        if (j > 1) at.emplace_back(prefix + std::to_string(j - 1), 1);
        fx.model.blow_up(at, prefix + std::to_string(j));
      }
    } else {
      fx.model.blow_up(parse_centre(step.at("at")),
                       step.at("new").get<std::string>());
    }
  }

  for (const auto& k : doc.at("kept")) {
    if (k.is_string()) {
      fx.kept.push_back(k.get<std::string>());
    } else {
      const json& s = k.at("series");
      std::string prefix = s.at("prefix").get<std::string>();
      long count = eval_count(s.at("count"), p);
      for (long j = 1; j <= count; ++j)
        fx.kept.push_back(prefix + std::to_string(j));
    }
  }
  for (const auto& label : fx.kept)
    if (!fx.model.has_curve(label))
      throw UnknownCurve("kept list names missing curve " + label);
  return fx;
}

ModelFixture b23_model(long p, const std::string& data_dir) {
  return load_model_fixture(data_dir + "/models/b23.json", p);
}

ModelFixture c23_model(long p, const std::string& data_dir) {
  return load_model_fixture(data_dir + "/models/c23.json", p);
}

ModelFixture c33_model(long p, const std::string& data_dir) {
  return load_model_fixture(data_dir + "/models/c33.json", p);
}

}  // namespace qhd
