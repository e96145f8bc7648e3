#include "qhd/json_io.hpp"

#include <fstream>

namespace qhd::io {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

Rational parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
      boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw std::runtime_error("zero denominator");
      return Rational(num, den);
    } catch (const std::exception&) {
      throw std::runtime_error("bad rational literal: " + s);
    }
  }
  throw std::runtime_error("expected integer or \"p/q\" string");
}

fpgroup::Presentation presentation_from_json(const nlohmann::json& j) {
  fpgroup::Presentation p;
  p.gens = j.at("gens").get<std::vector<std::string>>();
  for (const auto& r : j.at("relators")) {
    auto w = fpgroup::parse_word(r.get<std::string>(), p.gens);
    w = fpgroup::free_reduce(w);
    if (!w.empty()) p.relators.push_back(w);
  }
  return p;
}

nlohmann::json presentation_to_json(const fpgroup::Presentation& p) {
  nlohmann::json j;
  j["gens"] = p.gens;
  auto rels = nlohmann::json::array();
  for (const auto& r : p.relators) rels.push_back(fpgroup::print_word(r, p.gens));
  j["relators"] = rels;
  return j;
}

CertificateFile load_certificates(const std::string& path) {
  auto j = load_json(path);
  CertificateFile file;
  for (const auto& [name, pres] : j.at("presentations").items())
    file.presentations[name] = presentation_from_json(pres);
  if (j.contains("maps"))
    for (const auto& [name, images] : j.at("maps").items())
      file.maps[name] = images.get<std::vector<std::string>>();
  for (const auto& c : j.at("certificates")) {
    CertificateFile::Entry entry;
    entry.presentation = c.at("presentation").get<std::string>();
    auto it = file.presentations.find(entry.presentation);
    if (it == file.presentations.end())
      throw std::runtime_error(path + ": certificate for unknown presentation \"" +
                               entry.presentation + "\"");
    const auto& gens = it->second.gens;
    entry.target = fpgroup::parse_word(c.at("target").get<std::string>(), gens);
    for (const auto& f : c.at("factors")) {
      fpgroup::RelatorCertificate::Factor factor;
      factor.relator = f.at("relator").get<size_t>();
      factor.sign = f.at("sign").get<int>();
      factor.conjugator = fpgroup::parse_word(f.at("conjugator").get<std::string>(), gens);
      entry.cert.factors.push_back(std::move(factor));
    }
    entry.note = c.value("note", "");
    file.entries.push_back(std::move(entry));
  }
  return file;
}

}  // namespace qhd::io
