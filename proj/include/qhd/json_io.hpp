#pragma once

#include <json.hpp>

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhd/certificate.hpp"
#include "qhd/presentation.hpp"

namespace qhd::io {

using Rational = boost::multiprecision::cpp_rational;

// Parsed file contents; throws std::runtime_error when the file cannot be
// read or is not valid JSON.
nlohmann::json load_json(const std::string& path);

// Accepts an integer or a "p/q" / "p" string.
Rational parse_rational(const nlohmann::json& v);

// {"gens": [...], "relators": ["word", ...]} with words in the word grammar.
fpgroup::Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const fpgroup::Presentation& p);

// A bundle of named presentations, generator maps between them and relator
// certificates, as written by the cert generator tool.
struct CertificateFile {
  std::map<std::string, fpgroup::Presentation> presentations;
  std::map<std::string, std::vector<std::string>> maps;
  struct Entry {
    std::string presentation;
    fpgroup::Word target;
    fpgroup::RelatorCertificate cert;
    std::string note;
  };
  std::vector<Entry> entries;
};

CertificateFile load_certificates(const std::string& path);

}  // namespace qhd::io
