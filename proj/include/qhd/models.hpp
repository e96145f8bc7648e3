#pragma once

#include <string>
#include <vector>

#include "qhd/blowup.hpp"

namespace qhd {

// A blow-up script instantiated at a particular p: the model after all
// blow-ups plus the list of components of the divisor at infinity.
struct ModelFixture {
  BlowupModel model;
  std::vector<std::string> kept;
};

// Executes the JSON blow-up script at the given parameter. The script format
// supports plane curves ("curves": [[label, degree]...]), single centres
// ("steps": {"new": label, "at": [[label, mult]...]}) and towers of
// infinitely near points ({"tower": {"prefix", "count", "base", "then"}}),
// where tower step 1 blows up "base" and step j > 1 blows up "then" plus the
// previous exceptional curve. Counts may be "p"-linear expressions such as
// "p+1". Kept entries are labels or series ({"series": {"prefix", "count"}}).
ModelFixture load_model_fixture(const std::string& path, long p);

// The three divisor models at infinity, read from data_dir/models/*.json.
ModelFixture b23_model(long p, const std::string& data_dir = "data");
ModelFixture c23_model(long p, const std::string& data_dir = "data");
ModelFixture c33_model(long p, const std::string& data_dir = "data");

}  // namespace qhd
