#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhd/presentation.hpp"

namespace qhd::zvk {

using Rational = boost::multiprecision::cpp_rational;

struct DegenerateArrangement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownLabel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The affine real line a*x + b*y + c = 0. Vertical lines (b = 0) are
// rejected by the sweep.
struct Line {
  Rational a, b, c;
  std::string label;
};

// A projection-ready configuration: pairwise non-parallel lines, singular
// points at distinct x-coordinates, and a generic base fibre x = base_x.
// point_names optionally names a singular point (the meridian of its
// blow-up) by the set of lines through it.
struct LineArrangement {
  std::vector<Line> lines;
  Rational base_x = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> point_names;
};

// Named meridian words over the presentation generators.
struct MeridianMap {
  std::vector<std::string> gens;
  std::map<std::string, fpgroup::Word> entries;

  const fpgroup::Word& at(const std::string& name) const;
};

struct WiringResult {
  fpgroup::Presentation pres;
  MeridianMap meridians;
};

// Zariski-van Kampen presentation of the complement from a sweep of the real
// picture. Generators are the base-fibre meridians, one per line; the first
// relator is the full bottom-to-top product of the base fibre, followed by
// the local relations at each singular point, nearest to the base fibre
// first on each side. Each point also records its exceptional meridian (the
// bottom-to-top product of the current words through it).
WiringResult wiring_presentation(const LineArrangement& arr);

// Extends the map with entries defined by expressions in the word grammar
// over generator names and previously defined entries.
MeridianMap derived_meridians(
    MeridianMap mm, const std::vector<std::pair<std::string, std::string>>& defs);

LineArrangement load_arrangement(const std::string& path);

}  // namespace qhd::zvk
