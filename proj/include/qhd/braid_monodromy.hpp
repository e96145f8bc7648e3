#pragma once

#include <string>
#include <vector>

#include "qhd/arrangement.hpp"
#include "qhd/braid.hpp"

namespace qhd::zvk {

// One singular vertical value of a horizontal curve, described by the braid
// tau that transports the base fibre basis to a fibre next to the event and
// the local braid beta around it. A vertical event is a fibre contained in
// the curve: instead of beta it carries the clusters of strands meeting that
// fibre at a common point, left to right.
struct VerticalCluster {
  std::vector<int> strands;  // 1-based positions in the fibre
  std::string label;         // meridian name for the cluster point, optional
};

struct MonodromyEvent {
  std::string value;  // position of the event, informational
  BraidWord tau;
  BraidWord beta;
  bool vertical = false;
  std::vector<VerticalCluster> clusters;
};

struct BraidMonodromyData {
  int strands = 0;
  std::vector<std::string> layout;  // puncture names, left to right
  std::string vertical_gen;         // generator for a fibre inside the curve
  std::vector<MonodromyEvent> events;
};

BraidMonodromyData load_braid_monodromy(const std::string& path);

// Zariski-van Kampen presentation: one generator per puncture plus one for
// the vertical fibre when present. Every event contributes the relations
// x = beta(x) written in the transported basis; a vertical event makes the
// product of the fibre generator with each cluster commute with its factors.
// Relators are freely reduced and deduplicated up to rotation and inversion.
WiringResult braid_monodromy_presentation(const BraidMonodromyData& data);

}  // namespace qhd::zvk
