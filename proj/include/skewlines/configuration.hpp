#pragma once

#include <string>
#include <vector>

#include "skewlines/geometry.hpp"

namespace skewlines {

/// An ordered family of directed lines meant to be pairwise at
/// `target_distance`.
struct LineConfiguration {
  std::vector<DirectedLine> lines;
  double target_distance = 1.0;
  std::string label;

  int size() const { return static_cast<int>(lines.size()); }
};

/// Throws CoplanarPair (with 1-based indices) on the first non-skew pair.
void require_pairwise_skew(const LineConfiguration& config);

}  // namespace skewlines
