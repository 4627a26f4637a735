#include "skewlines/configuration.hpp"

#include "skewlines/error.hpp"

namespace skewlines {

void require_pairwise_skew(const LineConfiguration& config) {
  const int n = config.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const PairClass c = classify_pair(config.lines[i], config.lines[j]);
      if (c != PairClass::Skew) {
        throw Error(ErrorKind::CoplanarPair,
                    "lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " are " + to_string(c),
                    std::pair{i + 1, j + 1});
      }
    }
  }
}

}  // namespace skewlines
