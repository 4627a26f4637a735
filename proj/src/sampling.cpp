#include "skewlines/sampling.hpp"

#include <cmath>
#include <numbers>

namespace skewlines {

std::mt19937_64 seeded_generator(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vector3 random_unit_vector(std::mt19937_64& rng) {
  const double z = uniform(rng, -1.0, 1.0);
  const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vector3(r * std::cos(phi), r * std::sin(phi), z);
}

std::vector<Vector3> random_directions(int n, std::mt19937_64& rng, double min_angle) {
  const double min_sine = std::sin(min_angle);
  std::vector<Vector3> out;
  while (static_cast<int>(out.size()) < n) {
    const Vector3 v = random_unit_vector(rng);
    bool separated = true;
    for (const Vector3& u : out) separated = separated && u.cross(v).norm() >= min_sine;
    if (separated) out.push_back(v);
  }
  return out;
}

DirectedLine random_line(std::mt19937_64& rng, double extent) {
  const Vector3 p(uniform(rng, -extent, extent), uniform(rng, -extent, extent),
                  uniform(rng, -extent, extent));
  return DirectedLine::through(p, random_unit_vector(rng));
}

}  // namespace skewlines
