#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skewlines/geometry.hpp"

namespace skewlines {

/// Independent generator per (seed, stream); streams are start or trial
/// indices, so results never depend on evaluation order.
std::mt19937_64 seeded_generator(std::uint64_t seed, std::uint64_t stream);

/// Uniform in [lo, hi) from the top 53 bits of one draw.
double uniform(std::mt19937_64& rng, double lo, double hi);

Vector3 random_unit_vector(std::mt19937_64& rng);

/// n directions, uniform on the sphere, redrawn until every pair of lines
/// makes an angle of at least `min_angle` radians.
std::vector<Vector3> random_directions(int n, std::mt19937_64& rng, double min_angle);

/// Random line through a point with coordinates uniform in [-extent, extent].
DirectedLine random_line(std::mt19937_64& rng, double extent);

}  // namespace skewlines
