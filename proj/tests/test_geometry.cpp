#include "doctest.h"
#include "oracles.hpp"
#include "skewlines/error.hpp"
#include "skewlines/geometry.hpp"
#include "skewlines/sampling.hpp"

using namespace skewlines;

namespace {

const DirectedLine kXAxis = normalize_line({0, 0, 0}, {1, 0, 0});
const DirectedLine kRaisedY = normalize_line({0, 0, 1}, {0, 1, 0});

bool close(const Vector3& a, const Vector3& b, double eps = 1e-12) {
  return (a - b).norm() <= eps;
}

// Random skew pair whose directions are not nearly parallel.
std::pair<DirectedLine, DirectedLine> random_skew_pair(std::mt19937_64& rng) {
  while (true) {
    DirectedLine a = random_line(rng, 2.0);
    DirectedLine b = random_line(rng, 2.0);
    if (a.direction().cross(b.direction()).norm() > 1e-2 &&
        classify_pair(a, b) == PairClass::Skew && std::abs(signed_gram_entry(a, b)) > 1e-6) {
      return {a, b};
    }
  }
}

}  // namespace

TEST_CASE("normalize_line canonicalizes the moment point") {
  const DirectedLine l = normalize_line({5, 0, 0}, {2, 0, 0});
  CHECK(close(l.direction(), {1, 0, 0}));
  CHECK(close(l.moment_point(), {0, 0, 0}));

  const DirectedLine m = normalize_line({0, 1, 1}, {0, 0, 3});
  CHECK(close(m.direction(), {0, 0, 1}));
  CHECK(close(m.moment_point(), {0, 1, 0}));

  std::mt19937_64 rng = seeded_generator(11, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Vector3 p(uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5));
    const Vector3 d = uniform(rng, 0.1, 3.0) * random_unit_vector(rng);
    const DirectedLine r = normalize_line(p, d);
    CHECK(std::abs(r.direction().norm() - 1.0) < 1e-12);
    CHECK(std::abs(r.moment_point().dot(r.direction())) < 1e-12);
    // passes through p with the original orientation
    CHECK((p - r.moment_point()).cross(r.direction()).norm() < 1e-12);
    CHECK(r.direction().dot(d) > 0.0);
  }
}

TEST_CASE("normalize_line rejects a zero direction") {
  try {
    normalize_line({1, 2, 3}, {0, 0, 1e-13});
    FAIL("expected ZeroDirection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDirection);
  }
}

TEST_CASE("classify_pair") {
  CHECK(classify_pair(kXAxis, kRaisedY) == PairClass::Skew);
  const DirectedLine l1 = normalize_line({0, 0.5, 0}, {1, 0, 0});
  const DirectedLine l2 = normalize_line({0, -0.5, 0}, {1, 0, 0});
  CHECK(classify_pair(l1, l2) == PairClass::Parallel);
  CHECK(classify_pair(kXAxis, normalize_line({0, 0, 0}, {0, 1, 0})) == PairClass::Intersecting);
  CHECK(classify_pair(l1, normalize_line({7, 0.5, 0}, {-2, 0, 0})) == PairClass::Identical);
}

TEST_CASE("distance") {
  CHECK(distance(kXAxis, kRaisedY) == doctest::Approx(1.0).epsilon(1e-15));
  const DirectedLine l1 = normalize_line({0, 0.5, 0}, {1, 0, 0});
  const DirectedLine l2 = normalize_line({0, -0.5, 0}, {1, 0, 0});
  CHECK(distance(l1, l2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(distance(kXAxis, normalize_line({3, 0, 0}, {1, 1, 1})) == 0.0);
}

TEST_CASE("distance agrees with nested golden-section minimization") {
  std::mt19937_64 rng = seeded_generator(12, 0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [a, b] = random_skew_pair(rng);
    const double brute = oracle::brute_force_distance(a.moment_point(), a.direction(),
                                                      b.moment_point(), b.direction());
    worst = std::max(worst, std::abs(distance(a, b) - brute));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("chirality signs and symmetry") {
  CHECK(chirality(kXAxis, kRaisedY) == Sign::Negative);
  CHECK(chirality(kXAxis, reflect_z(kRaisedY)) == Sign::Positive);
  CHECK(chirality(reverse(kXAxis), kRaisedY) == Sign::Positive);

  std::mt19937_64 rng = seeded_generator(13, 0);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto [a, b] = random_skew_pair(rng);
    const Sign s = chirality(a, b);
    REQUIRE(chirality(b, a) == s);
    REQUIRE(chirality(reverse(a), b) == -s);
    REQUIRE(chirality(a, reverse(b)) == -s);
    REQUIRE(chirality(reflect_z(a), reflect_z(b)) == -s);
  }
}

TEST_CASE("chirality refuses coplanar pairs") {
  const DirectedLine y_axis = normalize_line({0, 0, 0}, {0, 1, 0});
  try {
    chirality(kXAxis, y_axis);
    FAIL("expected CoplanarPair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CoplanarPair);
  }
  CHECK_THROWS_AS(chirality(kXAxis, normalize_line({0, 1, 0}, {1, 0, 0})), Error);
}

TEST_CASE("reverse and reflect_z") {
  const DirectedLine r = reverse(kXAxis);
  CHECK(close(r.direction(), {-1, 0, 0}));
  CHECK(close(r.moment_point(), {0, 0, 0}));
  CHECK(close(plucker(reverse(kRaisedY)).q, -plucker(kRaisedY).q));

  const DirectedLine fx = reflect_z(kXAxis);
  CHECK(close(fx.direction(), kXAxis.direction()));
  CHECK(close(fx.moment_point(), kXAxis.moment_point()));
  const DirectedLine fy = reflect_z(kRaisedY);
  CHECK(close(fy.direction(), {0, 1, 0}));
  CHECK(close(fy.moment_point(), {0, 0, -1}));
}

TEST_CASE("distance is invariant under reverse, reflection and rigid motions") {
  std::mt19937_64 rng = seeded_generator(14, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto [a, b] = random_skew_pair(rng);
    const double d = distance(a, b);
    const Matrix3 rot = oracle::random_rotation(rng);
    const Vector3 shift(uniform(rng, -10, 10), uniform(rng, -10, 10), uniform(rng, -10, 10));
    CHECK(std::abs(distance(reverse(a), b) - d) < 1e-10);
    CHECK(std::abs(distance(reflect_z(a), reflect_z(b)) - d) < 1e-10);
    CHECK(std::abs(distance(rigid_motion(a, rot, shift), rigid_motion(b, rot, shift)) - d) < 1e-10);
    CHECK(chirality(rigid_motion(a, rot, shift), rigid_motion(b, rot, shift)) == chirality(a, b));
  }
}

TEST_CASE("plucker coordinates") {
  const PluckerLine px = plucker(kXAxis);
  CHECK(close(px.q, {0, 0, 0}));
  CHECK(close(px.v, {1, 0, 0}));
  const PluckerLine py = plucker(kRaisedY);
  CHECK(close(py.q, {-1, 0, 0}));
  CHECK(close(py.v, {0, 1, 0}));

  std::mt19937_64 rng = seeded_generator(15, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const PluckerLine p = plucker(random_line(rng, 5.0));
    CHECK(std::abs(p.q.dot(p.v)) < 1e-12);
  }
}

TEST_CASE("signed_gram_entry: both evaluation routes") {
  CHECK(signed_gram_entry(kXAxis, kRaisedY) == -1.0);
  CHECK(signed_gram_entry(kRaisedY, kRaisedY) == 0.0);
  CHECK(plucker_pairing(plucker(kRaisedY), plucker(kRaisedY)) == 0.0);

  std::mt19937_64 rng = seeded_generator(16, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [a, b] = random_skew_pair(rng);
    const double direct = signed_gram_entry(a, b);
    CHECK(std::abs(direct - plucker_pairing(plucker(a), plucker(b))) < 1e-12);
    const double cross = a.direction().cross(b.direction()).norm();
    CHECK(std::abs(direct - to_int(chirality(a, b)) * distance(a, b) * cross) < 1e-12);
  }
}
