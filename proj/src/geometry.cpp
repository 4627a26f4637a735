#include "skewlines/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewlines/error.hpp"

namespace skewlines {

Sign sign_from_int(int value) {
  if (value == 1) return Sign::Positive;
  if (value == -1) return Sign::Negative;
  throw Error(ErrorKind::InvalidInput, "sign must be +1 or -1, got " + std::to_string(value));
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Skew: return "skew";
    case PairClass::Parallel: return "parallel";
    case PairClass::Intersecting: return "intersecting";
    case PairClass::Identical: return "identical";
  }
  return "unknown";
}

DirectedLine DirectedLine::through(const Vector3& point, const Vector3& direction) {
  if (!point.allFinite() || !direction.allFinite()) {
    throw Error(ErrorKind::InvalidInput, "line point and direction must be finite");
  }
  const double len = direction.norm();
  if (len < 1e-12) {
    throw Error(ErrorKind::ZeroDirection, "line direction has zero length");
  }
  const Vector3 v = direction / len;
  return DirectedLine(v, point - point.dot(v) * v);
}

DirectedLine normalize_line(const Vector3& point, const Vector3& direction) {
  return DirectedLine::through(point, direction);
}

namespace {

// Offset of b from a, orthogonal to a's direction.
Vector3 perpendicular_offset(const DirectedLine& a, const DirectedLine& b) {
  const Vector3 dw = a.moment_point() - b.moment_point();
  return dw - dw.dot(a.direction()) * a.direction();
}

}  // namespace

PairClass classify_pair(const DirectedLine& a, const DirectedLine& b, double tol) {
  const Vector3 cross = a.direction().cross(b.direction());
  const Vector3 dw = a.moment_point() - b.moment_point();
  if (cross.norm() < tol) {
    return perpendicular_offset(a, b).norm() < tol ? PairClass::Identical : PairClass::Parallel;
  }
  if (std::abs(cross.dot(dw)) < tol * std::max(1.0, dw.norm())) {
    return PairClass::Intersecting;
  }
  return PairClass::Skew;
}

double distance(const DirectedLine& a, const DirectedLine& b) {
  switch (classify_pair(a, b)) {
    case PairClass::Skew: {
      const Vector3 cross = a.direction().cross(b.direction());
      return std::abs((cross / cross.norm()).dot(a.moment_point() - b.moment_point()));
    }
    case PairClass::Parallel:
    case PairClass::Identical:
      return perpendicular_offset(a, b).norm();
    case PairClass::Intersecting:
      return 0.0;
  }
  return 0.0;
}

Sign chirality(const DirectedLine& a, const DirectedLine& b) {
  const PairClass c = classify_pair(a, b);
  if (c != PairClass::Skew) {
    throw Error(ErrorKind::CoplanarPair,
                std::string("chirality undefined for a ") + to_string(c) + " pair");
  }
  return signed_gram_entry(a, b) > 0.0 ? Sign::Positive : Sign::Negative;
}

DirectedLine reverse(const DirectedLine& a) {
  return DirectedLine::through(a.moment_point(), -a.direction());
}

DirectedLine reflect_z(const DirectedLine& a) {
  const Vector3 mirror(1.0, 1.0, -1.0);
  return DirectedLine::through(a.moment_point().cwiseProduct(mirror),
                               a.direction().cwiseProduct(mirror));
}

DirectedLine rigid_motion(const DirectedLine& a, const Matrix3& rotation,
                          const Vector3& translation) {
  return DirectedLine::through(rotation * a.moment_point() + translation,
                               rotation * a.direction());
}

PluckerLine plucker(const DirectedLine& a) {
  return {a.moment_point().cross(a.direction()), a.direction()};
}

double signed_gram_entry(const DirectedLine& a, const DirectedLine& b) {
  return a.direction().cross(b.direction()).dot(a.moment_point() - b.moment_point());
}

double plucker_pairing(const PluckerLine& a, const PluckerLine& b) {
  return a.q.dot(b.v) + a.v.dot(b.q);
}

}  // namespace skewlines
