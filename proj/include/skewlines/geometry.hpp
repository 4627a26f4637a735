#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>

namespace skewlines {

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

/// Default thresholds for parallelism (‖v×v′‖) and coplanarity
/// (|⟨v×v′, w−w′⟩| relative to max(1, ‖w−w′‖)).
inline constexpr double kParallelTol = 1e-9;
inline constexpr double kCoplanarTol = 1e-9;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline Sign operator-(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
inline int to_int(Sign s) { return static_cast<int>(s); }
Sign sign_from_int(int value);  // throws InvalidInput unless value is ±1

enum class PairClass { Skew, Parallel, Intersecting, Identical };

const char* to_string(PairClass c);

/// A directed line {moment_point + s·direction}. The direction is unit length
/// and the moment point is the foot of the perpendicular from the origin, so
/// two DirectedLines describe the same directed line iff their members agree.
class DirectedLine {
 public:
  /// Line through `point` with the orientation of `direction`.
  /// Throws ZeroDirection if ‖direction‖ < 1e-12.
  static DirectedLine through(const Vector3& point, const Vector3& direction);

  const Vector3& direction() const { return direction_; }
  const Vector3& moment_point() const { return moment_point_; }

  Vector3 point_at(double s) const { return moment_point_ + s * direction_; }

 private:
  DirectedLine(const Vector3& d, const Vector3& m) : direction_(d), moment_point_(m) {}

  Vector3 direction_;
  Vector3 moment_point_;
};

/// Plücker pair (q, v) with q = w × v.
struct PluckerLine {
  Vector3 q;
  Vector3 v;
};

DirectedLine normalize_line(const Vector3& point, const Vector3& direction);

PairClass classify_pair(const DirectedLine& a, const DirectedLine& b,
                        double tol = kParallelTol);

/// Minimal Euclidean distance between the two lines (0 for intersecting).
double distance(const DirectedLine& a, const DirectedLine& b);

/// sgn⟨v_a × v_b, w_a − w_b⟩. Throws CoplanarPair unless the pair is skew.
Sign chirality(const DirectedLine& a, const DirectedLine& b);

DirectedLine reverse(const DirectedLine& a);

/// Image under the mirror (x, y, z) ↦ (x, y, −z).
DirectedLine reflect_z(const DirectedLine& a);

/// Image under x ↦ R x + t; R must be a rotation.
DirectedLine rigid_motion(const DirectedLine& a, const Matrix3& rotation,
                          const Vector3& translation);

PluckerLine plucker(const DirectedLine& a);

/// ⟨v_a × v_b, w_a − w_b⟩, the signed distance scaled by ‖v_a × v_b‖.
double signed_gram_entry(const DirectedLine& a, const DirectedLine& b);

/// Same quantity through Plücker coordinates: ⟨q_a, v_b⟩ + ⟨v_a, q_b⟩.
double plucker_pairing(const PluckerLine& a, const PluckerLine& b);

}  // namespace skewlines
