#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "skewlines/configuration.hpp"
#include "skewlines/geometry.hpp"

namespace skewlines {

using Matrix = Eigen::MatrixXd;
using Rational = boost::multiprecision::cpp_rational;

/// Inertia of a symmetric matrix: eigenvalue counts above, below and within
/// the zero threshold.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

/// Threshold 1e-8 · max(1, max|λ|).
double default_zero_tol(const Eigen::VectorXd& eigenvalues);

/// A dense symmetric matrix together with its spectrum (descending) and the
/// signature read off at `zero_tol`.
struct SymmetricMatrixReport {
  Matrix entries;
  Eigen::VectorXd eigenvalues;
  Signature signature;
  double zero_tol = 0.0;

  int n() const { return static_cast<int>(entries.rows()); }
  double max_abs_eigenvalue() const;
  double min_abs_eigenvalue() const;

  /// Eigen-decomposes `m`. With no threshold the default relative one is used.
  /// Throws NotSymmetric if m deviates from its transpose by more than 1e-10.
  static SymmetricMatrixReport analyze(const Matrix& m,
                                       std::optional<double> zero_tol = std::nullopt);
};

/// Eigenvalues of a symmetric matrix, sorted descending.
Eigen::VectorXd symmetric_eigenvalues(const Matrix& m);

Signature signature(const Matrix& m, double zero_tol);

/// S = (‖v_i × v_j‖). Throws ParallelVectors (1-based pair) when two inputs
/// are parallel, InvalidInput when an input is not unit length.
SymmetricMatrixReport cross_norm_matrix(const std::vector<Vector3>& vs,
                                        std::optional<double> zero_tol = std::nullopt);

struct LemmaReport {
  SymmetricMatrixReport matrix;
  bool passed = false;
  /// Empty unless the smallest |eigenvalue| is tiny relative to the largest.
  std::string conditioning_note;
};

/// Checks that the cross-norm matrix is non-singular with exactly one
/// positive eigenvalue.
LemmaReport verify_lemma(const std::vector<Vector3>& vs,
                         std::optional<double> zero_tol = std::nullopt);

// Series of sqrt(1 - x^2) = 1 - sum_k c_k x^{2k} and its trinomial split
// c_k <x, y>^{2k} = sum_{a+b+c=2k} C^{(k)}_{abc} x^a y^b z^c · x'^a y'^b z'^c.

struct TaylorCoefficient {
  int k = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  Rational value;

  double to_double() const { return static_cast<double>(value); }
};

/// c_k = C(2k, k) / (4^k (2k - 1)), exact. Throws OutOfDomain for k < 1.
Rational series_coefficient(int k);

/// C^{(k)}_{abc} = c_k · (2k)! / (a! b! c!). Throws BadMultiIndex unless
/// a, b, c ≥ 0 and a + b + c = 2k, OutOfDomain for k < 1.
TaylorCoefficient taylor_coefficient(int k, int a, int b, int c);

/// sum_{a+b+c=2k} C^{(k)}_{abc} f_abc(x) f_abc(y); equals c_k <x, y>^{2k}.
double contracted_taylor_term(int k, const Vector3& x, const Vector3& y);

/// 1 - sum_{k=1..K} c_k x^{2k}. Throws OutOfDomain unless |x| ≤ 1, K ≥ 1.
double truncated_cross_norm(double x, int terms);

/// The split form [[0, I3], [I3, 0]] on Plücker 6-vectors (q, v).
Matrix b_form();

Eigen::Matrix<double, 6, 1> plucker_vector(const PluckerLine& p);

/// Entries ⟨v_i × v_j, w_i − w_j⟩. Throws CoplanarPair if any pair is not skew.
SymmetricMatrixReport signed_gram_matrix(const LineConfiguration& config,
                                         std::optional<double> zero_tol = std::nullopt);

/// Same matrix as u_i^T B u_j for the Plücker vectors u_i; no skewness check.
Matrix plucker_gram_matrix(const LineConfiguration& config);

}  // namespace skewlines
