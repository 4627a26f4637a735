#include "skewlines/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "skewlines/error.hpp"

namespace skewlines {

namespace mp = boost::multiprecision;

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.positive << "," << s.negative << "," << s.zero << ")";
  return os.str();
}

double default_zero_tol(const Eigen::VectorXd& eigenvalues) {
  const double largest = eigenvalues.size() > 0 ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return 1e-8 * std::max(1.0, largest);
}

double SymmetricMatrixReport::max_abs_eigenvalue() const {
  return eigenvalues.size() > 0 ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
}

double SymmetricMatrixReport::min_abs_eigenvalue() const {
  return eigenvalues.size() > 0 ? eigenvalues.cwiseAbs().minCoeff() : 0.0;
}

namespace {

void require_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NotSymmetric, "matrix is not square");
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::InvalidInput, "matrix has non-finite entries");
  }
  if (m.rows() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric to 1e-10");
  }
}

Signature count_signs(const Eigen::VectorXd& eigenvalues, double zero_tol) {
  Signature s;
  for (double lambda : eigenvalues) {
    if (lambda > zero_tol) {
      ++s.positive;
    } else if (lambda < -zero_tol) {
      ++s.negative;
    } else {
      ++s.zero;
    }
  }
  return s;
}

}  // namespace

Eigen::VectorXd symmetric_eigenvalues(const Matrix& m) {
  require_symmetric(m);
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  return ev.reverse();
}

Signature signature(const Matrix& m, double zero_tol) {
  if (!(zero_tol > 0.0)) {
    throw Error(ErrorKind::OutOfDomain, "zero tolerance must be positive");
  }
  return count_signs(symmetric_eigenvalues(m), zero_tol);
}

SymmetricMatrixReport SymmetricMatrixReport::analyze(const Matrix& m,
                                                     std::optional<double> zero_tol) {
  SymmetricMatrixReport report;
  report.entries = m;
  report.eigenvalues = symmetric_eigenvalues(m);
  report.zero_tol = zero_tol.value_or(default_zero_tol(report.eigenvalues));
  if (!(report.zero_tol > 0.0)) {
    throw Error(ErrorKind::OutOfDomain, "zero tolerance must be positive");
  }
  report.signature = count_signs(report.eigenvalues, report.zero_tol);
  return report;
}

SymmetricMatrixReport cross_norm_matrix(const std::vector<Vector3>& vs,
                                        std::optional<double> zero_tol) {
  const int n = static_cast<int>(vs.size());
  for (int i = 0; i < n; ++i) {
    if (!vs[i].allFinite() || std::abs(vs[i].norm() - 1.0) > 1e-10) {
      throw Error(ErrorKind::InvalidInput,
                  "vector " + std::to_string(i + 1) + " is not unit length");
    }
  }
  Matrix s = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double value = vs[i].cross(vs[j]).norm();
      if (value < kParallelTol) {
        throw Error(ErrorKind::ParallelVectors,
                    "vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " are parallel",
                    std::pair{i + 1, j + 1});
      }
      s(i, j) = value;
      s(j, i) = value;
    }
  }
  return SymmetricMatrixReport::analyze(s, zero_tol);
}

LemmaReport verify_lemma(const std::vector<Vector3>& vs, std::optional<double> zero_tol) {
  LemmaReport report{cross_norm_matrix(vs, zero_tol), false, {}};
  const int n = report.matrix.n();
  report.passed = report.matrix.signature == Signature{1, n - 1, 0};
  const double largest = report.matrix.max_abs_eigenvalue();
  const double smallest = report.matrix.min_abs_eigenvalue();
  if (largest > 0.0 && smallest < 1e-6 * largest) {
    std::ostringstream os;
    os << "ill-conditioned: min|eigenvalue| = " << smallest
       << ", ratio to max = " << smallest / largest;
    report.conditioning_note = os.str();
  }
  return report;
}

namespace {

mp::cpp_int factorial(int m) {
  mp::cpp_int f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

mp::cpp_int binomial(int m, int r) {
  mp::cpp_int b = 1;
  for (int i = 1; i <= r; ++i) {
    b *= m - r + i;
    b /= i;
  }
  return b;
}

}  // namespace

Rational series_coefficient(int k) {
  if (k < 1) {
    throw Error(ErrorKind::OutOfDomain, "series index must be at least 1");
  }
  const mp::cpp_int denominator = (mp::cpp_int(1) << (2 * k)) * (2 * k - 1);
  return Rational(binomial(2 * k, k), denominator);
}

TaylorCoefficient taylor_coefficient(int k, int a, int b, int c) {
  if (k < 1) {
    throw Error(ErrorKind::OutOfDomain, "series index must be at least 1");
  }
  if (a < 0 || b < 0 || c < 0 || a + b + c != 2 * k) {
    throw Error(ErrorKind::BadMultiIndex, "multi-index must satisfy a + b + c = 2k");
  }
  const mp::cpp_int multinomial = factorial(2 * k) / (factorial(a) * factorial(b) * factorial(c));
  return {k, a, b, c, series_coefficient(k) * multinomial};
}

double contracted_taylor_term(int k, const Vector3& x, const Vector3& y) {
  double sum = 0.0;
  for (int a = 0; a <= 2 * k; ++a) {
    for (int b = 0; a + b <= 2 * k; ++b) {
      const int c = 2 * k - a - b;
      const double fx = std::pow(x.x(), a) * std::pow(x.y(), b) * std::pow(x.z(), c);
      const double fy = std::pow(y.x(), a) * std::pow(y.y(), b) * std::pow(y.z(), c);
      sum += taylor_coefficient(k, a, b, c).to_double() * fx * fy;
    }
  }
  return sum;
}

double truncated_cross_norm(double x, int terms) {
  if (!(std::abs(x) <= 1.0) || terms < 1) {
    throw Error(ErrorKind::OutOfDomain, "need |x| <= 1 and at least one term");
  }
  // c_k = c_{k-1} (2k - 3) / (2k), c_1 = 1/2; the exact coefficients are
  // available from series_coefficient, the ratio form avoids huge integers.
  const double x2 = x * x;
  double coefficient = 0.5;
  double power = x2;
  double sum = 1.0;
  for (int k = 1; k <= terms; ++k) {
    if (k > 1) {
      coefficient *= static_cast<double>(2 * k - 3) / static_cast<double>(2 * k);
      power *= x2;
    }
    sum -= coefficient * power;
  }
  return sum;
}

Matrix b_form() {
  Matrix b = Matrix::Zero(6, 6);
  b.topRightCorner<3, 3>().setIdentity();
  b.bottomLeftCorner<3, 3>().setIdentity();
  return b;
}

Eigen::Matrix<double, 6, 1> plucker_vector(const PluckerLine& p) {
  Eigen::Matrix<double, 6, 1> u;
  u << p.q, p.v;
  return u;
}

SymmetricMatrixReport signed_gram_matrix(const LineConfiguration& config,
                                         std::optional<double> zero_tol) {
  require_pairwise_skew(config);
  const int n = config.size();
  Matrix s = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      s(i, j) = s(j, i) = signed_gram_entry(config.lines[i], config.lines[j]);
    }
  }
  return SymmetricMatrixReport::analyze(s, zero_tol);
}

Matrix plucker_gram_matrix(const LineConfiguration& config) {
  const int n = config.size();
  Matrix u(6, n);
  for (int i = 0; i < n; ++i) u.col(i) = plucker_vector(plucker(config.lines[i]));
  return u.transpose() * b_form() * u;
}

}  // namespace skewlines
