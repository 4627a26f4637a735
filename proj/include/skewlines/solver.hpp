#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "skewlines/configuration.hpp"
#include "skewlines/signed_graph.hpp"
#include "skewlines/spectral.hpp"

namespace skewlines {

/// Squared: ⟨v_i×v_j, w_i−w_j⟩² − t²‖v_i×v_j‖² (+ near-parallel barrier).
/// Distance: ⟨v_i×v_j, w_i−w_j⟩² / ‖v_i×v_j‖² − t², i.e. d² − t².
enum class ResidualForm { Squared, Distance };

struct SolverOptions {
  int n = 5;
  std::uint64_t seed = 1;
  int multistarts = 100;
  int max_iterations = 200;
  double residual_tol = 1e-14;
  double step_tol = 1e-15;
  double target_distance = 1.0;
  /// Maximum |d(L_i, L_j) - target| accepted as a solution, relative to target.
  double accept_tol = 1e-8;
  /// Solutions with some ‖v_i × v_j‖ below this are rejected as degenerate.
  double min_cross_norm = 1e-3;
  ResidualForm residual_form = ResidualForm::Distance;
  /// Worker threads for the multistart loop; results do not depend on it.
  int threads = 1;

  /// Throws InvalidInput when a field is out of range.
  void validate() const;
};

/// Number of free parameters after removing the rigid-motion gauge: 4n - 6.
int parameter_dimension(int n);

// Parameter layout. Line i has spherical angles (theta, phi), unit direction
// v = (sin t cos p, sin t sin p, cos t) and the frame e_theta = dv/dtheta,
// e_phi = (-sin p, cos p, 0); its moment is w = a e_theta + b e_phi.
// Line 1 is the x-axis. Line 2 has phi = 0 and a = 0, leaving (theta, b).
// Lines 3..n contribute (theta, phi, a, b) each.

/// Lines encoded by `params` (canonical, since w is orthogonal to v).
LineConfiguration decode(const Eigen::VectorXd& params, int n, double target);

/// Residual per pair in lexicographic order. The squared form adds
/// (1e-6 − ‖v_i×v_j‖²) when ‖v_i×v_j‖² < 1e-6.
Eigen::VectorXd residuals(const Eigen::VectorXd& params, int n, double target,
                          ResidualForm form = ResidualForm::Squared);

/// Analytic Jacobian of `residuals`, C(n,2) × (4n − 6).
Eigen::MatrixXd jacobian(const Eigen::VectorXd& params, int n, double target,
                         ResidualForm form = ResidualForm::Squared);

/// Random start for multistart index `start_index`: directions uniform on
/// the sphere, moment coordinates uniform in [-2, 2] (scaled by target).
Eigen::VectorXd random_start(int n, double target, std::uint64_t seed,
                             std::uint64_t start_index);

struct LevenbergMarquardtResult {
  Eigen::VectorXd params;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;  // residual norm fell below residual_tol
};

LevenbergMarquardtResult levenberg_marquardt(Eigen::VectorXd params, const SolverOptions& opts);

struct SolveResult {
  LineConfiguration configuration;
  Eigen::VectorXd params;
  int start_index = 0;
  int iterations = 0;
  int starts_tried = 0;
  double residual_norm = 0.0;
  double max_abs_deviation = 0.0;
  double min_cross_norm = 0.0;
};

/// Multistart search; returns the solution from the lowest start index whose
/// configuration is pairwise skew with every distance within
/// accept_tol·target and every ‖v_i × v_j‖ ≥ min_cross_norm. Throws NoConvergence with the best residual otherwise.
SolveResult solve(const SolverOptions& opts);

/// As `solve`, but a converged start only counts if `accept` returns true.
SolveResult solve_until(const SolverOptions& opts,
                        const std::function<bool(const LineConfiguration&)>& accept);

/// Every accepted solution over all starts, in start order.
std::vector<SolveResult> solve_all(const SolverOptions& opts);

/// Same solution up to rigid motion, relabeling-invariant angle multiset and
/// switching class: sorted arccos|⟨v_i,v_j⟩| agree to 1e-6 and the chirality
/// graphs are switching isomorphic (when n ≤ 9).
bool same_solution(const LineConfiguration& a, const LineConfiguration& b);

std::vector<LineConfiguration> distinct_solutions(const std::vector<SolveResult>& results);

struct VerificationReport {
  LineConfiguration configuration;
  double tolerance = 0.0;
  std::vector<double> pairwise_distances;
  double max_abs_deviation = 0.0;
  std::vector<PairClass> pair_classes;
  bool all_skew = false;
  std::optional<SignedCompleteGraph> chirality_graph;
  std::optional<CliqueWitness> mono_clique_5;
  /// Some orientation of the lines yields a monochromatic K5.
  bool mono_k5_any_orientation = false;
  std::optional<Signature> signed_gram_signature;
  std::optional<Signature> lemma_signature;
  bool passed = false;
};

/// passed ⇔ max deviation ≤ tol, all pairs skew and no monochromatic K5.
VerificationReport verify(const LineConfiguration& config, double tol);

/// Reverses lines 2..n so that every edge {1, i} of the chirality graph is
/// positive. Throws CoplanarPair.
LineConfiguration orient_first_positive(const LineConfiguration& config);

}  // namespace skewlines
