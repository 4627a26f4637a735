#include "skewlines/solver.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "skewlines/error.hpp"
#include "skewlines/sampling.hpp"

namespace skewlines {

void SolverOptions::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorKind::InvalidInput, what); };
  if (n < 2) fail("solver needs n >= 2");
  if (multistarts < 1) fail("multistarts must be positive");
  if (max_iterations < 1) fail("max_iterations must be positive");
  if (!(residual_tol > 0.0)) fail("residual_tol must be positive");
  if (!(step_tol > 0.0)) fail("step_tol must be positive");
  if (!(target_distance > 0.0) || !std::isfinite(target_distance)) {
    fail("target distance must be positive");
  }
  if (!(accept_tol > 0.0)) fail("accept_tol must be positive");
  if (threads < 1) fail("threads must be positive");
  if (!(min_cross_norm >= 0.0) || min_cross_norm >= 1.0) fail("min_cross_norm must lie in [0, 1)");
}

int parameter_dimension(int n) { return 4 * n - 6; }

namespace {

constexpr double kBarrier = 1e-6;

// Free parameters of one line; derivative slots are -1 when gauge-fixed.
struct LineState {
  Vector3 v;
  Vector3 e_theta;
  Vector3 e_phi;
  Vector3 de_phi;  // d e_phi / d phi
  Vector3 w;
  double sin_t = 0.0;
  double cos_t = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::array<int, 4> slot{-1, -1, -1, -1};  // theta, phi, a, b
};

std::vector<LineState> expand(const Eigen::VectorXd& params, int n) {
  if (n < 2 || params.size() != parameter_dimension(n)) {
    throw Error(ErrorKind::InvalidInput, "parameter vector has the wrong dimension");
  }
  std::vector<LineState> lines(n);
  {
    LineState& x_axis = lines[0];
    x_axis.v = Vector3::UnitX();
    x_axis.e_theta = -Vector3::UnitZ();
    x_axis.e_phi = Vector3::UnitY();
    x_axis.de_phi = -Vector3::UnitX();
    x_axis.w = Vector3::Zero();
    x_axis.sin_t = 1.0;
  }
  for (int i = 1; i < n; ++i) {
    LineState& s = lines[i];
    double theta = 0.0;
    double phi = 0.0;
    if (i == 1) {
      theta = params[0];
      s.b = params[1];
      s.slot = {0, -1, -1, 1};
    } else {
      const int off = 2 + 4 * (i - 2);
      theta = params[off];
      phi = params[off + 1];
      s.a = params[off + 2];
      s.b = params[off + 3];
      s.slot = {off, off + 1, off + 2, off + 3};
    }
    s.sin_t = std::sin(theta);
    s.cos_t = std::cos(theta);
    const double sp = i == 1 ? 0.0 : std::sin(phi);
    const double cp = i == 1 ? 1.0 : std::cos(phi);
    s.v = Vector3(s.sin_t * cp, s.sin_t * sp, s.cos_t);
    s.e_theta = Vector3(s.cos_t * cp, s.cos_t * sp, -s.sin_t);
    s.e_phi = Vector3(-sp, cp, 0.0);
    s.de_phi = Vector3(-cp, -sp, 0.0);
    s.w = s.a * s.e_theta + s.b * s.e_phi;
  }
  return lines;
}

// (dv, dw) for parameter k in {theta, phi, a, b} of a line.
std::pair<Vector3, Vector3> line_derivative(const LineState& s, int k) {
  switch (k) {
    case 0:
      return {s.e_theta, -s.a * s.v};
    case 1:
      return {s.sin_t * s.e_phi, s.a * s.cos_t * s.e_phi + s.b * s.de_phi};
    case 2:
      return {Vector3::Zero(), s.e_theta};
    default:
      return {Vector3::Zero(), s.e_phi};
  }
}

double max_deviation(const LineConfiguration& config) {
  double worst = 0.0;
  for (int i = 0; i < config.size(); ++i) {
    for (int j = i + 1; j < config.size(); ++j) {
      worst = std::max(worst, std::abs(distance(config.lines[i], config.lines[j]) -
                                       config.target_distance));
    }
  }
  return worst;
}

double min_cross(const LineConfiguration& config) {
  double smallest = 1.0;
  for (int i = 0; i < config.size(); ++i) {
    for (int j = i + 1; j < config.size(); ++j) {
      smallest = std::min(
          smallest, config.lines[i].direction().cross(config.lines[j].direction()).norm());
    }
  }
  return smallest;
}

bool pairwise_skew(const LineConfiguration& config) {
  for (int i = 0; i < config.size(); ++i) {
    for (int j = i + 1; j < config.size(); ++j) {
      if (classify_pair(config.lines[i], config.lines[j]) != PairClass::Skew) return false;
    }
  }
  return true;
}

struct StartOutcome {
  SolveResult result;
  bool geometric_ok = false;
};

StartOutcome run_start(const SolverOptions& opts, int start_index) {
  StartOutcome out;
  const Eigen::VectorXd start = random_start(opts.n, opts.target_distance, opts.seed,
                                             static_cast<std::uint64_t>(start_index));
  const LevenbergMarquardtResult lm = levenberg_marquardt(start, opts);
  SolveResult& r = out.result;
  r.params = lm.params;
  r.start_index = start_index;
  r.iterations = lm.iterations;
  r.residual_norm = lm.residual_norm;
  if (!lm.params.allFinite()) {
    r.residual_norm = std::numeric_limits<double>::infinity();
    return out;
  }
  r.configuration = decode(lm.params, opts.n, opts.target_distance);
  if (!pairwise_skew(r.configuration)) return out;
  r.max_abs_deviation = max_deviation(r.configuration);
  r.min_cross_norm = min_cross(r.configuration);
  out.geometric_ok = r.max_abs_deviation <= opts.accept_tol * opts.target_distance &&
                     r.min_cross_norm >= opts.min_cross_norm;
  return out;
}

// Runs starts [begin, end) on opts.threads workers; outcome order follows the
// start index regardless of scheduling.
std::vector<StartOutcome> run_batch(const SolverOptions& opts, int begin, int end) {
  std::vector<StartOutcome> outcomes(end - begin);
  const int workers = std::min(opts.threads, end - begin);
  if (workers <= 1) {
    for (int s = begin; s < end; ++s) outcomes[s - begin] = run_start(opts, s);
    return outcomes;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (int s = begin + t; s < end; s += workers) outcomes[s - begin] = run_start(opts, s);
    });
  }
  pool.clear();
  return outcomes;
}

}  // namespace

LineConfiguration decode(const Eigen::VectorXd& params, int n, double target) {
  LineConfiguration config;
  config.target_distance = target;
  for (const LineState& s : expand(params, n)) {
    config.lines.push_back(DirectedLine::through(s.w, s.v));
  }
  return config;
}

Eigen::VectorXd residuals(const Eigen::VectorXd& params, int n, double target,
                          ResidualForm form) {
  const std::vector<LineState> lines = expand(params, n);
  Eigen::VectorXd r(n * (n - 1) / 2);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++row) {
      const Vector3 cross = lines[i].v.cross(lines[j].v);
      const double s = cross.dot(lines[i].w - lines[j].w);
      const double c = cross.squaredNorm();
      if (form == ResidualForm::Distance) {
        r[row] = s * s / c - target * target;
      } else {
        r[row] = s * s - target * target * c;
        if (c < kBarrier) r[row] += kBarrier - c;
      }
    }
  }
  return r;
}

Eigen::MatrixXd jacobian(const Eigen::VectorXd& params, int n, double target,
                         ResidualForm form) {
  const std::vector<LineState> lines = expand(params, n);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n * (n - 1) / 2, parameter_dimension(n));
  int row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++row) {
      const LineState& li = lines[i];
      const LineState& lj = lines[j];
      const Vector3 cross = li.v.cross(lj.v);
      const Vector3 dw = li.w - lj.w;
      const double s = cross.dot(dw);
      const double c = cross.squaredNorm();
      const double dc_weight = target * target + (c < kBarrier ? 1.0 : 0.0);
      // d/dx of the residual given ds/dx and dc/dx.
      auto chain = [&](double ds, double dc) {
        if (form == ResidualForm::Distance) return 2.0 * s * ds / c - s * s * dc / (c * c);
        return 2.0 * s * ds - dc_weight * dc;
      };
      for (int k = 0; k < 4; ++k) {
        if (li.slot[k] >= 0) {
          const auto [dv, dwi] = line_derivative(li, k);
          const Vector3 dcross = dv.cross(lj.v);
          jac(row, li.slot[k]) += chain(dcross.dot(dw) + cross.dot(dwi), 2.0 * cross.dot(dcross));
        }
        if (lj.slot[k] >= 0) {
          const auto [dv, dwj] = line_derivative(lj, k);
          const Vector3 dcross = li.v.cross(dv);
          jac(row, lj.slot[k]) += chain(dcross.dot(dw) - cross.dot(dwj), 2.0 * cross.dot(dcross));
        }
      }
    }
  }
  return jac;
}

Eigen::VectorXd random_start(int n, double target, std::uint64_t seed, std::uint64_t start_index) {
  std::mt19937_64 rng = seeded_generator(seed, start_index);
  Eigen::VectorXd x(parameter_dimension(n));
  auto polar = [&] { return std::acos(uniform(rng, -1.0, 1.0)); };
  x[0] = polar();
  x[1] = uniform(rng, -2.0, 2.0) * target;
  for (int i = 2; i < n; ++i) {
    const int off = 2 + 4 * (i - 2);
    x[off] = polar();
    x[off + 1] = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    x[off + 2] = uniform(rng, -2.0, 2.0) * target;
    x[off + 3] = uniform(rng, -2.0, 2.0) * target;
  }
  return x;
}

LevenbergMarquardtResult levenberg_marquardt(Eigen::VectorXd params, const SolverOptions& opts) {
  const int n = opts.n;
  const double t = opts.target_distance;
  const int dim = parameter_dimension(n);
  const int m = n * (n - 1) / 2;

  LevenbergMarquardtResult out;
  const ResidualForm form = opts.residual_form;
  Eigen::VectorXd r = residuals(params, n, t, form);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  if (!std::isfinite(cost)) {
    out.params = std::move(params);
    out.residual_norm = std::numeric_limits<double>::infinity();
    return out;
  }

  Eigen::MatrixXd augmented(m + dim, dim);
  Eigen::VectorXd rhs(m + dim);
  for (out.iterations = 0; out.iterations < opts.max_iterations; ++out.iterations) {
    if (std::sqrt(cost) < opts.residual_tol) break;
    const Eigen::MatrixXd jac = jacobian(params, n, t, form);
    // min ‖J δ + r‖² + λ‖δ‖², solved as a stacked least-squares problem.
    augmented.topRows(m) = jac;
    augmented.bottomRows(dim) = std::sqrt(lambda) * Eigen::MatrixXd::Identity(dim, dim);
    rhs.head(m) = -r;
    rhs.tail(dim).setZero();
    const Eigen::VectorXd step = augmented.householderQr().solve(rhs);
    if (!step.allFinite()) break;
    if (step.norm() < opts.step_tol * (params.norm() + opts.step_tol)) break;

    const Eigen::VectorXd trial = params + step;
    const Eigen::VectorXd trial_r = residuals(trial, n, t, form);
    const double trial_cost = trial_r.squaredNorm();
    if (std::isfinite(trial_cost) && trial_cost < cost) {
      params = trial;
      r = trial_r;
      cost = trial_cost;
      lambda = std::max(lambda / 10.0, 1e-15);
    } else {
      lambda *= 10.0;
      if (lambda > 1e16) break;
    }
  }
  out.params = std::move(params);
  out.residual_norm = std::sqrt(cost);
  out.converged = out.residual_norm < opts.residual_tol;
  return out;
}

SolveResult solve_until(const SolverOptions& opts,
                        const std::function<bool(const LineConfiguration&)>& accept) {
  opts.validate();
  double best = std::numeric_limits<double>::infinity();
  const int batch = std::max(1, opts.threads * 4);
  for (int begin = 0; begin < opts.multistarts; begin += batch) {
    const int end = std::min(opts.multistarts, begin + batch);
    for (StartOutcome& o : run_batch(opts, begin, end)) {
      best = std::min(best, o.result.residual_norm);
      if (o.geometric_ok && accept(o.result.configuration)) {
        o.result.starts_tried = o.result.start_index + 1;
        return std::move(o.result);
      }
    }
  }
  throw NoConvergence("no accepted configuration after " + std::to_string(opts.multistarts) +
                          " starts; best residual norm " + std::to_string(best),
                      best, opts.multistarts);
}

SolveResult solve(const SolverOptions& opts) {
  return solve_until(opts, [](const LineConfiguration&) { return true; });
}

std::vector<SolveResult> solve_all(const SolverOptions& opts) {
  opts.validate();
  std::vector<SolveResult> found;
  for (StartOutcome& o : run_batch(opts, 0, opts.multistarts)) {
    if (o.geometric_ok) {
      o.result.starts_tried = o.result.start_index + 1;
      found.push_back(std::move(o.result));
    }
  }
  return found;
}

namespace {

std::vector<double> sorted_direction_angles(const LineConfiguration& c) {
  std::vector<double> angles;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      const double cosine = std::abs(c.lines[i].direction().dot(c.lines[j].direction()));
      angles.push_back(std::acos(std::min(1.0, cosine)));
    }
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace

bool same_solution(const LineConfiguration& a, const LineConfiguration& b) {
  if (a.size() != b.size()) return false;
  const std::vector<double> x = sorted_direction_angles(a);
  const std::vector<double> y = sorted_direction_angles(b);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::abs(x[k] - y[k]) > 1e-6) return false;
  }
  if (a.size() > 9) return true;
  return switching_isomorphic(chirality_graph(a), chirality_graph(b)).has_value();
}

std::vector<LineConfiguration> distinct_solutions(const std::vector<SolveResult>& results) {
  std::vector<LineConfiguration> distinct;
  for (const SolveResult& r : results) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const auto& d) {
      return same_solution(d, r.configuration);
    });
    if (!seen) distinct.push_back(r.configuration);
  }
  return distinct;
}

VerificationReport verify(const LineConfiguration& config, double tol) {
  VerificationReport rep;
  rep.configuration = config;
  rep.tolerance = tol;
  const int n = config.size();
  rep.all_skew = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(config.lines[i], config.lines[j]);
      rep.pairwise_distances.push_back(d);
      rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(d - config.target_distance));
      const PairClass c = classify_pair(config.lines[i], config.lines[j]);
      rep.pair_classes.push_back(c);
      rep.all_skew = rep.all_skew && c == PairClass::Skew;
    }
  }
  if (rep.all_skew) {
    rep.chirality_graph = chirality_graph(config);
    if (n >= 5) {
      rep.mono_clique_5 = find_mono_clique(*rep.chirality_graph, 5);
      rep.mono_k5_any_orientation = mono_k_possible(*rep.chirality_graph, 5);
    }
    rep.signed_gram_signature = signed_gram_matrix(config).signature;
  }
  if (n >= 2) {
    std::vector<Vector3> directions;
    for (const DirectedLine& l : config.lines) directions.push_back(l.direction());
    try {
      rep.lemma_signature = cross_norm_matrix(directions).signature;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParallelVectors) throw;
    }
  }
  rep.passed = rep.max_abs_deviation <= tol && rep.all_skew && !rep.mono_clique_5.has_value();
  return rep;
}

LineConfiguration orient_first_positive(const LineConfiguration& config) {
  require_pairwise_skew(config);
  LineConfiguration out = config;
  for (int i = 1; i < out.size(); ++i) {
    if (chirality(out.lines[0], out.lines[i]) == Sign::Negative) {
      out.lines[i] = reverse(out.lines[i]);
    }
  }
  return out;
}

}  // namespace skewlines
