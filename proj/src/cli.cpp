#include "skewlines/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "skewlines/error.hpp"
#include "skewlines/io.hpp"
#include "skewlines/sampling.hpp"
#include "skewlines/signed_graph.hpp"
#include "skewlines/solver.hpp"
#include "skewlines/spectral.hpp"

namespace skewlines::cli {

namespace {

constexpr double kDefaultTol = 1e-8;

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_verify(const std::string& path, double tol, std::ostream& out, std::ostream& err) {
  const LineConfiguration config = configuration_from_json(read_json_file(path));
  const VerificationReport report = verify(config, tol);
  emit(out, to_json(report));
  err << "verify: " << config.size() << " lines, max |d - " << config.target_distance
      << "| = " << report.max_abs_deviation << ", all skew: " << (report.all_skew ? "yes" : "no")
      << ", monochromatic K5: " << (report.mono_clique_5 ? "found" : "none") << " -> "
      << (report.passed ? "PASS" : "FAIL") << "\n";
  return report.passed ? kHolds : kViolation;
}

struct SolveFlags {
  std::optional<std::string> options_file;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::optional<int> multistarts;
  std::optional<int> max_iterations;
  std::optional<double> tol;
  std::optional<double> target;
  std::optional<int> threads;
  std::string residual_form;
  std::string out_path;
};

int cmd_solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  SolverOptions opts = f.options_file ? solver_options_from_json(read_json_file(*f.options_file))
                                      : SolverOptions{};
  if (f.n) opts.n = *f.n;
  if (f.seed) opts.seed = *f.seed;
  if (f.multistarts) opts.multistarts = *f.multistarts;
  if (f.max_iterations) opts.max_iterations = *f.max_iterations;
  if (f.tol) opts.accept_tol = *f.tol;
  if (f.target) opts.target_distance = *f.target;
  if (f.threads) opts.threads = *f.threads;
  if (f.residual_form == "squared") opts.residual_form = ResidualForm::Squared;
  if (f.residual_form == "distance") opts.residual_form = ResidualForm::Distance;
  opts.validate();

  SolveResult result;
  try {
    result = solve(opts);
  } catch (const NoConvergence& e) {
    emit(out, {{"status", "no_convergence"},
               {"options", to_json(opts)},
               {"starts", e.starts()},
               {"best_residual_norm", e.best_residual()}});
    err << "solve: " << e.what() << "\n";
    return kNoConvergence;
  }
  result.configuration.label = "solve n=" + std::to_string(opts.n) + " seed=" +
                               std::to_string(opts.seed) + " start=" +
                               std::to_string(result.start_index);
  const VerificationReport report =
      verify(result.configuration, opts.accept_tol * opts.target_distance);
  if (!f.out_path.empty()) write_text_file(f.out_path, to_json(result.configuration).dump(2) + "\n");
  emit(out, {{"status", "converged"},
             {"options", to_json(opts)},
             {"start_index", result.start_index},
             {"iterations", result.iterations},
             {"residual_norm", result.residual_norm},
             {"configuration", to_json(result.configuration)},
             {"report", to_json(report)}});
  err << "solve: n=" << opts.n << " converged at start " << result.start_index << " after "
      << result.iterations << " iterations, max deviation " << result.max_abs_deviation
      << (report.passed ? "" : " (verification FAILED)") << "\n";
  return report.passed ? kHolds : kViolation;
}

SignedCompleteGraph load_graph(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path)) return graph_from_json(read_json_file(name_or_path));
  for (const std::string& name : builtin_names()) {
    if (name == name_or_path) return builtin(name);
  }
  throw Error(ErrorKind::InvalidInput, "'" + name_or_path + "' is neither a graph file nor a builtin");
}

struct GraphFlags {
  std::string file;
  std::string builtin_name;
  std::optional<int> find_mono;
  std::optional<int> mono_possible;
  bool balance = false;
  std::string iso;
  std::string contains;
};

int cmd_graph(const GraphFlags& f, std::ostream& out, std::ostream& err) {
  if (f.file.empty() == f.builtin_name.empty()) {
    throw Error(ErrorKind::InvalidInput, "give exactly one of a graph file or --builtin");
  }
  const int actions = f.find_mono.has_value() + f.mono_possible.has_value() + f.balance +
                      !f.iso.empty() + !f.contains.empty();
  if (actions > 1) throw Error(ErrorKind::InvalidInput, "choose at most one graph action");
  const SignedCompleteGraph g =
      f.builtin_name.empty() ? graph_from_json(read_json_file(f.file)) : builtin(f.builtin_name);

  if (f.find_mono) {
    const auto w = find_mono_clique(g, *f.find_mono);
    emit(out, {{"graph", to_json(g)}, {"k", *f.find_mono}, {"witness", w ? to_json(*w) : Json()}});
    err << "graph: monochromatic K" << *f.find_mono << (w ? " found" : " absent") << "\n";
    return w ? kViolation : kHolds;
  }
  if (f.mono_possible) {
    const bool possible = mono_k_possible(g, *f.mono_possible);
    emit(out, {{"graph", to_json(g)}, {"k", *f.mono_possible}, {"possible", possible}});
    err << "graph: some switching has a monochromatic K" << *f.mono_possible << ": "
        << (possible ? "yes" : "no") << "\n";
    return possible ? kViolation : kHolds;
  }
  if (f.balance) {
    const bool balanced = is_balanced(g);
    emit(out, {{"graph", to_json(g)}, {"balanced", balanced}});
    err << "graph: " << (balanced ? "balanced" : "not balanced") << "\n";
    return balanced ? kHolds : kViolation;
  }
  if (!f.iso.empty()) {
    const auto m = switching_isomorphic(g, load_graph(f.iso));
    emit(out, {{"graph", to_json(g)}, {"isomorphic", m.has_value()}, {"map", m ? to_json(*m) : Json()}});
    err << "graph: switching isomorphic: " << (m ? "yes" : "no") << "\n";
    return m ? kHolds : kViolation;
  }
  if (!f.contains.empty()) {
    // The subgraph is matched up to switching; a fixed-orientation match is a
    // stronger condition and is not what this reports.
    const auto m = contains_switching_subgraph(g, load_graph(f.contains));
    emit(out, {{"graph", to_json(g)}, {"contains", m.has_value()}, {"map", m ? to_json(*m) : Json()}});
    err << "graph: contains subgraph up to switching: " << (m ? "yes" : "no") << "\n";
    return m ? kHolds : kViolation;
  }
  emit(out, to_json(g));
  return kHolds;
}

int cmd_lemma(int n, int trials, std::uint64_t seed, std::optional<double> zero_tol,
              std::ostream& out, std::ostream& err) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "lemma needs n >= 2");
  if (trials < 1) throw Error(ErrorKind::InvalidInput, "lemma needs at least one trial");
  if (zero_tol && !(*zero_tol > 0.0)) throw Error(ErrorKind::InvalidInput, "zero tolerance must be positive");
  int failed = 0;
  Json failures = Json::array();
  Json last_signature;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = seeded_generator(seed, static_cast<std::uint64_t>(t));
    const std::vector<Vector3> vs = random_directions(n, rng, 1e-3);
    const LemmaReport report = verify_lemma(vs, zero_tol);
    last_signature = to_json(report.matrix.signature);
    if (report.passed) continue;
    ++failed;
    if (failures.size() < 10) {
      Json vectors = Json::array();
      for (const Vector3& v : vs) vectors.push_back({v.x(), v.y(), v.z()});
      failures.push_back({{"trial", t}, {"vectors", vectors}, {"matrix", to_json(report.matrix)}});
    }
  }
  emit(out, {{"n", n},
             {"trials", trials},
             {"seed", seed},
             {"passed", trials - failed},
             {"failed", failed},
             {"last_signature", last_signature},
             {"failures", failures}});
  err << "lemma: " << trials - failed << "/" << trials << " trials have signature (1," << n - 1
      << ",0)\n";
  return failed == 0 ? kHolds : kViolation;
}

int cmd_paley(const std::vector<int>& corrupt, std::ostream& out, std::ostream& err) {
  SignedCompleteGraph g = paley_17();
  if (!corrupt.empty()) {
    if (corrupt.size() != 2) throw Error(ErrorKind::InvalidInput, "--corrupt takes two vertices");
    g.set_sign(corrupt[0], corrupt[1], -g.sign(corrupt[0], corrupt[1]));
  }
  const MonoCliqueCount count = count_mono_cliques(g, 4);
  const auto witness = find_mono_clique(g, 4);
  emit(out, {{"residues", quadratic_residues_17()},
             {"corrupted_edge", corrupt.empty() ? Json() : Json(corrupt)},
             {"subsets_checked", count.subsets_checked},
             {"monochromatic_k4", count.monochromatic},
             {"witness", witness ? to_json(*witness) : Json()}});
  if (witness) {
    err << count.subsets_checked << " subsets checked, " << count.monochromatic
        << " monochromatic K4\n";
  } else {
    err << count.subsets_checked << " subsets checked, no monochromatic K4\n";
  }
  return witness ? kViolation : kHolds;
}

int cmd_export(const std::string& path, const std::string& format, std::optional<double> radius,
               std::optional<double> length, int segments, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  const LineConfiguration config = configuration_from_json(read_json_file(path));
  const double r = radius.value_or(0.5 * config.target_distance);
  const double len = length.value_or(10.0 * config.target_distance);
  const std::string text =
      format == "obj" ? export_obj(config, r, len, segments) : export_csv(config);
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
    emit(out, {{"format", format}, {"path", out_path}, {"lines", config.size()}, {"radius", r},
               {"length", len}});
  }
  err << "export: " << config.size() << " lines as " << format << "\n";
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit-distance line configurations: verification, search and signed-graph analysis",
               "skewlines"};
  app.require_subcommand(1);

  std::string config_path;
  double tol = kDefaultTol;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a line configuration file");
  verify_cmd->add_option("config", config_path, "Configuration JSON")->required();
  verify_cmd->add_option("--tol", tol, "Absolute distance tolerance")->check(CLI::PositiveNumber);

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Search for a unit-distance configuration");
  solve_cmd->add_option("--options", solve_flags.options_file, "SolverOptions JSON file");
  solve_cmd->add_option("--n", solve_flags.n, "Number of lines (>= 2)");
  solve_cmd->add_option("--seed", solve_flags.seed, "Random seed");
  solve_cmd->add_option("--multistarts", solve_flags.multistarts, "Number of random starts");
  solve_cmd->add_option("--max-iter", solve_flags.max_iterations, "Iterations per start");
  solve_cmd->add_option("--tol", solve_flags.tol, "Accepted distance deviation, relative to target");
  solve_cmd->add_option("--target", solve_flags.target, "Target pairwise distance");
  solve_cmd->add_option("--threads", solve_flags.threads, "Worker threads for the multistart loop");
  solve_cmd->add_option("--residual", solve_flags.residual_form, "Residual form")
      ->check(CLI::IsMember({"distance", "squared"}));
  solve_cmd->add_option("--out", solve_flags.out_path, "Write the configuration JSON here");

  GraphFlags graph_flags;
  auto* graph_cmd = app.add_subcommand("graph", "Analyze a signed complete graph");
  graph_cmd->add_option("graph", graph_flags.file, "Graph JSON file");
  graph_cmd->add_option("--builtin", graph_flags.builtin_name, "Builtin graph name")
      ->check(CLI::IsMember(builtin_names()));
  graph_cmd->add_option("--find-mono", graph_flags.find_mono, "Find a monochromatic K_k");
  graph_cmd->add_option("--mono-possible", graph_flags.mono_possible,
                        "Does some switching have a monochromatic K_k");
  graph_cmd->add_flag("--balance", graph_flags.balance, "Check balance");
  graph_cmd->add_option("--iso", graph_flags.iso,
                        "Switching isomorphism against a graph file or builtin name");
  graph_cmd->add_option("--contains", graph_flags.contains,
                        "Search for a graph file or builtin as an induced subgraph up to switching");

  int lemma_n = 6;
  int lemma_trials = 1000;
  std::uint64_t lemma_seed = 7;
  std::optional<double> lemma_zero_tol;
  auto* lemma_cmd = app.add_subcommand("lemma", "Check the cross-norm signature on random directions");
  lemma_cmd->add_option("--n", lemma_n, "Vectors per trial");
  lemma_cmd->add_option("--trials", lemma_trials, "Number of trials");
  lemma_cmd->add_option("--seed", lemma_seed, "Random seed");
  lemma_cmd->add_option("--zero-tol", lemma_zero_tol,
                        "Absolute zero threshold (default 1e-8 * max(1, max|eigenvalue|))");

  std::vector<int> corrupt;
  auto* paley_cmd = app.add_subcommand("paley", "Check the Paley graph on 17 vertices for monochromatic K4");
  paley_cmd->add_option("--corrupt", corrupt, "Flip the sign of edge {i, j} first")->expected(2);

  std::string export_config;
  std::string export_format = "obj";
  std::optional<double> export_radius;
  std::optional<double> export_length;
  int export_segments = 32;
  std::string export_out;
  auto* export_cmd = app.add_subcommand("export", "Export a configuration as OBJ cylinders or CSV");
  export_cmd->add_option("config", export_config, "Configuration JSON")->required();
  export_cmd->add_option("--format", export_format, "obj or csv")
      ->check(CLI::IsMember({"obj", "csv"}));
  export_cmd->add_option("--radius", export_radius, "Cylinder radius (default target / 2)");
  export_cmd->add_option("--length", export_length, "Cylinder length (default 10 * target)");
  export_cmd->add_option("--segments", export_segments, "Vertices per rim");
  export_cmd->add_option("--out", export_out, "Output file (default standard output)");

  std::vector<std::string> argv_storage{"skewlines"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (*verify_cmd) return cmd_verify(config_path, tol, out, err);
    if (*solve_cmd) return cmd_solve(solve_flags, out, err);
    if (*graph_cmd) return cmd_graph(graph_flags, out, err);
    if (*lemma_cmd) {
      return cmd_lemma(lemma_n, lemma_trials, lemma_seed, lemma_zero_tol, out, err);
    }
    if (*paley_cmd) return cmd_paley(corrupt, out, err);
    if (*export_cmd) {
      return cmd_export(export_config, export_format, export_radius, export_length,
                        export_segments, export_out, out, err);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace skewlines::cli
