#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewlines/configuration.hpp"
#include "skewlines/geometry.hpp"

namespace skewlines {

/// Complete graph on vertices 1..n with a ±1 sign on every edge.
class SignedCompleteGraph {
 public:
  /// All-positive K_n. Throws InvalidInput for n < 1.
  explicit SignedCompleteGraph(int n);

  /// Builds K_n with the listed 1-based edges negative and the rest positive.
  static SignedCompleteGraph with_negative_edges(int n,
                                                 const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  Sign sign(int i, int j) const;
  void set_sign(int i, int j, Sign s);

  /// Signs in lexicographic pair order (1,2), (1,3), ..., (n-1,n).
  std::vector<Sign> edge_signs() const;

  SignedCompleteGraph negated() const;

  /// Induced subgraph on the given 1-based vertices, relabeled 1..k in order.
  SignedCompleteGraph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const SignedCompleteGraph&, const SignedCompleteGraph&) = default;

 private:
  void check_pair(int i, int j) const;
  int index(int i, int j) const { return (i - 1) * n_ + (j - 1); }

  int n_;
  std::vector<std::int8_t> signs_;  // full n×n, diagonal unused
};

struct CliqueWitness {
  std::vector<int> vertices;  // sorted, 1-based
  Sign sign = Sign::Positive;
};

/// A relabeling plus switching set (both 1-based).
struct SwitchingMap {
  /// permutation[i-1] is the image of vertex i.
  std::vector<int> permutation;
  std::vector<int> switching_set;
};

/// Edge {i,j} carries chirality(L_i, L_j). Throws CoplanarPair.
SignedCompleteGraph chirality_graph(const LineConfiguration& config);

/// Negates every edge with exactly one endpoint in `subset`.
SignedCompleteGraph switch_vertices(const SignedCompleteGraph& g, const std::vector<int>& subset);

/// Vertex i of g becomes vertex permutation[i-1].
SignedCompleteGraph relabel(const SignedCompleteGraph& g, const std::vector<int>& permutation);

bool is_balanced(const SignedCompleteGraph& g);

/// Lexicographically first k-subset whose induced edges share one sign.
std::optional<CliqueWitness> find_mono_clique(const SignedCompleteGraph& g, int k);

struct MonoCliqueCount {
  long subsets_checked = 0;
  long monochromatic = 0;
};

/// Scans every k-subset and counts the monochromatic ones.
MonoCliqueCount count_mono_cliques(const SignedCompleteGraph& g, int k);

/// Does some switching of g contain a monochromatic K_k?
bool mono_k_possible(const SignedCompleteGraph& g, int k);

/// Permutation π and switching set s with switch(relabel(g1, π), s) == g2.
/// Throws TooLarge for n > 9.
std::optional<SwitchingMap> switching_isomorphic(const SignedCompleteGraph& g1,
                                                 const SignedCompleteGraph& g2);

/// Injective map φ from h's vertices into g's plus a switching set s on h
/// such that switch(h, s) has the same signs as g restricted to φ's image.
/// `permutation` holds φ(1), ..., φ(h.n). Throws TooLarge for g.n > 10.
std::optional<SwitchingMap> contains_switching_subgraph(const SignedCompleteGraph& g,
                                                        const SignedCompleteGraph& h);

/// Quadratic residues mod 17: {1, 2, 4, 8, 9, 13, 15, 16}.
std::vector<int> quadratic_residues_17();

/// K_17 with {i,j} positive iff (i - j) mod 17 is a quadratic residue.
SignedCompleteGraph paley_17();

/// Named fixtures: example1, blr_graph_a, blr_graph_b, blr_canonical, p250.
SignedCompleteGraph builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace skewlines
