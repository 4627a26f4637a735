#include "skewlines/signed_graph.hpp"

#include <algorithm>
#include <numeric>

#include "skewlines/error.hpp"

namespace skewlines {

SignedCompleteGraph::SignedCompleteGraph(int n) : n_(n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidInput, "signed graph needs at least one vertex");
  }
  signs_.assign(static_cast<std::size_t>(n) * n, 1);
  for (int i = 1; i <= n; ++i) signs_[index(i, i)] = 0;  // keeps == and negated() edge-only
}

SignedCompleteGraph SignedCompleteGraph::with_negative_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  SignedCompleteGraph g(n);
  for (const auto& [i, j] : edges) g.set_sign(i, j, Sign::Negative);
  return g;
}

void SignedCompleteGraph::check_pair(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) {
    throw Error(ErrorKind::InvalidInput, "edge {" + std::to_string(i) + "," +
                                             std::to_string(j) + "} is not an edge of K_" +
                                             std::to_string(n_));
  }
}

Sign SignedCompleteGraph::sign(int i, int j) const {
  check_pair(i, j);
  return static_cast<Sign>(signs_[index(i, j)]);
}

void SignedCompleteGraph::set_sign(int i, int j, Sign s) {
  check_pair(i, j);
  signs_[index(i, j)] = static_cast<std::int8_t>(s);
  signs_[index(j, i)] = static_cast<std::int8_t>(s);
}

std::vector<Sign> SignedCompleteGraph::edge_signs() const {
  std::vector<Sign> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) out.push_back(sign(i, j));
  }
  return out;
}

SignedCompleteGraph SignedCompleteGraph::negated() const {
  SignedCompleteGraph g = *this;
  for (auto& s : g.signs_) s = static_cast<std::int8_t>(-s);
  return g;
}

SignedCompleteGraph SignedCompleteGraph::induced(const std::vector<int>& vertices) const {
  const int k = static_cast<int>(vertices.size());
  SignedCompleteGraph g(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) g.set_sign(a + 1, b + 1, sign(vertices[a], vertices[b]));
  }
  return g;
}

SignedCompleteGraph chirality_graph(const LineConfiguration& config) {
  require_pairwise_skew(config);
  SignedCompleteGraph g(config.size());
  for (int i = 0; i < config.size(); ++i) {
    for (int j = i + 1; j < config.size(); ++j) {
      g.set_sign(i + 1, j + 1, chirality(config.lines[i], config.lines[j]));
    }
  }
  return g;
}

namespace {

std::vector<bool> membership(int n, const std::vector<int>& subset) {
  std::vector<bool> in(n + 1, false);
  for (int v : subset) {
    if (v < 1 || v > n) {
      throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " out of range");
    }
    in[v] = true;
  }
  return in;
}

// Switching set that makes vertex 1's star all positive.
std::vector<int> star_normalizer(const SignedCompleteGraph& g) {
  std::vector<int> s;
  for (int j = 2; j <= g.n(); ++j) {
    if (g.sign(1, j) == Sign::Negative) s.push_back(j);
  }
  return s;
}

std::vector<int> symmetric_difference(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Visits k-subsets of {1..n} in lexicographic order until `visit` returns true.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (visit(idx)) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos + 1) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

void require_clique_size(const SignedCompleteGraph& g, int k) {
  if (k < 2 || k > g.n()) {
    throw Error(ErrorKind::InvalidInput, "clique size must lie in [2, n]");
  }
}

}  // namespace

SignedCompleteGraph switch_vertices(const SignedCompleteGraph& g, const std::vector<int>& subset) {
  const std::vector<bool> in = membership(g.n(), subset);
  SignedCompleteGraph out = g;
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      if (in[i] != in[j]) out.set_sign(i, j, -g.sign(i, j));
    }
  }
  return out;
}

SignedCompleteGraph relabel(const SignedCompleteGraph& g, const std::vector<int>& permutation) {
  const int n = g.n();
  std::vector<int> sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(n);
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected) {
    throw Error(ErrorKind::InvalidInput, "not a permutation of 1..n");
  }
  SignedCompleteGraph out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.set_sign(permutation[i - 1], permutation[j - 1], g.sign(i, j));
    }
  }
  return out;
}

bool is_balanced(const SignedCompleteGraph& g) {
  // After switching vertex 1's star positive, σ_j = sign(1, j) and every edge
  // must satisfy sign(i, j) = σ_i σ_j.
  for (int i = 2; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      if (to_int(g.sign(i, j)) != to_int(g.sign(1, i)) * to_int(g.sign(1, j))) return false;
    }
  }
  return true;
}

std::optional<CliqueWitness> find_mono_clique(const SignedCompleteGraph& g, int k) {
  require_clique_size(g, k);
  std::optional<CliqueWitness> found;
  for_each_subset(g.n(), k, [&](const std::vector<int>& s) {
    const Sign first = g.sign(s[0], s[1]);
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (g.sign(s[a], s[b]) != first) return false;
      }
    }
    found = CliqueWitness{s, first};
    return true;
  });
  return found;
}

MonoCliqueCount count_mono_cliques(const SignedCompleteGraph& g, int k) {
  require_clique_size(g, k);
  MonoCliqueCount count;
  for_each_subset(g.n(), k, [&](const std::vector<int>& s) {
    ++count.subsets_checked;
    const Sign first = g.sign(s[0], s[1]);
    bool mono = true;
    for (int a = 0; a < k && mono; ++a) {
      for (int b = a + 1; b < k && mono; ++b) mono = g.sign(s[a], s[b]) == first;
    }
    if (mono) ++count.monochromatic;
    return false;
  });
  return count;
}

bool mono_k_possible(const SignedCompleteGraph& g, int k) {
  require_clique_size(g, k);
  return for_each_subset(g.n(), k, [&](const std::vector<int>& s) {
    const SignedCompleteGraph sub = g.induced(s);
    return is_balanced(sub) || is_balanced(sub.negated());
  });
}

std::optional<SwitchingMap> switching_isomorphic(const SignedCompleteGraph& g1,
                                                 const SignedCompleteGraph& g2) {
  if (g1.n() != g2.n()) return std::nullopt;
  if (g1.n() > 9) {
    throw Error(ErrorKind::TooLarge, "switching isomorphism search is limited to n <= 9");
  }
  const int n = g1.n();
  const std::vector<int> s2 = star_normalizer(g2);
  const SignedCompleteGraph target = switch_vertices(g2, s2);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    const SignedCompleteGraph h = relabel(g1, perm);
    const std::vector<int> sh = star_normalizer(h);
    if (switch_vertices(h, sh) == target) {
      return SwitchingMap{perm, symmetric_difference(sh, s2)};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

// Depth-first extension of an injective map h -> g. sigma[v] is the switching
// sign of h-vertex v; the first vertex is fixed to +1, which loses nothing
// since switching by the full vertex set is the identity.
bool extend_embedding(const SignedCompleteGraph& g, const SignedCompleteGraph& h,
                      std::vector<int>& image, std::vector<int>& sigma, std::vector<bool>& used) {
  const int placed = static_cast<int>(image.size());
  if (placed == h.n()) return true;
  const int v = placed + 1;
  for (int candidate = 1; candidate <= g.n(); ++candidate) {
    if (used[candidate]) continue;
    int s = 1;
    if (placed > 0) {
      s = to_int(g.sign(image[0], candidate)) * to_int(h.sign(1, v)) * sigma[0];
    }
    bool consistent = true;
    for (int u = 1; u <= placed && consistent; ++u) {
      consistent = to_int(h.sign(u, v)) * sigma[u - 1] * s == to_int(g.sign(image[u - 1], candidate));
    }
    if (!consistent) continue;
    image.push_back(candidate);
    sigma.push_back(s);
    used[candidate] = true;
    if (extend_embedding(g, h, image, sigma, used)) return true;
    used[candidate] = false;
    sigma.pop_back();
    image.pop_back();
  }
  return false;
}

}  // namespace

std::optional<SwitchingMap> contains_switching_subgraph(const SignedCompleteGraph& g,
                                                        const SignedCompleteGraph& h) {
  if (g.n() > 10) {
    throw Error(ErrorKind::TooLarge, "subgraph search is limited to n <= 10");
  }
  if (h.n() > g.n()) return std::nullopt;
  std::vector<int> image;
  std::vector<int> sigma;
  std::vector<bool> used(g.n() + 1, false);
  if (!extend_embedding(g, h, image, sigma, used)) return std::nullopt;
  SwitchingMap map{image, {}};
  for (int v = 1; v <= h.n(); ++v) {
    if (sigma[v - 1] < 0) map.switching_set.push_back(v);
  }
  return map;
}

std::vector<int> quadratic_residues_17() {
  std::vector<int> residues;
  for (int x = 1; x < 17; ++x) residues.push_back(x * x % 17);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  return residues;
}

SignedCompleteGraph paley_17() {
  const std::vector<int> residues = quadratic_residues_17();
  SignedCompleteGraph g(17);
  for (int i = 1; i <= 17; ++i) {
    for (int j = i + 1; j <= 17; ++j) {
      const int diff = ((i - j) % 17 + 17) % 17;
      const bool residue = std::binary_search(residues.begin(), residues.end(), diff);
      g.set_sign(i, j, residue ? Sign::Positive : Sign::Negative);
    }
  }
  return g;
}

std::vector<std::string> builtin_names() {
  return {"example1", "blr_graph_a", "blr_graph_b", "blr_canonical", "p250"};
}

SignedCompleteGraph builtin(const std::string& name) {
  if (name == "example1") {
    return SignedCompleteGraph::with_negative_edges(4, {{1, 3}, {2, 4}, {3, 4}});
  }
  if (name == "blr_graph_a") {
    return SignedCompleteGraph::with_negative_edges(
        7, {{1, 2}, {1, 3}, {1, 4}, {1, 7}, {2, 3}, {2, 4}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 7}});
  }
  if (name == "blr_graph_b") {
    return SignedCompleteGraph::with_negative_edges(
        7, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {5, 7}});
  }
  if (name == "blr_canonical") {
    return SignedCompleteGraph::with_negative_edges(7, {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  }
  if (name == "p250") {
    return SignedCompleteGraph::with_negative_edges(7, {{3, 4}, {3, 7}, {4, 5}, {5, 6}, {6, 7}});
  }
  throw Error(ErrorKind::UnknownName, "unknown builtin graph '" + name + "'");
}

}  // namespace skewlines
