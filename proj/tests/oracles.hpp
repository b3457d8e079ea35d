#pragma once

// Deliberately independent re-implementations used to cross-check the
// library: adjacency lists instead of bitsets, recursion instead of
// union-find, plain subset scans instead of branch-and-bound. Slow on
// purpose; keep the inputs small.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "linfor/graph.hpp"

namespace oracles {

// Adjacency-list view of a library graph.
inline std::vector<std::vector<int>> adj_lists(const linfor::Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (g.has_edge(u, v)) adj[u].push_back(v);
  return adj;
}

// DFS cycle detection on the subgraph induced by `in`.
inline bool induced_acyclic(const std::vector<std::vector<int>>& adj, const std::vector<char>& in) {
  int n = static_cast<int>(adj.size());
  std::vector<int> state(n, 0);  // 0 unseen, 1 done
  for (int s = 0; s < n; ++s) {
    if (!in[s] || state[s]) continue;
    // Iterative DFS carrying the parent; a visited non-parent neighbour
    // inside the subset closes a cycle.
    std::vector<std::pair<int, int>> stack{{s, -1}};
    std::vector<int> seen;
    state[s] = 1;
    seen.push_back(s);
    while (!stack.empty()) {
      auto [u, parent] = stack.back();
      stack.pop_back();
      int parent_edges = 0;
      for (int v : adj[u]) {
        if (!in[v]) continue;
        if (v == parent && parent_edges == 0) {
          ++parent_edges;  // the tree edge back to the parent, once
          continue;
        }
        if (state[v]) return false;
        state[v] = 1;
        seen.push_back(v);
        stack.push_back({v, u});
      }
    }
    (void)seen;
  }
  return true;
}

// Degree of u inside the subset.
inline int induced_degree(const std::vector<std::vector<int>>& adj, const std::vector<char>& in,
                          int u) {
  int d = 0;
  for (int v : adj[u])
    if (in[v]) ++d;
  return d;
}

// Is the subgraph induced by `in` connected (vacuously true when empty)?
inline bool induced_connected(const std::vector<std::vector<int>>& adj,
                              const std::vector<char>& in) {
  int n = static_cast<int>(adj.size());
  int start = -1, count = 0;
  for (int v = 0; v < n; ++v)
    if (in[v]) {
      if (start < 0) start = v;
      ++count;
    }
  if (count == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (in[v] && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == count;
}

// Shape predicate written against the definitions: forest = acyclic;
// linear forest = acyclic with all induced degrees <= 2; induced path =
// nonempty, connected, acyclic, degrees <= 2 (equivalently one component
// that is a path).
inline bool naive_shape_check(const linfor::Graph& g, const std::vector<int>& subset,
                              linfor::Shape shape) {
  auto adj = adj_lists(g);
  std::vector<char> in(g.order(), 0);
  for (int v : subset) in[v] = 1;

  bool acyclic = induced_acyclic(adj, in);
  if (shape == linfor::Shape::forest) return acyclic;

  bool deg_ok = true;
  for (int v : subset)
    if (induced_degree(adj, in, v) > 2) deg_ok = false;
  if (shape == linfor::Shape::linear_forest) return acyclic && deg_ok;

  return !subset.empty() && acyclic && deg_ok && induced_connected(adj, in);
}

// Largest subset passing the shape predicate, by scanning all 2^n subsets;
// ties broken toward the set containing the smallest excluded... rather:
// the set whose sorted vertex list is smallest, i.e. the one containing
// the smallest vertex on which two candidate sets differ.
struct NaiveBest {
  int value = 0;
  std::vector<int> witness;
  bool found = false;
};

inline bool set_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  // Both sorted ascending, same size: the set containing the smallest
  // differing vertex wins.
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

inline NaiveBest naive_largest(const linfor::Graph& g, linfor::Shape shape) {
  int n = g.order();
  NaiveBest best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) subset.push_back(v);
    if (!naive_shape_check(g, subset, shape)) continue;
    int size = static_cast<int>(subset.size());
    if (!best.found || size > best.value ||
        (size == best.value && set_lex_less(subset, best.witness))) {
      best.value = size;
      best.witness = subset;
      best.found = true;
    }
  }
  return best;
}

// Largest independent set by subset scan.
inline int naive_independence_number(const linfor::Graph& g) {
  int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.has_edge(u, v)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Number of isomorphism classes of connected graphs of order n, by
// scanning all labeled graphs and collecting one sorted-degree... no:
// collecting the set of canonical adjacency strings computed by brute
// force over all n! labelings. Independent of the library's
// canonicalization search.
inline std::uint64_t brute_connected_class_count(int n) {
  std::vector<int> perm(n);
  std::set<std::vector<char>> classes;
  int bits = n * (n - 1) / 2;
  auto edge_bit = [&](const std::vector<char>& e, int i, int j) -> char {
    if (i > j) std::swap(i, j);
    return e[static_cast<std::size_t>(j * (j - 1) / 2 + i)];
  };
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    std::vector<char> edges(bits);
    for (int b = 0; b < bits; ++b) edges[b] = (mask >> b) & 1;

    // Connectivity of this labeled graph.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = n > 0 ? 1 : 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (v != u && !seen[v] && edge_bit(edges, u, v)) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != n) continue;

    // Minimum relabeling over all permutations.
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<char> minimal;
    do {
      std::vector<char> relabeled(bits);
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          relabeled[static_cast<std::size_t>(j * (j - 1) / 2 + i)] =
              edge_bit(edges, perm[i], perm[j]);
      if (minimal.empty() || relabeled < minimal) minimal = relabeled;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(minimal);
  }
  return classes.size();
}

}  // namespace oracles
