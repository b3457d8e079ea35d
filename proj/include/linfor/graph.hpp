#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linfor/bitset128.hpp"

namespace linfor {

inline constexpr int kMaxOrder = 128;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The three vertex-set shapes the solvers optimize over. Every shape is
// hereditary except induced_path, and they chain: an induced path is a
// linear forest, a linear forest is a forest.
enum class Shape { forest, linear_forest, induced_path };

const char* shape_name(Shape s);

// Simple undirected graph on at most 128 vertices, adjacency kept as one
// Bitset128 row per vertex.
class Graph {
 public:
  Graph() = default;

  // Exactly the given edges, duplicates collapsed. Throws GraphError on
  // n > 128, out-of-range endpoints, or self-loops.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph path(int n);                       // n >= 1
  static Graph cycle(int n);                      // n >= 3
  static Graph complete(int n);                   // n >= 1
  static Graph complete_bipartite(int a, int b);  // a, b >= 1
  static Graph empty_graph(int n);                // n >= 1 isolated vertices

  int order() const { return n_; }
  long edge_count() const;
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const Bitset128& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  Bitset128 vertex_mask() const { return Bitset128::first_n(n_); }

  void add_edge(int u, int v);

  Graph complement() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  // r when r-regular, nullopt otherwise. Throws GraphError on n == 0.
  std::optional<int> regularity() const;

  int min_degree() const;  // 0 for the empty graph

  bool shape_check(const Bitset128& s, Shape shape) const;

  std::vector<Bitset128> connected_components() const;
  bool connected() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Bitset128> adj_;
};

struct GraphFamily {
  enum class Kind { path, cycle, complete, complete_bipartite, empty };
  Kind kind;
  int p1 = 0;
  int p2 = 0;  // complete_bipartite only
};

Graph standard(const GraphFamily& family);

}  // namespace linfor
