#include "linfor/graph.hpp"

#include <algorithm>
#include <array>

namespace linfor {

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::forest: return "forest";
    case Shape::linear_forest: return "linear_forest";
    case Shape::induced_path: return "induced_path";
  }
  return "?";
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxOrder)
    throw GraphError("graph order out of range: " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), Bitset128{});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

Graph Graph::path(int n) {
  if (n < 1) throw GraphError("path order must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("cycle order must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges(n, e);
}

Graph Graph::complete(int n) {
  if (n < 1) throw GraphError("complete graph order must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edges(n, e);
}

Graph Graph::complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw GraphError("complete bipartite parts must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return from_edges(a + b, e);
}

Graph Graph::empty_graph(int n) {
  if (n < 1) throw GraphError("empty graph order must be >= 1");
  return from_edges(n, {});
}

Graph standard(const GraphFamily& family) {
  switch (family.kind) {
    case GraphFamily::Kind::path: return Graph::path(family.p1);
    case GraphFamily::Kind::cycle: return Graph::cycle(family.p1);
    case GraphFamily::Kind::complete: return Graph::complete(family.p1);
    case GraphFamily::Kind::complete_bipartite:
      return Graph::complete_bipartite(family.p1, family.p2);
    case GraphFamily::Kind::empty: return Graph::empty_graph(family.p1);
  }
  throw GraphError("unknown graph family");
}

long Graph::edge_count() const {
  long deg_sum = 0;
  for (int v = 0; v < n_; ++v) deg_sum += degree(v);
  return deg_sum / 2;
}

Graph Graph::complement() const {
  Graph g;
  g.n_ = n_;
  g.adj_.assign(static_cast<std::size_t>(n_), Bitset128{});
  Bitset128 all = vertex_mask();
  for (int v = 0; v < n_; ++v) {
    g.adj_[v] = all.minus(adj_[v]);
    g.adj_[v].reset(v);
  }
  return g;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d.push_back(degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::optional<int> Graph::regularity() const {
  if (n_ == 0) throw GraphError("regularity undefined for the empty graph");
  int r = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != r) return std::nullopt;
  return r;
}

int Graph::min_degree() const {
  int md = n_ > 0 ? degree(0) : 0;
  for (int v = 1; v < n_; ++v) md = std::min(md, degree(v));
  return md;
}

namespace {

int uf_find(std::array<std::uint8_t, kMaxOrder>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[parent[static_cast<std::size_t>(x)]];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

bool Graph::shape_check(const Bitset128& s, Shape shape) const {
  // The empty set induces a forest (and a linear forest) but not a path.
  int size = s.count();
  if (size == 0) return shape != Shape::induced_path;

  if (shape != Shape::forest) {
    bool ok = true;
    s.for_each([&](int v) {
      if ((adj_[static_cast<std::size_t>(v)] & s).count() > 2) ok = false;
    });
    if (!ok) return false;
  }

  // Acyclicity by union-find over the induced edges; also yields the
  // component count for the path case (acyclic => comps = size - edges).
  std::array<std::uint8_t, kMaxOrder> parent{};
  s.for_each([&](int v) { parent[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v); });
  bool acyclic = true;
  int edges = 0;
  s.for_each([&](int v) {
    if (!acyclic) return;
    Bitset128 lower = adj_[static_cast<std::size_t>(v)] & s & Bitset128::first_n(v);
    lower.for_each([&](int u) {
      if (!acyclic) return;
      int ru = uf_find(parent, u), rv = uf_find(parent, v);
      if (ru == rv) {
        acyclic = false;
        return;
      }
      parent[static_cast<std::size_t>(ru)] = static_cast<std::uint8_t>(rv);
      ++edges;
    });
  });
  if (!acyclic) return false;
  if (shape == Shape::induced_path) return size - edges == 1;
  return true;
}

std::vector<Bitset128> Graph::connected_components() const {
  std::vector<Bitset128> comps;
  Bitset128 unvisited = vertex_mask();
  while (unvisited.any()) {
    int start = unvisited.lowest();
    Bitset128 comp = Bitset128::single(start);
    Bitset128 frontier = comp;
    while (frontier.any()) {
      Bitset128 next;
      frontier.for_each([&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
      frontier = next.minus(comp);
      comp |= frontier;
    }
    comps.push_back(comp);
    unvisited = unvisited.minus(comp);
  }
  return comps;
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  return connected_components().size() == 1;
}

}  // namespace linfor
