#include "linfor/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace linfor {

namespace {

// Minimal-string search over vertex orderings. Appending vertex x at
// position p contributes the column of bits (order[q] ~ x), q < p, at
// upper-triangle offset p(p-1)/2. Invariant at every node: the string
// built so far equals the prefix of best. A column comparing greater is
// pruned; one comparing less lowers best to the new prefix padded with
// ones, which re-establishes the invariant, so reaching depth n always
// means cur == best.
struct MinStringSearch {
  const Graph& g;
  int n;
  int total;
  bool connected_only;
  bool min_degree_start;

  Bitset128 best;
  int order[16] = {};

  MinStringSearch(const Graph& graph, bool conn, bool mds)
      : g(graph),
        n(graph.order()),
        total(graph.order() * (graph.order() - 1) / 2),
        connected_only(conn),
        min_degree_start(mds) {
    best = Bitset128::first_n(total);
  }

  void place(int p, Bitset128 cur, std::uint32_t placed) {
    if (p == n) {
      best = cur;
      return;
    }
    int base = p * (p - 1) / 2;
    int mindeg = min_degree_start ? g.min_degree() : 0;
    for (int x = 0; x < n; ++x) {
      if (placed & (1u << x)) continue;
      if (p == 0) {
        if (min_degree_start && g.degree(x) != mindeg) continue;
      } else if (connected_only) {
        bool touches = false;
        for (int q = 0; q < p && !touches; ++q)
          if (g.has_edge(order[q], x)) touches = true;
        if (!touches) continue;
      }
      Bitset128 next = cur;
      int cmp = 0;  // column vs best: 0 equal, -1 less, +1 greater
      for (int q = 0; q < p; ++q) {
        bool bit = g.has_edge(order[q], x);
        if (bit) next.set(base + q);
        if (cmp == 0 && bit != best.test(base + q)) {
          cmp = bit ? +1 : -1;
          if (cmp > 0) break;
        }
      }
      if (cmp > 0) continue;
      if (cmp < 0)
        best = next | Bitset128::first_n(total).minus(Bitset128::first_n(base + p));
      order[p] = x;
      place(p + 1, next, placed | (1u << x));
    }
  }

  Bitset128 run() {
    place(0, Bitset128{}, 0);
    return best;
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > 8)
    throw EnumerateError("canonical form capped at 8 vertices, got " +
                         std::to_string(g.order()));
  MinStringSearch search(g, false, false);
  return CanonicalForm{g.order(), search.run()};
}

Graph from_canonical(const CanonicalForm& form) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < form.n; ++j)
    for (int i = 0; i < j; ++i)
      if (form.bits.test(tri_index(i, j))) edges.emplace_back(i, j);
  return Graph::from_edges(form.n, edges);
}

namespace detail {

Bitset128 connected_certificate(const Graph& g) {
  if (g.order() > 16)
    throw EnumerateError("connected certificate capped at 16 vertices");
  if (!g.connected())
    throw EnumerateError("connected certificate needs a connected graph");
  MinStringSearch search(g, true, true);
  return search.run();
}

}  // namespace detail

namespace {

Graph attach_vertex(const Graph& parent, std::uint32_t subset) {
  int k = parent.order() + 1;
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < parent.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (parent.has_edge(i, j)) edges.emplace_back(i, j);
  for (int v = 0; v < parent.order(); ++v)
    if (subset & (1u << v)) edges.emplace_back(v, k - 1);
  return Graph::from_edges(k, edges);
}

bool form_bits_less(const Bitset128& a, const Bitset128& b) {
  Bitset128 d = a ^ b;
  int i = d.lowest();
  return i >= 0 && !a.test(i);
}

}  // namespace

std::vector<std::vector<Graph>> connected_levels(int max_n) {
  if (max_n < 1 || max_n > 8)
    throw EnumerateError("connected enumeration capped at 8 vertices, got " +
                         std::to_string(max_n));

  // The levels are deterministic and expensive at order 8, and the survey
  // drivers request them repeatedly; keep the deepest computation so far.
  static std::mutex cache_mutex;
  static std::vector<std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (static_cast<int>(cache.size()) >= max_n)
    return {cache.begin(), cache.begin() + max_n};

  std::vector<std::vector<Graph>> levels = cache;
  if (levels.empty()) levels.push_back({Graph::empty_graph(1)});
  for (int k = static_cast<int>(levels.size()) + 1; k <= max_n; ++k) {
    const auto& parents = levels.back();
    const long nsub = (1l << (k - 1)) - 1;
    std::vector<Bitset128> forms(parents.size() * static_cast<std::size_t>(nsub));

#pragma omp parallel for schedule(dynamic, 64)
    for (long idx = 0; idx < static_cast<long>(forms.size()); ++idx) {
      const Graph& parent = parents[static_cast<std::size_t>(idx / nsub)];
      std::uint32_t subset = static_cast<std::uint32_t>(idx % nsub) + 1;
      forms[static_cast<std::size_t>(idx)] =
          canonical_form(attach_vertex(parent, subset)).bits;
    }

    std::sort(forms.begin(), forms.end(), form_bits_less);
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    std::vector<Graph> level;
    level.reserve(forms.size());
    for (const Bitset128& bits : forms) level.push_back(from_canonical({k, bits}));
    levels.push_back(std::move(level));
  }
  cache = levels;
  return levels;
}

std::vector<Graph> enumerate_connected(int n, const GraphFilter& filter) {
  auto levels = connected_levels(n);
  std::vector<Graph> out;
  for (Graph& g : levels.back())
    if (filter.passes(g)) out.push_back(std::move(g));
  return out;
}

namespace {

// Uniform draw from [0, k) by rejection, fully determined by the mt19937_64
// stream (no implementation-defined std::uniform_int_distribution).
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t k) {
  std::uint64_t threshold = (0 - k) % k;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % k;
  }
}

}  // namespace

Graph random_regular(int n, int r, std::uint64_t seed, int max_attempts) {
  if (n < 1 || n > kMaxOrder)
    throw EnumerateError("random regular order out of range: " + std::to_string(n));
  if (r < 0 || r >= n)
    throw EnumerateError("infeasible degree r=" + std::to_string(r) +
                         " for n=" + std::to_string(n));
  if (static_cast<long>(n) * r % 2 != 0)
    throw EnumerateError("infeasible degree: n*r must be even");
  if (r == 0) return Graph::empty_graph(n);
  // The complete graph is the unique (n-1)-regular graph, and the pairing
  // model's acceptance rate collapses there (about 8e-6 for K_7); return
  // it directly instead of sampling.
  if (r == n - 1) return Graph::complete(n);

  std::mt19937_64 rng(seed);

  // r = n-2 (n even by the parity check): exactly the complements of
  // perfect matchings, another regime where rejection sampling stalls.
  // A uniform matching gives the same distribution the pairing model
  // would, conditioned on simplicity.
  if (r == n - 2) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = perm.size() - 1; i > 0; --i)
      std::swap(perm[i], perm[rand_below(rng, i + 1)]);
    std::vector<int> mate(static_cast<std::size_t>(n));
    for (int k = 0; k + 1 < n; k += 2) {
      mate[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] =
          perm[static_cast<std::size_t>(k + 1)];
      mate[static_cast<std::size_t>(perm[static_cast<std::size_t>(k + 1)])] =
          perm[static_cast<std::size_t>(k)];
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (mate[static_cast<std::size_t>(u)] != v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
  }
  std::vector<int> points(static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < points.size(); ++i)
    points[i] = static_cast<int>(i) / r;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = points.size() - 1; i > 0; --i)
      std::swap(points[i], points[rand_below(rng, i + 1)]);

    Graph g = Graph::empty_graph(n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v || g.has_edge(u, v)) simple = false;
      else g.add_edge(u, v);
    }
    if (simple) return g;
  }
  throw EnumerateError("pairing model failed to produce a simple graph after " +
                       std::to_string(max_attempts) + " attempts");
}

}  // namespace linfor
