#include "linfor/solve.hpp"

#include <array>
#include <chrono>

namespace linfor {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
  std::uint64_t node_limit;
  double time_limit;
  Clock::time_point t0;
  std::uint64_t nodes = 0;
  bool aborted = false;

  explicit BudgetState(const SearchBudget& b)
      : node_limit(b.node_limit), time_limit(b.time_limit_seconds), t0(Clock::now()) {}

  // Returns false once the budget is exhausted.
  bool tick() {
    ++nodes;
    if (node_limit && nodes > node_limit) aborted = true;
    if (time_limit > 0 && (nodes & 0xfff) == 0 &&
        std::chrono::duration<double>(Clock::now() - t0).count() > time_limit)
      aborted = true;
    return !aborted;
  }

  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }
};

// Include/exclude branch and bound over vertices in index order, include
// tried first and best updated on every include. With the bound
// "chosen + undecided <= best" pruning ties only, the first witness
// reaching the optimum is the set-lexicographically smallest one.
struct SubsetBnB {
  const Graph& g;
  int n;
  bool linear;  // degree <= 2 constraint on top of acyclicity
  BudgetState budget;

  int best = 0;
  Bitset128 best_set;
  Bitset128 chosen;

  SubsetBnB(const Graph& graph, bool linear_forest, const SearchBudget& b)
      : g(graph), n(graph.order()), linear(linear_forest), budget(b) {}

  static int find_root(std::array<std::uint8_t, kMaxOrder>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void dfs(int v, int size, std::array<std::uint8_t, kMaxOrder> parent,
           std::array<std::uint8_t, kMaxOrder> deg) {
    if (!budget.tick()) return;
    if (size + (n - v) <= best) return;  // cannot beat best, ties not needed
    // v < n is guaranteed: size + (n - v) > best >= size forces v < n.

    // Include v when chosen ∪ {v} still induces the target shape.
    Bitset128 nb = g.neighbors(v) & chosen;
    int k = nb.count();
    bool feasible = true;
    if (linear && k > 2) feasible = false;
    if (feasible && linear) {
      nb.for_each([&](int u) {
        if (deg[static_cast<std::size_t>(u)] >= 2) feasible = false;
      });
    }
    if (feasible && k >= 2) {
      // No two chosen neighbors may share a component (cycle closure).
      Bitset128 seen_roots;
      nb.for_each([&](int u) {
        if (!feasible) return;
        int r = find_root(parent, u);
        if (seen_roots.test(r)) feasible = false;
        seen_roots.set(r);
      });
    }
    if (feasible) {
      auto parent2 = parent;
      auto deg2 = deg;
      parent2[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
      deg2[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(k);
      nb.for_each([&](int u) {
        ++deg2[static_cast<std::size_t>(u)];
        int ru = find_root(parent2, u), rv = find_root(parent2, v);
        parent2[static_cast<std::size_t>(ru)] = static_cast<std::uint8_t>(rv);
      });
      chosen.set(v);
      if (size + 1 > best) {
        best = size + 1;
        best_set = chosen;
      }
      dfs(v + 1, size + 1, parent2, deg2);
      chosen.reset(v);
    }
    if (budget.aborted) return;
    dfs(v + 1, size, parent, deg);
  }

  SolveResult run() {
    std::array<std::uint8_t, kMaxOrder> parent{};
    std::array<std::uint8_t, kMaxOrder> deg{};
    if (n > 0) dfs(0, 0, parent, deg);
    SolveResult res;
    res.value = best;
    res.witness = best_set;
    res.stats.nodes = budget.nodes;
    res.stats.seconds = budget.seconds();
    res.optimal = !budget.aborted;
    return res;
  }
};

// Grows an induced path at its head. avail holds vertices still usable as
// future extensions: not on the path and not adjacent to any non-head path
// vertex. Pruning is strict (size + |avail| < best) so every optimal path
// is still visited and the lex-smallest witness can be kept.
struct PathDfs {
  const Graph& g;
  int n;
  BudgetState budget;

  int best = 0;
  Bitset128 best_set;

  PathDfs(const Graph& graph, const SearchBudget& b) : g(graph), n(graph.order()), budget(b) {}

  void dfs(Bitset128 path, int size, int head, Bitset128 avail) {
    if (!budget.tick()) return;
    if (size > best || (size == best && Bitset128::lex_less(path, best_set))) {
      best = size;
      best_set = path;
    }
    if (size + avail.count() < best) return;
    Bitset128 cand = avail & g.neighbors(head);
    Bitset128 blocked = g.neighbors(head);
    cand.for_each([&](int w) {
      if (budget.aborted) return;
      Bitset128 next_avail = avail.minus(blocked);
      next_avail.reset(w);
      path.set(w);
      dfs(path, size + 1, w, next_avail);
      path.reset(w);
    });
  }

  SolveResult run() {
    for (int s = 0; s < n && !budget.aborted; ++s) {
      Bitset128 avail = Bitset128::first_n(n);
      avail.reset(s);
      dfs(Bitset128::single(s), 1, s, avail);
    }
    SolveResult res;
    res.value = best;
    res.witness = best_set;
    res.stats.nodes = budget.nodes;
    res.stats.seconds = budget.seconds();
    res.optimal = !budget.aborted;
    return res;
  }
};

void validate_witness(const Graph& g, Shape shape, const SolveResult& res) {
  if (res.witness.count() != res.value)
    throw std::logic_error("solver witness size disagrees with reported value");
  bool empty_ok = res.value == 0 && shape != Shape::induced_path;
  if (!empty_ok && !g.shape_check(res.witness, shape))
    throw std::logic_error("solver witness failed shape validation");
  if (res.value == 0 && shape != Shape::induced_path && !res.witness.none())
    throw std::logic_error("nonempty witness with value 0");
}

}  // namespace

SolveResult max_induced_forest(const Graph& g, const SearchBudget& budget) {
  SubsetBnB search(g, false, budget);
  SolveResult res = search.run();
  validate_witness(g, Shape::forest, res);
  return res;
}

SolveResult max_induced_linear_forest(const Graph& g, const SearchBudget& budget) {
  SubsetBnB search(g, true, budget);
  SolveResult res = search.run();
  validate_witness(g, Shape::linear_forest, res);
  return res;
}

SolveResult longest_induced_path(const Graph& g, const SearchBudget& budget) {
  if (g.order() == 0)
    throw SolveError("longest induced path is undefined on the empty graph");
  PathDfs search(g, budget);
  // Seed with the lex-smallest singleton so even a tiny budget returns a
  // valid path.
  search.best = 1;
  search.best_set = Bitset128::single(0);
  SolveResult res = search.run();
  validate_witness(g, Shape::induced_path, res);
  return res;
}

SolveResult solve_shape(const Graph& g, Shape shape, const SearchBudget& budget) {
  switch (shape) {
    case Shape::forest: return max_induced_forest(g, budget);
    case Shape::linear_forest: return max_induced_linear_forest(g, budget);
    case Shape::induced_path: return longest_induced_path(g, budget);
  }
  throw SolveError("unknown shape");
}

SolveResult oracle_subset_scan(const Graph& g, Shape shape) {
  int n = g.order();
  if (n > 24)
    throw SolveError("subset-scan oracle capped at 24 vertices, got " + std::to_string(n));
  if (n == 0 && shape == Shape::induced_path)
    throw SolveError("longest induced path is undefined on the empty graph");
  auto t0 = Clock::now();
  int best = -1;
  Bitset128 best_set;
  std::uint64_t total = 1ull << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Bitset128 s{mask, 0};
    if (!g.shape_check(s, shape)) continue;
    int c = s.count();
    if (c > best || (c == best && Bitset128::lex_less(s, best_set))) {
      best = c;
      best_set = s;
    }
  }
  SolveResult res;
  res.value = best < 0 ? 0 : best;
  res.witness = best_set;
  res.stats.nodes = total;
  res.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  validate_witness(g, shape, res);
  return res;
}

}  // namespace linfor
