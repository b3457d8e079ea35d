#include "linfor/greedy.hpp"

#include <cassert>

namespace linfor {

namespace {

// Walks the induced path containing u inside part; true when it reaches w.
// Parts stay linear forests throughout, so the walk is linear time.
bool same_induced_path(const Graph& g, const Bitset128& part, int u, int w) {
  Bitset128 comp = Bitset128::single(u);
  Bitset128 frontier = comp;
  while (frontier.any()) {
    Bitset128 next;
    frontier.for_each([&](int x) { next |= g.neighbors(x) & part; });
    frontier = next.minus(comp);
    comp |= frontier;
  }
  return comp.test(w);
}

}  // namespace

bool can_extend_linear_forest(const Graph& g, const Bitset128& part, int v) {
  Bitset128 nb = g.neighbors(v) & part;
  int k = nb.count();
  if (k > 2) return false;
  bool ok = true;
  nb.for_each([&](int u) {
    if ((g.neighbors(u) & part).count() >= 2) ok = false;
  });
  if (!ok) return false;
  if (k == 2) {
    int u = nb.lowest();
    Bitset128 rest = nb;
    rest.reset(u);
    if (same_induced_path(g, part, u, rest.lowest())) return false;
  }
  return true;
}

PartitionResult greedy_partition(const Graph& g) {
  const int n = g.order();
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  const std::uint64_t fuel =
      static_cast<std::uint64_t>(n) * n * n * (static_cast<std::uint64_t>(maxdeg) + 1) + 16;

  PartitionResult res;
  Bitset128 pool = g.vertex_mask();
  std::vector<Bitset128>& parts = res.parts;
  std::uint64_t steps = 0;

  auto burn = [&](const char* where) {
    if (++steps > fuel)
      throw FuelExhausted(std::string("greedy partition fuel exhausted during ") + where);
  };

  while (pool.any()) {
    parts.emplace_back();
    Bitset128& cur = parts.back();

    for (;;) {
      // Lowest pool vertex that keeps the part a linear forest.
      int added = -1;
      pool.for_each([&](int v) {
        if (added < 0 && can_extend_linear_forest(g, cur, v)) added = v;
      });
      if (added < 0) break;
      pool.reset(added);
      cur.set(added);
      burn("add");

      // Swap rule: w outside with exactly one neighbor t inside and
      // d_cur(t) = 2. Returning t and taking w keeps the size and removes
      // two induced edges, so the inner loop terminates.
      for (;;) {
        int w_found = -1, t_found = -1;
        pool.for_each([&](int w) {
          if (w_found >= 0) return;
          Bitset128 nb = g.neighbors(w) & cur;
          if (nb.count() != 1) return;
          int t = nb.lowest();
          if ((g.neighbors(t) & cur).count() == 2) {
            w_found = w;
            t_found = t;
          }
        });
        if (w_found < 0) break;
        cur.reset(t_found);
        pool.set(t_found);
        pool.reset(w_found);
        cur.set(w_found);
        burn("swap");
        assert(g.shape_check(cur, Shape::linear_forest));
      }
    }

    // Restart rule: if some earlier part is now smaller than this one,
    // promote this part into the earliest such slot and dissolve the rest.
    int j = static_cast<int>(parts.size()) - 1;
    int k0 = -1;
    for (int k = 0; k < j; ++k)
      if (parts[static_cast<std::size_t>(k)].count() < cur.count()) {
        k0 = k;
        break;
      }
    if (k0 >= 0) {
      std::swap(parts[static_cast<std::size_t>(k0)], parts[static_cast<std::size_t>(j)]);
      for (int k = k0 + 1; k <= j; ++k) pool |= parts[static_cast<std::size_t>(k)];
      parts.resize(static_cast<std::size_t>(k0) + 1);
      burn("restart");
    }
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    assert(g.shape_check(parts[i], Shape::linear_forest));
    assert(i == 0 || parts[i - 1].count() >= parts[i].count());
  }

  res.steps = steps;
  if (!parts.empty()) res.certified = parts.front();
  if (n > 0) {
    // The 2n/(r+1) guarantee concerns graphs with edges; at r = 0 it would
    // exceed n.
    if (auto r = g.regularity(); r && *r >= 1) res.bound = Rational(2 * n, *r + 1);
  }
  return res;
}

ClaimsReport verify_claims(const Graph& g, const PartitionResult& result) {
  ClaimsReport rep;
  const auto& parts = result.parts;
  const int k = static_cast<int>(parts.size());

  for (int i = 1; i < k; ++i) {
    parts[static_cast<std::size_t>(i)].for_each([&](int v) {
      for (int j = 0; j < i; ++j) {
        int c = (g.neighbors(v) & parts[static_cast<std::size_t>(j)]).count();
        if (c < 2) {
          rep.cross_degrees_ok = false;
          rep.violations.push_back({v, i, j, c});
        }
        if (can_extend_linear_forest(g, parts[static_cast<std::size_t>(j)], v)) {
          rep.maximality_ok = false;
          rep.maximality_violations.emplace_back(v, j);
        }
      }
    });
  }

  if (g.order() > 0 && k >= 2) {
    if (auto r = g.regularity(); r && 2 * (k - 1) == *r) {
      rep.tight_case = true;
      const Bitset128& last = parts.back();
      last.for_each([&](int v) {
        if ((g.neighbors(v) & last).any()) rep.last_part_independent = false;
      });
      rep.size_ratio_ok =
          parts[static_cast<std::size_t>(k) - 2].count() >= 2 * last.count();
    }
  }
  return rep;
}

}  // namespace linfor
