#include "linfor/bounds.hpp"

namespace linfor {

Rational caro_wei_t(const Graph& g) {
  Rational t = 0;
  for (int v = 0; v < g.order(); ++v) t += Rational(1, g.degree(v) + 1);
  return t;
}

Rational f_ratio(const Graph& g, int lif_value) {
  if (g.order() == 0) throw BoundsError("f ratio undefined on the empty graph");
  Rational f = Rational(lif_value) / caro_wei_t(g);
  if (f < 1) throw std::logic_error("f ratio below 1 contradicts the independence bound");
  return f;
}

Rational lif_regular_lower_bound(int n, int r) {
  if (n < 1 || r < 0 || r >= n)
    throw BoundsError("bad regular bound parameters n=" + std::to_string(n) +
                      " r=" + std::to_string(r));
  return Rational(2 * n, r + 1);
}

long long lip_order_lower_bound(int r, int k) {
  if (r < 1 || k < 1)
    throw BoundsError("bad order bound parameters r=" + std::to_string(r) +
                      " k=" + std::to_string(k));
  BigInt c = ceil_rat(Rational(-2 * (k - 1), r));
  BigInt bound = 2 * k + c;
  if (r % 2 != 0 && c % 2 != 0) bound += 1;  // parity correction
  return bound.convert_to<long long>();
}

Rational lip_upper_bound(int n, int r) {
  if (r < 2 || n < 1)
    throw BoundsError("bad upper bound parameters n=" + std::to_string(n) +
                      " r=" + std::to_string(r));
  return Rational(static_cast<long long>(r) * n - 2, 2 * r - 2);
}

std::vector<BoundReport> misc_lower_bounds(const Graph& g, std::optional<int> exact_a) {
  std::vector<BoundReport> out;

  {
    BoundReport b;
    b.name = "(8n-2m-2)/9";
    b.value = Rational(8 * static_cast<long long>(g.order()) - 2 * g.edge_count() - 2, 9);
    b.applicable = g.order() > 0 && g.connected();
    b.trivial = b.value <= 0;
    if (exact_a) b.holds = !b.applicable || Rational(*exact_a) >= b.value;
    out.push_back(std::move(b));
  }
  {
    BoundReport b;
    b.name = "2t(G)";
    b.value = 2 * caro_wei_t(g);
    b.applicable = g.order() > 0 && g.min_degree() >= 1;
    b.trivial = b.value <= 0;
    if (exact_a) b.holds = !b.applicable || Rational(*exact_a) >= b.value;
    out.push_back(std::move(b));
  }
  return out;
}

NordhausGaddumReport nordhaus_gaddum_check(const Graph& g, int value_g, int value_comp) {
  NordhausGaddumReport rep;
  rep.n = g.order();
  rep.sum = value_g + value_comp;
  rep.limit = rep.n + 4;
  rep.holds = rep.sum <= rep.limit;
  rep.equality = rep.sum == rep.limit;
  return rep;
}

// Both constructions start from a path P = p_1..p_r joined completely to
// r-2 extra vertices s_1..s_{r-2}, then delete a matching between the s_i
// and interior path vertices and finish the remaining degree deficits with
// one (even r) or two (odd r) special vertices.
ExtremalConstruction construct_extremal_lip(int r) {
  if (r < 2) throw BoundsError("extremal construction needs r >= 2");

  ExtremalConstruction c;
  c.r = r;
  c.even_case = r % 2 == 0;
  c.expected_order = static_cast<int>(lip_order_lower_bound(r, r));

  std::vector<std::pair<int, int>> edges;
  auto path_edges = [&]() {
    for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
  };

  if (c.even_case) {
    // Vertices: p_1..p_r = 0..r-1, v = r, s_1..s_{r-2} = r+1..2r-2.
    int n = 2 * r - 1;
    int v = r;
    auto s = [&](int i) { return r + i; };  // i = 1..r-2
    path_edges();
    for (int i = 1; i <= r - 2; ++i)
      for (int p = 0; p < r; ++p) edges.emplace_back(s(i), p);
    // Delete the matching p_{i+1} ~ s_i, i = 1..(r-2)/2, then give v those
    // endpoints plus both path ends.
    std::vector<std::pair<int, int>> kept;
    for (auto e : edges) {
      bool drop = false;
      for (int i = 1; i <= (r - 2) / 2; ++i)
        if ((e.first == s(i) && e.second == i) || (e.first == i && e.second == s(i)))
          drop = true;
      if (!drop) kept.push_back(e);
    }
    edges = std::move(kept);
    for (int i = 1; i <= (r - 2) / 2; ++i) {
      edges.emplace_back(v, i);     // p_{i+1}
      edges.emplace_back(v, s(i));  // s_i
    }
    edges.emplace_back(v, 0);
    edges.emplace_back(v, r - 1);
    c.graph = Graph::from_edges(n, edges);
  } else {
    // Vertices: p_1..p_r = 0..r-1, u = r, w = r+1, s_1..s_{r-2} = r+2..2r-1.
    int n = 2 * r;
    int u = r, w = r + 1;
    auto s = [&](int i) { return r + 1 + i; };  // i = 1..r-2
    path_edges();
    for (int i = 1; i <= r - 2; ++i)
      for (int p = 0; p < r; ++p) edges.emplace_back(s(i), p);
    // Delete the perfect matching p_{i+1} ~ s_i, i = 1..r-2, saturating the
    // interior of P.
    std::vector<std::pair<int, int>> kept;
    for (auto e : edges) {
      bool drop = false;
      for (int i = 1; i <= r - 2; ++i)
        if ((e.first == s(i) && e.second == i) || (e.first == i && e.second == s(i)))
          drop = true;
      if (!drop) kept.push_back(e);
    }
    edges = std::move(kept);
    edges.emplace_back(w, u);
    for (int i = 1; i <= r - 2; ++i) edges.emplace_back(w, s(i));
    for (int p = 1; p <= r - 2; ++p) edges.emplace_back(u, p);  // interior of P
    edges.emplace_back(u, 0);
    edges.emplace_back(w, r - 1);
    c.graph = Graph::from_edges(n, edges);
  }

  auto reg = c.graph.regularity();
  if (!reg || *reg != r)
    throw ConstructionNotRegular(
        r, "extremal construction for r=" + std::to_string(r) + " is not " +
               std::to_string(r) + "-regular");
  c.verified_regular = true;
  if (c.graph.order() != c.expected_order)
    throw ConstructionNotRegular(
        r, "extremal construction for r=" + std::to_string(r) + " has order " +
               std::to_string(c.graph.order()) + ", expected " +
               std::to_string(c.expected_order));
  return c;
}

void fill_extremal_lip(ExtremalConstruction& c, const SearchBudget& budget) {
  SolveResult res = longest_induced_path(c.graph, budget);
  if (!res.optimal) return;
  c.lip_value = res.value;
  c.lip_matches_r = res.value == c.r;
}

}  // namespace linfor
