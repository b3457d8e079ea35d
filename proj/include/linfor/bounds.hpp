#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linfor/graph.hpp"
#include "linfor/rational.hpp"
#include "linfor/solve.hpp"

namespace linfor {

struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// t(G) = sum over vertices of 1/(deg + 1), exact.
Rational caro_wei_t(const Graph& g);

// f(G) = LIF(G) / t(G); lif_value must be the exact optimum. >= 1 always
// (an independent set of size >= ceil(t) is a linear forest).
Rational f_ratio(const Graph& g, int lif_value);

// Guarantee for the certified part of the greedy partition on r-regular
// graphs: LIF >= 2n/(r+1), sharp on complete graphs.
Rational lif_regular_lower_bound(int n, int r);

// Minimum order of an r-regular graph containing an induced path on k
// vertices: 2k + ceil(-2(k-1)/r), plus one when r and that ceiling are
// both odd (handshake parity).
long long lip_order_lower_bound(int r, int k);

// k <= (rn - 2) / (2r - 2) for any r-regular graph of order n, r >= 2.
Rational lip_upper_bound(int n, int r);

struct BoundReport {
  std::string name;
  Rational value;
  bool applicable = true;  // the bound's hypothesis holds for this graph
  bool trivial = false;    // value <= 0, satisfied vacuously
  std::optional<bool> holds;  // checked against the exact value when supplied
};

// Classical decycling-style lower bounds on the max induced forest:
// (8n - 2m - 2)/9 for connected graphs, and 2 t(G) for minimum degree >= 1.
std::vector<BoundReport> misc_lower_bounds(const Graph& g,
                                           std::optional<int> exact_a = std::nullopt);

struct NordhausGaddumReport {
  int n = 0;
  int sum = 0;
  int limit = 0;  // n + 4
  bool holds = false;
  bool equality = false;
};

// Checks value(G) + value(complement) <= n + 4; callers pass either the
// induced-forest or induced-linear-forest optima.
NordhausGaddumReport nordhaus_gaddum_check(const Graph& g, int value_g, int value_comp);

struct ConstructionNotRegular : std::runtime_error {
  int r;
  ConstructionNotRegular(int r_, const std::string& msg) : std::runtime_error(msg), r(r_) {}
};

struct ExtremalConstruction {
  int r = 0;
  Graph graph;
  bool even_case = true;
  int expected_order = 0;         // lip_order_lower_bound(r, r)
  bool verified_regular = false;  // always true on return
  std::optional<int> lip_value;   // filled by fill_extremal_lip
  std::optional<bool> lip_matches_r;
};

// Deterministic r-regular witnesses for the order bound at k = r, r >= 2.
// The r = 2 case degenerates to the triangle; r = 3 yields the prism,
// whose longest induced path has order 4, not 3 - callers are expected to
// flag that discrepancy, not hide it.
ExtremalConstruction construct_extremal_lip(int r);

void fill_extremal_lip(ExtremalConstruction& c, const SearchBudget& budget = {});

}  // namespace linfor
