#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "linfor/graph.hpp"

namespace linfor {

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  std::uint64_t node_limit = 0;  // 0 = unlimited
  double time_limit_seconds = 0;  // 0 = unlimited
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

// value == witness.count(); optimal == false only when a budget cut the
// search short, in which case value is the best lower bound found.
struct SolveResult {
  int value = 0;
  Bitset128 witness;
  SolveStats stats;
  bool optimal = true;
};

// Exact branch-and-bound maximizers. Ties between optimal witnesses go to
// the set-lexicographically smallest witness, so results are reproducible.
SolveResult max_induced_forest(const Graph& g, const SearchBudget& budget = {});
SolveResult max_induced_linear_forest(const Graph& g, const SearchBudget& budget = {});

// Longest induced path by path-extension DFS (grows a path at its head;
// every induced path is reachable this way from each endpoint). Throws
// SolveError on the empty graph; value >= 1 otherwise.
SolveResult longest_induced_path(const Graph& g, const SearchBudget& budget = {});

SolveResult solve_shape(const Graph& g, Shape shape, const SearchBudget& budget = {});

// Deliberately unoptimized ground truth: scans all 2^n subsets through
// Graph::shape_check. Hard-capped at n <= 24.
SolveResult oracle_subset_scan(const Graph& g, Shape shape);

}  // namespace linfor
