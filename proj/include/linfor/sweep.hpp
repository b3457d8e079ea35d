#pragma once

#include <cstddef>
#include <vector>

#include "linfor/graph.hpp"
#include "linfor/solve.hpp"

namespace linfor {

// Number of worker threads a jobs request resolves to: 0 means one thread
// per available hardware thread, anything else is taken literally (minimum
// one).
int resolve_jobs(int jobs);

// Solves the same optimisation problem for every graph in the batch.
// solve_many runs the per-graph solves in parallel across `jobs` threads
// (jobs <= 1 degenerates to the serial path); solve_many_serial is the
// plain loop kept as the reference implementation. Both apply the same
// budget to each graph independently and produce identical results in
// identical order.
std::vector<SolveResult> solve_many(const std::vector<Graph>& graphs, Shape shape,
                                    const SearchBudget& budget = {}, int jobs = 0);
std::vector<SolveResult> solve_many_serial(const std::vector<Graph>& graphs, Shape shape,
                                           const SearchBudget& budget = {});

}  // namespace linfor
