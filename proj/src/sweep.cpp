#include "linfor/sweep.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

namespace linfor {

int resolve_jobs(int jobs) {
  if (jobs == 0) return omp_get_max_threads();
  return jobs < 1 ? 1 : jobs;
}

std::vector<SolveResult> solve_many_serial(const std::vector<Graph>& graphs, Shape shape,
                                           const SearchBudget& budget) {
  std::vector<SolveResult> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back(solve_shape(g, shape, budget));
  return out;
}

std::vector<SolveResult> solve_many(const std::vector<Graph>& graphs, Shape shape,
                                    const SearchBudget& budget, int jobs) {
  int workers = resolve_jobs(jobs);
  if (workers <= 1 || graphs.size() <= 1) return solve_many_serial(graphs, shape, budget);

  std::vector<SolveResult> out(graphs.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  // Each solve is deterministic and writes only its own slot, so the
  // parallel version is byte-for-byte identical to the serial one.
  // Exceptions must not escape the parallel region; the first one is
  // stashed and rethrown afterwards.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(graphs.size()); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = solve_shape(graphs[static_cast<std::size_t>(i)], shape, budget);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace linfor
