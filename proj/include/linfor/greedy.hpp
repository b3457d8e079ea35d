#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linfor/graph.hpp"
#include "linfor/rational.hpp"

namespace linfor {

struct FuelExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PartitionResult {
  std::vector<Bitset128> parts;  // each induces a linear forest; sizes non-increasing
  Bitset128 certified;           // parts.front(): the certified linear forest
  std::uint64_t steps = 0;       // adds + swaps + restarts executed
  std::optional<Rational> bound;  // 2n/(r+1) when the input is r-regular
};

// True when part ∪ {v} still induces a linear forest: v has at most two
// neighbors in the part, none of induced degree 2, and two neighbors must
// lie on distinct induced paths.
bool can_extend_linear_forest(const Graph& g, const Bitset128& part, int v);

// Greedy peeling into maximal induced linear forests with two local rules:
//   swap    - a pool vertex with exactly one part-neighbor t of induced
//             degree 2 replaces t (size kept, induced edges drop by 2);
//   restart - when a later part outgrows an earlier one, the larger part is
//             swapped into the earlier slot and everything after it is
//             dissolved back into the pool.
// Deterministic: lowest-index vertex wins every choice. Fuel of
// n^3 * (maxdeg + 1) steps; running out throws FuelExhausted, which is a
// reportable finding rather than an expected outcome.
PartitionResult greedy_partition(const Graph& g);

struct ClaimsReport {
  struct CrossDegree {
    int vertex;
    int part_i;  // 0-based part holding vertex
    int part_j;  // earlier part
    int count;   // neighbors of vertex in part_j
  };

  bool cross_degrees_ok = true;         // every later vertex has >= 2 neighbors in each earlier part
  std::vector<CrossDegree> violations;  // entries with count < 2

  bool maximality_ok = true;  // no later vertex can extend an earlier part
  std::vector<std::pair<int, int>> maximality_violations;  // (vertex, earlier part)

  // Checked only when the input is r-regular with 2*(parts-1) == r:
  bool tight_case = false;
  bool last_part_independent = true;
  bool size_ratio_ok = true;  // |parts[k-2]| >= 2 |parts[k-1]|

  bool ok() const {
    return cross_degrees_ok && maximality_ok &&
           (!tight_case || (last_part_independent && size_ratio_ok));
  }
};

ClaimsReport verify_claims(const Graph& g, const PartitionResult& result);

}  // namespace linfor
