#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linfor/graph.hpp"

namespace linfor {

struct EnumerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Upper-triangle adjacency bits (same column-major order as the graph6
// body) of the lexicographically minimal relabeling. A complete
// isomorphism invariant: equal forms <=> isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  Bitset128 bits;

  bool operator==(const CanonicalForm&) const = default;

  // String order: earlier bit positions dominate, 0 before 1.
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    Bitset128 d = bits ^ o.bits;
    int i = d.lowest();
    return i >= 0 && !bits.test(i);
  }
};

// Minimal upper-triangle bit string over all vertex orderings, found by
// prefix branch-and-bound (abandon an ordering as soon as its partial
// string exceeds the best known). Exhaustive-search canonicalization, so
// capped at n <= 8.
CanonicalForm canonical_form(const Graph& g);

Graph from_canonical(const CanonicalForm& form);

namespace detail {
// Same minimization restricted to connected orderings that start on a
// minimum-degree vertex. Still a complete invariant for connected graphs
// (the restriction is isomorphism-invariant and the string reconstructs
// the graph), but far cheaper on sparse graphs; supports n <= 16.
Bitset128 connected_certificate(const Graph& g);
}  // namespace detail

struct GraphFilter {
  std::optional<int> min_degree;
  std::optional<int> regular_r;

  bool passes(const Graph& g) const {
    if (min_degree && g.min_degree() < *min_degree) return false;
    if (regular_r) {
      auto r = g.regularity();
      if (!r || *r != *regular_r) return false;
    }
    return true;
  }
};

// All connected isomorphism classes of each order 1..max_n (max_n <= 8),
// one canonical representative per class, sorted by canonical form.
// Level k is built from level k-1 by attaching a new vertex to every
// nonempty subset (every connected graph loses some non-cut vertex, so
// augmentation from connected parents is exhaustive).
std::vector<std::vector<Graph>> connected_levels(int max_n);

std::vector<Graph> enumerate_connected(int n, const GraphFilter& filter = {});

// Pairing-model r-regular sample: nr points matched uniformly, rejected
// until simple. Deterministic for a fixed seed across platforms.
Graph random_regular(int n, int r, std::uint64_t seed, int max_attempts = 200000);

}  // namespace linfor
