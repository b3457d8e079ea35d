#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linfor/bounds.hpp"
#include "linfor/graph.hpp"
#include "linfor/rational.hpp"

namespace linfor {

class SurveyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shared knobs for the survey drivers. budget_nodes caps the search-tree
// size of every individual solve (0 = unlimited); jobs is the worker-thread
// request forwarded to the parallel sweep (0 = all hardware threads); seed
// feeds any randomised driver.
struct RunConfig {
  long long budget_nodes = 100'000'000;
  int jobs = 0;
  unsigned long long seed = 1;
};

// One order of the cubic-graph table: extremes of the forest and linear
// forest numbers over all connected cubic graphs of that order.
struct CubicRow {
  int n = 0;
  int max_a = 0;
  int min_a = 0;
  int max_lif = 0;
  int min_lif = 0;
  long long graphs = 0;
  bool complete = true;
};

// One order of the g(n) table: the minimum of f(G) = LIF(G)/t(G) over all
// connected graphs of that order, with every minimising class listed by its
// graph6 encoding.
struct GRow {
  int n = 0;
  Rational g;
  std::vector<std::string> witness_g6;
  long long classes = 0;
  bool complete = true;
};

// One order of the minimum-degree-two sweep: the minimum of f over all
// connected graphs with minimum degree at least two, the classes attaining
// f = 2 exactly, and any class falling below 2 (none is expected).
struct ConjectureRow {
  int n = 0;
  long long classes = 0;
  std::optional<Rational> min_f;
  std::vector<std::string> equality_g6;
  std::vector<std::string> counterexample_g6;
  bool complete = true;
};

// One order of the complement-sum sweep: the largest value of
// a(G) + a(complement of G) and LIF(G) + LIF(complement of G) over all
// connected classes, checked against the n + 4 ceiling, with the classes
// meeting the ceiling for the forest number listed. pn_attains records
// whether the path of order n meets the ceiling exactly (the sharpness
// family); it is vacuously true below order 4.
struct NordhausGaddumRow {
  int n = 0;
  long long classes = 0;
  int max_sum_a = 0;
  int max_sum_lif = 0;
  int limit = 0;
  bool holds = true;
  bool pn_attains = true;
  std::vector<std::string> equality_a_g6;
  bool complete = true;
};

// One degree of the extremal-construction audit: the built graph itself
// (as graph6), its order and parity case, and its exact
// longest-induced-path value against the designed value r.
struct ExtremalRow {
  int r = 0;
  int n = 0;
  bool even_case = false;
  std::string g6;
  int lip = 0;
  int expected = 0;
  bool lip_known = false;
  bool flagged = false;
};

// Validates a corpus of connected cubic graphs of one order and computes
// that order's table row.
CubicRow survey_cubic(const std::vector<Graph>& corpus, const RunConfig& config = {});

// Enumerates the connected classes of order n (n <= 8) and minimises f.
GRow survey_g(int n, const RunConfig& config = {});

// Minimises f over a caller-supplied corpus of connected graphs of one
// order (for orders beyond the built-in enumerator). The corpus is trusted
// to contain one representative per class.
GRow survey_g(const std::vector<Graph>& corpus, const RunConfig& config = {});

// Enumerates the connected classes of order n (n <= 8) with minimum degree
// at least two and tests f >= 2.
ConjectureRow survey_conjecture(int n, const RunConfig& config = {});

// Enumerates the connected classes of order n (n <= 8) and checks the
// complement sums of both invariants against n + 4.
NordhausGaddumRow survey_nordhaus_gaddum(int n, const RunConfig& config = {});

// Builds the degree-r extremal graph for each r in [r_min, r_max] and
// measures its longest induced path.
std::vector<ExtremalRow> survey_extremal(int r_min, int r_max, const RunConfig& config = {});

// CSV writers, one row per line with a fixed header; lists are joined with
// ';' (graph6 bytes never contain it) and booleans print as 1/0.
void write_cubic_csv(std::ostream& os, const std::vector<CubicRow>& rows);
void write_g_csv(std::ostream& os, const std::vector<GRow>& rows);
void write_conjecture_csv(std::ostream& os, const std::vector<ConjectureRow>& rows);
void write_nordhaus_gaddum_csv(std::ostream& os, const std::vector<NordhausGaddumRow>& rows);
void write_extremal_csv(std::ostream& os, const std::vector<ExtremalRow>& rows);

// JSON writers mirroring the CSV content, with the surveyed universe
// spelled out where it is an assumption rather than part of the data.
void write_cubic_json(std::ostream& os, const std::vector<CubicRow>& rows);
void write_g_json(std::ostream& os, const std::vector<GRow>& rows);
void write_conjecture_json(std::ostream& os, const std::vector<ConjectureRow>& rows);
void write_nordhaus_gaddum_json(std::ostream& os, const std::vector<NordhausGaddumRow>& rows);
void write_extremal_json(std::ostream& os, const std::vector<ExtremalRow>& rows);

}  // namespace linfor
