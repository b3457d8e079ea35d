// Command-line front end: single-graph solving, the cubic and g(n) tables,
// the minimum-degree-two and complement-sum sweeps, the extremal
// constructions, and the greedy partition, with CSV or JSON reports.
//
// Exit codes: 0 success; 2 input error; 3 incomplete (a search hit its
// budget and values are lower bounds); 4 mathematical finding (a bound or
// conjecture check failed, or a construction missed its designed value —
// valid, loudly-reported output, distinct from an error); 5 internal
// assertion failure.

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linfor/bounds.hpp"
#include "linfor/graph.hpp"
#include "linfor/graph6.hpp"
#include "linfor/greedy.hpp"
#include "linfor/solve.hpp"
#include "linfor/survey.hpp"
#include "linfor/sweep.hpp"

namespace {

using namespace linfor;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitFinding = 4;
constexpr int kExitInternal = 5;

Shape parse_shape(const std::string& name) {
  if (name == "forest" || name == "a") return Shape::forest;
  if (name == "linear_forest" || name == "lif") return Shape::linear_forest;
  if (name == "induced_path" || name == "lip") return Shape::induced_path;
  throw CLI::ValidationError("--shape",
                             "expected forest|a, linear_forest|lif, or induced_path|lip");
}

// "A" or "A-B" -> inclusive range.
std::pair<int, int> parse_range(const std::string& text, const char* flag) {
  auto fail = [&]() -> std::pair<int, int> {
    throw CLI::ValidationError(flag, "expected a number or a range like 3-8");
  };
  auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, dash));
    int hi = std::stoi(text.substr(dash + 1));
    if (hi < lo) return fail();
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    return fail();
  } catch (const std::out_of_range&) {
    return fail();
  }
}

// Writes either to --out or to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonOpts {
  long long budget_nodes = 100'000'000;
  int jobs = 0;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_budget = true) {
  if (with_budget)
    cmd->add_option("--budget-nodes", opts.budget_nodes,
                    "Search-tree node limit per individual solve, 0 = unlimited")
        ->capture_default_str();
  cmd->add_option("--jobs", opts.jobs, "Worker threads, 0 = all hardware threads")
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Write the report to this file instead of stdout");
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

RunConfig config_of(const CommonOpts& opts) {
  RunConfig config;
  config.budget_nodes = opts.budget_nodes;
  config.jobs = opts.jobs;
  return config;
}

SearchBudget budget_of(const CommonOpts& opts) {
  SearchBudget budget;
  budget.node_limit = opts.budget_nodes;
  return budget;
}

// A solve input is either a file of graphs or a literal graph6 string.
std::vector<Graph> load_solve_input(const std::string& input) {
  if (std::filesystem::exists(input)) return read_graph_file(input);
  try {
    return {decode_graph6(input)};
  } catch (const Graph6Error& e) {
    throw std::runtime_error("input is neither an existing file nor a graph6 string (" +
                             std::string(e.what()) + ")");
  }
}

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(xs[i]);
  }
  return out;
}

int run_solve(const std::string& input, const std::string& shape_name, const CommonOpts& opts) {
  Shape shape = parse_shape(shape_name);
  std::vector<Graph> graphs = load_solve_input(input);
  std::vector<SolveResult> results = solve_many(graphs, shape, budget_of(opts), opts.jobs);

  Sink sink(opts.out);
  bool complete = true;
  if (opts.format == "csv") {
    sink.stream() << "graph,n,shape,value,witness,nodes,optimal\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const SolveResult& r = results[i];
      complete = complete && r.optimal;
      sink.stream() << i << ',' << graphs[i].order() << ',' << shape_name << ',' << r.value
                    << ',' << join_ints(r.witness.to_vector(), ';') << ',' << r.stats.nodes
                    << ',' << (r.optimal ? 1 : 0) << '\n';
    }
  } else {
    Json doc;
    doc["shape"] = shape_name;
    doc["rows"] = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const SolveResult& r = results[i];
      complete = complete && r.optimal;
      doc["rows"].push_back({{"graph", i},
                             {"n", graphs[i].order()},
                             {"value", r.value},
                             {"witness", r.witness.to_vector()},
                             {"nodes", r.stats.nodes},
                             {"optimal", r.optimal}});
    }
    sink.stream() << doc.dump(2) << '\n';
  }
  if (!complete) {
    std::cerr << "warning: a budget was exhausted; values marked optimal=0 are lower bounds\n";
    return kExitIncomplete;
  }
  return kExitOk;
}

int run_table_cubic(const std::vector<std::string>& inputs, const CommonOpts& opts) {
  if (inputs.empty()) throw std::runtime_error("table-cubic requires at least one --input file");
  std::vector<CubicRow> rows;
  for (const std::string& path : inputs) {
    if (!std::filesystem::exists(path))
      throw std::runtime_error("missing corpus file: " + path);
    rows.push_back(survey_cubic(read_graph_file(path), config_of(opts)));
  }
  std::sort(rows.begin(), rows.end(),
            [](const CubicRow& a, const CubicRow& b) { return a.n < b.n; });

  Sink sink(opts.out);
  if (opts.format == "csv")
    write_cubic_csv(sink.stream(), rows);
  else
    write_cubic_json(sink.stream(), rows);

  for (const CubicRow& r : rows)
    if (!r.complete) {
      std::cerr << "warning: order " << r.n << " hit the search budget; extremes are partial\n";
      return kExitIncomplete;
    }
  return kExitOk;
}

int run_table_g(const std::string& range, const std::vector<std::string>& inputs,
                const CommonOpts& opts) {
  std::vector<GRow> rows;
  if (!range.empty()) {
    auto [lo, hi] = parse_range(range, "--n");
    for (int n = lo; n <= hi; ++n) rows.push_back(survey_g(n, config_of(opts)));
  }
  for (const std::string& path : inputs) {
    if (!std::filesystem::exists(path))
      throw std::runtime_error("missing corpus file: " + path);
    rows.push_back(survey_g(read_graph_file(path), config_of(opts)));
  }
  if (rows.empty())
    throw std::runtime_error("table-g requires --n and/or --input corpus files");
  std::sort(rows.begin(), rows.end(), [](const GRow& a, const GRow& b) { return a.n < b.n; });

  Sink sink(opts.out);
  if (opts.format == "csv")
    write_g_csv(sink.stream(), rows);
  else
    write_g_json(sink.stream(), rows);

  for (const GRow& r : rows)
    if (!r.complete) {
      std::cerr << "warning: order " << r.n << " hit the search budget; g is an upper bound\n";
      return kExitIncomplete;
    }
  return kExitOk;
}

int run_conjecture(const std::string& range, const CommonOpts& opts) {
  auto [lo, hi] = parse_range(range, "--n");
  std::vector<ConjectureRow> rows;
  for (int n = lo; n <= hi; ++n) rows.push_back(survey_conjecture(n, config_of(opts)));

  Sink sink(opts.out);
  if (opts.format == "csv")
    write_conjecture_csv(sink.stream(), rows);
  else
    write_conjecture_json(sink.stream(), rows);

  int code = kExitOk;
  for (const ConjectureRow& r : rows) {
    if (!r.counterexample_g6.empty()) {
      std::cerr << "FINDING: order " << r.n << " has " << r.counterexample_g6.size()
                << " class(es) with f below 2:";
      for (const std::string& g6 : r.counterexample_g6) std::cerr << ' ' << g6;
      std::cerr << '\n';
      code = kExitFinding;
    }
    if (!r.complete && code == kExitOk) code = kExitIncomplete;
  }
  return code;
}

int run_nordhaus_gaddum(const std::string& range, const CommonOpts& opts) {
  auto [lo, hi] = parse_range(range, "--n");
  std::vector<NordhausGaddumRow> rows;
  for (int n = lo; n <= hi; ++n) rows.push_back(survey_nordhaus_gaddum(n, config_of(opts)));

  Sink sink(opts.out);
  if (opts.format == "csv")
    write_nordhaus_gaddum_csv(sink.stream(), rows);
  else
    write_nordhaus_gaddum_json(sink.stream(), rows);

  int code = kExitOk;
  for (const NordhausGaddumRow& r : rows) {
    if (!r.holds) {
      std::cerr << "FINDING: order " << r.n << " exceeds the complement-sum ceiling "
                << r.limit << " (max a-sum " << r.max_sum_a << ", max LIF-sum " << r.max_sum_lif
                << ")\n";
      code = kExitFinding;
    }
    if (!r.pn_attains) {
      std::cerr << "FINDING: the path of order " << r.n
                << " does not attain the complement-sum ceiling\n";
      code = kExitFinding;
    }
    if (!r.complete && code == kExitOk) code = kExitIncomplete;
  }
  return code;
}

int run_extremal(const std::string& range, const CommonOpts& opts) {
  auto [lo, hi] = parse_range(range, "--r");
  std::vector<ExtremalRow> rows = survey_extremal(lo, hi, config_of(opts));

  Sink sink(opts.out);
  if (opts.format == "csv")
    write_extremal_csv(sink.stream(), rows);
  else
    write_extremal_json(sink.stream(), rows);

  int code = kExitOk;
  for (const ExtremalRow& r : rows) {
    if (r.flagged) {
      std::cerr << "FINDING: degree " << r.r << " construction (" << r.g6
                << ") has longest induced path " << r.lip << ", designed value " << r.expected
                << '\n';
      code = kExitFinding;
    }
    if (!r.lip_known && code == kExitOk) code = kExitIncomplete;
  }
  return code;
}

int run_greedy(const std::string& input, const CommonOpts& opts) {
  std::vector<Graph> graphs = load_solve_input(input);

  Sink sink(opts.out);
  int code = kExitOk;
  auto finding = [&code](const std::string& message) {
    std::cerr << "FINDING: " << message << '\n';
    code = kExitFinding;
  };

  struct Record {
    std::size_t index;
    int n;
    std::optional<int> r;
    std::vector<int> part_sizes;
    int certified_size;
    std::string bound;
    long long ceil_bound;
    bool bound_ok;
    bool claims_ok;
    long long steps;
    bool fuel_exhausted;
  };
  std::vector<Record> records;

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    Record rec;
    rec.index = i;
    rec.n = g.order();
    rec.r = g.order() ? g.regularity() : std::nullopt;
    rec.certified_size = 0;
    rec.ceil_bound = 0;
    rec.bound_ok = true;
    rec.claims_ok = true;
    rec.steps = 0;
    rec.fuel_exhausted = false;
    try {
      PartitionResult part = greedy_partition(g);
      rec.steps = part.steps;
      for (const Bitset128& p : part.parts) rec.part_sizes.push_back(p.count());
      rec.certified_size = part.certified.count();
      if (part.bound) {
        rec.bound = rat_str(*part.bound);
        rec.ceil_bound = ceil_rat_ll(*part.bound);
        rec.bound_ok = rec.certified_size >= rec.ceil_bound;
        if (!rec.bound_ok)
          finding("graph " + std::to_string(i) + ": certified part of order " +
                  std::to_string(rec.certified_size) + " misses the guarantee ceil(" + rec.bound +
                  ") = " + std::to_string(rec.ceil_bound));
      }
      ClaimsReport claims = verify_claims(g, part);
      rec.claims_ok = claims.ok();
      if (!rec.claims_ok && rec.r)
        finding("graph " + std::to_string(i) + ": " +
                std::to_string(claims.violations.size()) + " cross-degree and " +
                std::to_string(claims.maximality_violations.size()) +
                " maximality claim violation(s) on a regular graph");
    } catch (const FuelExhausted& e) {
      rec.fuel_exhausted = true;
      finding("graph " + std::to_string(i) + ": " + e.what());
    }
    records.push_back(std::move(rec));
  }

  if (opts.format == "csv") {
    sink.stream() << "graph,n,r,parts,part_sizes,certified_size,bound,ceil_bound,bound_ok,"
                     "claims_ok,steps,fuel_exhausted\n";
    for (const Record& rec : records) {
      sink.stream() << rec.index << ',' << rec.n << ',';
      if (rec.r) sink.stream() << *rec.r;
      sink.stream() << ',' << rec.part_sizes.size() << ',' << join_ints(rec.part_sizes, ';')
                    << ',' << rec.certified_size << ',' << rec.bound << ',' << rec.ceil_bound
                    << ',' << (rec.bound_ok ? 1 : 0) << ',' << (rec.claims_ok ? 1 : 0) << ','
                    << rec.steps << ',' << (rec.fuel_exhausted ? 1 : 0) << '\n';
    }
  } else {
    Json doc;
    doc["rows"] = Json::array();
    for (const Record& rec : records) {
      Json row = {{"graph", rec.index}, {"n", rec.n}};
      if (rec.r)
        row["r"] = *rec.r;
      else
        row["r"] = nullptr;
      row["part_sizes"] = rec.part_sizes;
      row["certified_size"] = rec.certified_size;
      row["bound"] = rec.bound;
      row["ceil_bound"] = rec.ceil_bound;
      row["bound_ok"] = rec.bound_ok;
      row["claims_ok"] = rec.claims_ok;
      row["steps"] = rec.steps;
      row["fuel_exhausted"] = rec.fuel_exhausted;
      doc["rows"].push_back(std::move(row));
    }
    sink.stream() << doc.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact induced-forest, induced-linear-forest, and induced-path computations "
      "with greedy certification, closed-form bounds, and survey tables"};
  app.require_subcommand(1);

  std::string solve_input, solve_shape = "forest";
  CommonOpts solve_opts;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one invariant per input graph");
  solve_cmd
      ->add_option("input,--input", solve_input,
                   "Graph file (graph6 or edge list) or a graph6 string")
      ->required();
  solve_cmd->add_option("--shape", solve_shape,
                        "forest|a, linear_forest|lif, or induced_path|lip")
      ->capture_default_str();
  add_common(solve_cmd, solve_opts);

  std::vector<std::string> cubic_inputs;
  CommonOpts cubic_opts;
  CLI::App* cubic_cmd = app.add_subcommand(
      "table-cubic", "Extremes of a and LIF over connected cubic corpora, one row per order");
  cubic_cmd->add_option("--input", cubic_inputs, "Corpus files, one per order")->required();
  add_common(cubic_cmd, cubic_opts);

  std::string g_range;
  std::vector<std::string> g_inputs;
  CommonOpts g_opts;
  CLI::App* g_cmd =
      app.add_subcommand("table-g", "Minimum of f(G) = LIF/t over connected classes per order");
  g_cmd->add_option("--n", g_range, "Order or range (built-in enumeration, n <= 8)");
  g_cmd->add_option("--input", g_inputs,
                    "Connected-class corpus files for orders beyond the enumerator");
  add_common(g_cmd, g_opts);

  std::string conj_range = "3-8";
  CommonOpts conj_opts;
  CLI::App* conj_cmd = app.add_subcommand(
      "conjecture", "Test f >= 2 over connected classes with minimum degree 2 or more");
  conj_cmd->add_option("--n", conj_range, "Order or range (n <= 8)")->capture_default_str();
  add_common(conj_cmd, conj_opts);

  std::string ng_range = "1-7";
  CommonOpts ng_opts;
  CLI::App* ng_cmd = app.add_subcommand(
      "nordhaus-gaddum", "Check complement sums of a and LIF against n + 4 over connected classes");
  ng_cmd->add_option("--n", ng_range, "Order or range (n <= 8)")->capture_default_str();
  add_common(ng_cmd, ng_opts);

  std::string ex_range = "2-8";
  CommonOpts ex_opts;
  CLI::App* ex_cmd = app.add_subcommand(
      "extremal", "Build the degree-r extremal graphs and verify their induced-path value");
  ex_cmd->add_option("--r", ex_range, "Degree or range (r >= 2)")->capture_default_str();
  add_common(ex_cmd, ex_opts);

  std::string greedy_input;
  CommonOpts greedy_opts;
  CLI::App* greedy_cmd = app.add_subcommand(
      "greedy", "Run the certified greedy partition and verify its claims per input graph");
  greedy_cmd
      ->add_option("input,--input", greedy_input,
                   "Graph file (graph6 or edge list) or a graph6 string")
      ->required();
  add_common(greedy_cmd, greedy_opts, /*with_budget=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_input, solve_shape, solve_opts);
    if (cubic_cmd->parsed()) return run_table_cubic(cubic_inputs, cubic_opts);
    if (g_cmd->parsed()) return run_table_g(g_range, g_inputs, g_opts);
    if (conj_cmd->parsed()) return run_conjecture(conj_range, conj_opts);
    if (ng_cmd->parsed()) return run_nordhaus_gaddum(ng_range, ng_opts);
    if (ex_cmd->parsed()) return run_extremal(ex_range, ex_opts);
    if (greedy_cmd->parsed()) return run_greedy(greedy_input, greedy_opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SurveyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConstructionNotRegular& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
