#include "linfor/survey.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "linfor/enumerate.hpp"
#include "linfor/graph6.hpp"
#include "linfor/solve.hpp"
#include "linfor/sweep.hpp"

namespace linfor {

namespace {

SearchBudget budget_of(const RunConfig& config) {
  SearchBudget b;
  b.node_limit = config.budget_nodes;
  return b;
}

// Sorted graph6 encodings of the given graphs, for deterministic witness
// lists.
std::vector<std::string> sorted_g6(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back(encode_graph6(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

}  // namespace

CubicRow survey_cubic(const std::vector<Graph>& corpus, const RunConfig& config) {
  if (corpus.empty()) throw SurveyError("cubic survey: empty corpus");
  int n = corpus.front().order();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    if (g.order() != n)
      throw SurveyError("cubic survey: graph " + std::to_string(i) + " has order " +
                        std::to_string(g.order()) + ", expected " + std::to_string(n));
    if (g.regularity() != 3)
      throw SurveyError("cubic survey: graph " + std::to_string(i) + " is not cubic");
    if (!g.connected())
      throw SurveyError("cubic survey: graph " + std::to_string(i) + " is not connected");
  }

  CubicRow row;
  row.n = n;
  row.graphs = static_cast<long long>(corpus.size());

  SearchBudget budget = budget_of(config);
  std::vector<SolveResult> forest = solve_many(corpus, Shape::forest, budget, config.jobs);
  std::vector<SolveResult> linear = solve_many(corpus, Shape::linear_forest, budget, config.jobs);

  row.max_a = row.max_lif = 0;
  row.min_a = row.min_lif = n + 1;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    row.complete = row.complete && forest[i].optimal && linear[i].optimal;
    row.max_a = std::max(row.max_a, forest[i].value);
    row.min_a = std::min(row.min_a, forest[i].value);
    row.max_lif = std::max(row.max_lif, linear[i].value);
    row.min_lif = std::min(row.min_lif, linear[i].value);
  }
  return row;
}

namespace {

GRow g_row_over(int n, const std::vector<Graph>& classes, const RunConfig& config) {
  GRow row;
  row.n = n;
  row.classes = static_cast<long long>(classes.size());
  if (classes.empty()) throw SurveyError("g survey: no classes to minimise over");

  std::vector<SolveResult> linear =
      solve_many(classes, Shape::linear_forest, budget_of(config), config.jobs);

  bool have = false;
  std::vector<Graph> witnesses;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    row.complete = row.complete && linear[i].optimal;
    Rational f = f_ratio(classes[i], linear[i].value);
    if (!have || f < row.g) {
      row.g = f;
      have = true;
      witnesses.clear();
    }
    if (f == row.g) witnesses.push_back(classes[i]);
  }
  row.witness_g6 = sorted_g6(witnesses);
  return row;
}

}  // namespace

GRow survey_g(int n, const RunConfig& config) {
  if (n < 1 || n > 8) throw SurveyError("g survey: order must be between 1 and 8");
  return g_row_over(n, enumerate_connected(n), config);
}

GRow survey_g(const std::vector<Graph>& corpus, const RunConfig& config) {
  if (corpus.empty()) throw SurveyError("g survey: empty corpus");
  int n = corpus.front().order();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].order() != n)
      throw SurveyError("g survey: graph " + std::to_string(i) + " has order " +
                        std::to_string(corpus[i].order()) + ", expected " + std::to_string(n));
    if (!corpus[i].connected())
      throw SurveyError("g survey: graph " + std::to_string(i) + " is not connected");
  }
  return g_row_over(n, corpus, config);
}

ConjectureRow survey_conjecture(int n, const RunConfig& config) {
  if (n < 1 || n > 8) throw SurveyError("conjecture survey: order must be between 1 and 8");
  GraphFilter filter;
  filter.min_degree = 2;
  std::vector<Graph> classes = enumerate_connected(n, filter);

  ConjectureRow row;
  row.n = n;
  row.classes = static_cast<long long>(classes.size());
  if (classes.empty()) return row;

  std::vector<SolveResult> linear =
      solve_many(classes, Shape::linear_forest, budget_of(config), config.jobs);

  const Rational two(2);
  std::vector<Graph> equality;
  std::vector<Graph> below;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    row.complete = row.complete && linear[i].optimal;
    Rational f = f_ratio(classes[i], linear[i].value);
    if (!row.min_f || f < *row.min_f) row.min_f = f;
    if (f == two) equality.push_back(classes[i]);
    if (f < two) below.push_back(classes[i]);
  }
  row.equality_g6 = sorted_g6(equality);
  row.counterexample_g6 = sorted_g6(below);
  return row;
}

NordhausGaddumRow survey_nordhaus_gaddum(int n, const RunConfig& config) {
  if (n < 1 || n > 8)
    throw SurveyError("complement-sum survey: order must be between 1 and 8");
  std::vector<Graph> classes = enumerate_connected(n);

  NordhausGaddumRow row;
  row.n = n;
  row.classes = static_cast<long long>(classes.size());
  row.limit = n + 4;

  std::vector<Graph> batch;
  batch.reserve(classes.size() * 2);
  for (const Graph& g : classes) {
    batch.push_back(g);
    batch.push_back(g.complement());
  }
  SearchBudget budget = budget_of(config);
  std::vector<SolveResult> forest = solve_many(batch, Shape::forest, budget, config.jobs);
  std::vector<SolveResult> linear = solve_many(batch, Shape::linear_forest, budget, config.jobs);

  std::vector<Graph> equality;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    row.complete = row.complete && forest[2 * i].optimal && forest[2 * i + 1].optimal &&
                   linear[2 * i].optimal && linear[2 * i + 1].optimal;
    int sum_a = forest[2 * i].value + forest[2 * i + 1].value;
    int sum_lif = linear[2 * i].value + linear[2 * i + 1].value;
    row.max_sum_a = std::max(row.max_sum_a, sum_a);
    row.max_sum_lif = std::max(row.max_sum_lif, sum_lif);
    if (sum_a == row.limit) equality.push_back(classes[i]);
  }
  row.holds = row.max_sum_a <= row.limit && row.max_sum_lif <= row.limit;
  row.equality_a_g6 = sorted_g6(equality);

  if (n >= 4) {
    Graph p = Graph::path(n);
    SolveResult a_p = max_induced_forest(p, budget);
    SolveResult a_pc = max_induced_forest(p.complement(), budget);
    row.complete = row.complete && a_p.optimal && a_pc.optimal;
    row.pn_attains = a_p.value + a_pc.value == row.limit;
  }
  return row;
}

std::vector<ExtremalRow> survey_extremal(int r_min, int r_max, const RunConfig& config) {
  if (r_min < 2) throw SurveyError("extremal survey: degree must be at least 2");
  if (r_max < r_min) throw SurveyError("extremal survey: empty degree range");
  std::vector<ExtremalRow> rows;
  for (int r = r_min; r <= r_max; ++r) {
    ExtremalConstruction c = construct_extremal_lip(r);
    fill_extremal_lip(c, budget_of(config));
    ExtremalRow row;
    row.r = r;
    row.n = c.graph.order();
    row.even_case = c.even_case;
    row.g6 = encode_graph6(c.graph);
    row.expected = r;
    row.lip_known = c.lip_value.has_value();
    row.lip = c.lip_value.value_or(0);
    row.flagged = row.lip_known && row.lip != row.expected;
    rows.push_back(row);
  }
  return rows;
}

void write_cubic_csv(std::ostream& os, const std::vector<CubicRow>& rows) {
  os << "n,max_a,min_a,max_lif,min_lif,graphs,complete\n";
  for (const CubicRow& r : rows)
    os << r.n << ',' << r.max_a << ',' << r.min_a << ',' << r.max_lif << ',' << r.min_lif << ','
       << r.graphs << ',' << (r.complete ? 1 : 0) << '\n';
}

void write_g_csv(std::ostream& os, const std::vector<GRow>& rows) {
  os << "n,g_num,g_den,witness_g6,classes,complete\n";
  for (const GRow& r : rows)
    os << r.n << ',' << rat_num(r.g) << ',' << rat_den(r.g) << ',' << join(r.witness_g6, ';')
       << ',' << r.classes << ',' << (r.complete ? 1 : 0) << '\n';
}

void write_conjecture_csv(std::ostream& os, const std::vector<ConjectureRow>& rows) {
  os << "n,classes,min_f_num,min_f_den,equality_g6,counterexamples_g6,complete\n";
  for (const ConjectureRow& r : rows) {
    os << r.n << ',' << r.classes << ',';
    if (r.min_f)
      os << rat_num(*r.min_f) << ',' << rat_den(*r.min_f);
    else
      os << ',';
    os << ',' << join(r.equality_g6, ';') << ',' << join(r.counterexample_g6, ';') << ','
       << (r.complete ? 1 : 0) << '\n';
  }
}

void write_nordhaus_gaddum_csv(std::ostream& os, const std::vector<NordhausGaddumRow>& rows) {
  os << "n,classes,max_sum_a,max_sum_lif,limit,holds,pn_attains,equality_a_g6,complete\n";
  for (const NordhausGaddumRow& r : rows)
    os << r.n << ',' << r.classes << ',' << r.max_sum_a << ',' << r.max_sum_lif << ','
       << r.limit << ',' << (r.holds ? 1 : 0) << ',' << (r.pn_attains ? 1 : 0) << ','
       << join(r.equality_a_g6, ';') << ',' << (r.complete ? 1 : 0) << '\n';
}

void write_extremal_csv(std::ostream& os, const std::vector<ExtremalRow>& rows) {
  os << "r,n,even_case,g6,lip,expected,lip_known,flagged\n";
  for (const ExtremalRow& r : rows)
    os << r.r << ',' << r.n << ',' << (r.even_case ? 1 : 0) << ',' << r.g6 << ',' << r.lip << ','
       << r.expected << ',' << (r.lip_known ? 1 : 0) << ',' << (r.flagged ? 1 : 0) << '\n';
}

namespace {

using Json = nlohmann::ordered_json;

void emit(std::ostream& os, Json doc) { os << doc.dump(2) << '\n'; }

}  // namespace

void write_cubic_json(std::ostream& os, const std::vector<CubicRow>& rows) {
  Json doc;
  doc["table"] = "cubic-extremes";
  doc["universe"] = "connected cubic graphs of the given order";
  doc["rows"] = Json::array();
  for (const CubicRow& r : rows)
    doc["rows"].push_back({{"n", r.n},
                           {"max_a", r.max_a},
                           {"min_a", r.min_a},
                           {"max_lif", r.max_lif},
                           {"min_lif", r.min_lif},
                           {"graphs", r.graphs},
                           {"complete", r.complete}});
  emit(os, std::move(doc));
}

void write_g_json(std::ostream& os, const std::vector<GRow>& rows) {
  Json doc;
  doc["table"] = "g-minimum";
  doc["universe"] = "connected graphs of the given order";
  doc["rows"] = Json::array();
  for (const GRow& r : rows)
    doc["rows"].push_back({{"n", r.n},
                           {"g", rat_str(r.g)},
                           {"witness_g6", r.witness_g6},
                           {"classes", r.classes},
                           {"complete", r.complete}});
  emit(os, std::move(doc));
}

void write_conjecture_json(std::ostream& os, const std::vector<ConjectureRow>& rows) {
  Json doc;
  doc["table"] = "min-degree-two-sweep";
  doc["universe"] = "connected graphs of the given order with minimum degree at least 2";
  doc["rows"] = Json::array();
  for (const ConjectureRow& r : rows) {
    Json row = {{"n", r.n}, {"classes", r.classes}};
    if (r.min_f)
      row["min_f"] = rat_str(*r.min_f);
    else
      row["min_f"] = nullptr;
    row["equality_g6"] = r.equality_g6;
    row["counterexamples_g6"] = r.counterexample_g6;
    row["complete"] = r.complete;
    doc["rows"].push_back(std::move(row));
  }
  emit(os, std::move(doc));
}

void write_nordhaus_gaddum_json(std::ostream& os, const std::vector<NordhausGaddumRow>& rows) {
  Json doc;
  doc["table"] = "complement-sums";
  doc["universe"] = "connected graphs of the given order, paired with their complements";
  doc["rows"] = Json::array();
  for (const NordhausGaddumRow& r : rows)
    doc["rows"].push_back({{"n", r.n},
                           {"classes", r.classes},
                           {"max_sum_a", r.max_sum_a},
                           {"max_sum_lif", r.max_sum_lif},
                           {"limit", r.limit},
                           {"holds", r.holds},
                           {"pn_attains", r.pn_attains},
                           {"equality_a_g6", r.equality_a_g6},
                           {"complete", r.complete}});
  emit(os, std::move(doc));
}

void write_extremal_json(std::ostream& os, const std::vector<ExtremalRow>& rows) {
  Json doc;
  doc["table"] = "extremal-constructions";
  doc["rows"] = Json::array();
  for (const ExtremalRow& r : rows)
    doc["rows"].push_back({{"r", r.r},
                           {"n", r.n},
                           {"even_case", r.even_case},
                           {"g6", r.g6},
                           {"lip", r.lip},
                           {"expected", r.expected},
                           {"lip_known", r.lip_known},
                           {"flagged", r.flagged}});
  emit(os, std::move(doc));
}

}  // namespace linfor
