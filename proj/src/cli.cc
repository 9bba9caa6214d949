// Copyright 2026 The uniqsub Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uniqsub/cli.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "uniqsub/bounds.h"
#include "uniqsub/canon.h"
#include "uniqsub/corpus.h"
#include "uniqsub/embed.h"
#include "uniqsub/enumerate.h"
#include "uniqsub/errors.h"
#include "uniqsub/parallel.h"
#include "uniqsub/process.h"
#include "uniqsub/random.h"
#include "uniqsub/switch.h"

namespace uniqsub {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string record;
  bool json = false;
};

struct Result {
  Json payload;
  // When set, printed one entry per line instead of payload.
  std::optional<std::vector<std::string>> lines;
};

using Handler = std::function<Result()>;

std::string Timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t seconds = std::chrono::system_clock::to_time_t(now);
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          now.time_since_epoch()) % 1000;
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%S", &utc);
  char full[48];
  std::snprintf(full, sizeof full, "%s.%03dZ", buffer, static_cast<int>(millis.count()));
  return full;
}

double ToJsonNumber(const HighFloat& x) { return x.convert_to<double>(); }

Json VertexList(VertexSet s) {
  Json list = Json::array();
  ForEachVertex(s, [&](int v) { list.push_back(v); });
  return list;
}

VertexSet ToVertexSet(const std::vector<int>& vertices, int order) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= order) throw DomainError("vertex " + std::to_string(v) + " out of range");
    s |= Bit(v);
  }
  return s;
}

Json FValueJson(const FValue& value) {
  return Json{{"h_g6", ToGraph6(value.h)},
              {"universe", ToString(value.universe)},
              {"count", value.unique_subgraph_count},
              {"denominator", ToString(value.denominator)},
              {"denominator_value", ToDouble(value.denominator)},
              {"f", ToString(value.f)},
              {"f_value", ToDouble(value.f)}};
}

Json IntervalJson(const UniquenessInterval& interval) {
  if (!interval.range) return nullptr;
  return Json::array({interval.range->first, interval.range->second});
}

std::string Digits(const HighFloat& x) { return ToString(x, 30); }

// Options given on the command line, by long name.
Json CollectParams(const CLI::App* app) {
  Json params = Json::object();
  for (const CLI::App* scope = app; scope != nullptr; scope = scope->get_parent()) {
    for (const CLI::Option* opt : scope->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      const auto& results = opt->results();
      std::string key = opt->get_name();
      if (params.contains(key)) continue;
      if (results.size() == 1) {
        params[key] = results.front();
      } else {
        params[key] = results;
      }
    }
  }
  return params;
}

class CommandLine {
 public:
  CommandLine(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(const std::vector<std::string>& args);

 private:
  std::uint64_t Seed();
  void Register(CLI::App* sub, Handler handler) { handlers_[sub] = std::move(handler); }

  void AddEnumerate(CLI::App& app);
  void AddPolya(CLI::App& app);
  void AddFExact(CLI::App& app);
  void AddFOfH(CLI::App& app);
  void AddEstimate(CLI::App& app);
  void AddProcess(CLI::App& app);
  void AddSwitch(CLI::App& app);
  void AddRefineT(CLI::App& app);
  void AddBounds(CLI::App& app);
  void AddIngestCheck(CLI::App& app);

  void WriteRecord(const std::string& command, const std::vector<std::string>& args,
                   const Json& params, const std::string& started,
                   const std::string& finished, const Json& payload);

  std::ostream& out_;
  std::ostream& err_;
  Globals globals_;
  bool seed_generated_ = false;
  std::optional<std::uint64_t> used_seed_;
  std::map<const CLI::App*, Handler> handlers_;
};

std::uint64_t CommandLine::Seed() {
  if (!globals_.seed) {
    std::random_device device;
    globals_.seed = (std::uint64_t{device()} << 32) ^ device();
    seed_generated_ = true;
    err_ << "uniqsub: no --seed given, using generated seed " << *globals_.seed << "\n";
  }
  used_seed_ = globals_.seed;
  return *globals_.seed;
}

void CommandLine::AddEnumerate(CLI::App& app) {
  auto* sub = app.add_subcommand("enumerate", "One graph6 line per isomorphism class");
  auto n = std::make_shared<int>();
  auto path = std::make_shared<std::string>();
  sub->add_option("--n", *n, "Order")->required();
  sub->add_option("--out", *path, "Write graph6 lines to this file");
  Register(sub, [this, n, path] {
    const std::vector<std::string> classes = [&] {
      std::vector<std::string> g6;
      for (const Graph& g : EnumerateUnlabelled(*n, globals_.threads)) g6.push_back(ToGraph6(g));
      return g6;
    }();
    Result result;
    if (!path->empty()) {
      std::ofstream file(*path);
      if (!file) throw DomainError("cannot open " + *path + " for writing");
      for (const auto& line : classes) file << line << "\n";
      if (!file) throw DomainError("failed writing " + *path);
      result.payload = Json{{"n", *n}, {"count", classes.size()}, {"out", *path}};
    } else if (globals_.json) {
      result.payload = Json{{"n", *n}, {"count", classes.size()}, {"graphs", classes}};
    } else {
      result.payload = classes;
      result.lines = classes;
    }
    return result;
  });
}

void CommandLine::AddPolya(CLI::App& app) {
  auto* sub = app.add_subcommand("polya", "Unlabelled counts against 2^N / n!");
  auto n = std::make_shared<int>();
  auto to = std::make_shared<int>(0);
  auto aut = std::make_shared<bool>(false);
  sub->add_option("--n", *n, "First order")->required();
  sub->add_option("--to", *to, "Last order (default: --n)");
  sub->add_flag("--aut", *aut, "Also report the fraction of classes with a non-trivial automorphism");
  Register(sub, [this, n, to, aut] {
    const int last = std::max(*n, *to);
    Json reports = Json::array();
    std::optional<Rational> previous_ratio;
    bool decreasing = true;
    for (int k = *n; k <= last; ++k) {
      const std::vector<Graph> classes = EnumerateUnlabelled(k, globals_.threads);
      const PolyaReport report = MakePolyaReport(k, classes.size());
      Json row{{"n", k},
               {"unlabelled_count", report.unlabelled_count},
               {"polya_estimate", ToString(report.polya_estimate)},
               {"polya_estimate_value", ToDouble(report.polya_estimate)},
               {"ratio", ToString(report.ratio)},
               {"ratio_value", ToDouble(report.ratio)}};
      if (*aut) {
        std::vector<std::uint64_t> orders(classes.size());
        ParallelFor(globals_.threads, classes.size(),
                    [&](std::size_t i) { orders[i] = AutOrder(classes[i]); });
        const auto nontrivial = std::count_if(orders.begin(), orders.end(),
                                              [](std::uint64_t a) { return a >= 2; });
        const Rational fraction(nontrivial, static_cast<std::int64_t>(classes.size()));
        row["nontrivial_aut_fraction"] = ToString(fraction);
        row["nontrivial_aut_fraction_value"] = ToDouble(fraction);
      }
      if (k >= 4) {
        if (previous_ratio && !(report.ratio < *previous_ratio)) decreasing = false;
        previous_ratio = report.ratio;
      }
      reports.push_back(std::move(row));
    }
    return Result{Json{{"reports", reports}, {"ratio_strictly_decreasing_from_4", decreasing}},
                  std::nullopt};
  });
}

void CommandLine::AddFExact(CLI::App& app) {
  auto* sub = app.add_subcommand("f-exact", "f over every host class on n vertices");
  auto n = std::make_shared<int>();
  auto spanning = std::make_shared<bool>(false);
  sub->add_option("--n", *n, "Order")->required();
  sub->add_flag("--spanning", *spanning, "Count spanning subgraphs only");
  Register(sub, [this, n, spanning] {
    const FMaxResult result = FMaxExact(
        *n, *spanning ? Universe::kSpanningOnly : Universe::kAllSizes, globals_.threads);
    Json table = Json::array();
    for (const FValue& row : result.table) table.push_back(FValueJson(row));
    return Result{Json{{"n", *n},
                       {"universe", ToString(result.best.universe)},
                       {"f_max", ToString(result.best.f)},
                       {"f_max_value", ToDouble(result.best.f)},
                       {"argmax_g6", result.argmax_g6},
                       {"table", table}},
                  std::nullopt};
  });
}

void CommandLine::AddFOfH(CLI::App& app) {
  auto* sub = app.add_subcommand("f-of-h", "f(H) for one host");
  auto g6 = std::make_shared<std::string>();
  auto spanning = std::make_shared<bool>(false);
  auto allow_large = std::make_shared<bool>(false);
  sub->add_option("--g6", *g6, "Host graph")->required();
  sub->add_flag("--spanning", *spanning, "Count spanning subgraphs only");
  sub->add_flag("--allow-large", *allow_large, "Lift the order guard");
  Register(sub, [this, g6, spanning, allow_large] {
    const FValue value =
        FOfH(ParseGraph6(*g6), *spanning ? Universe::kSpanningOnly : Universe::kAllSizes,
             *allow_large, globals_.threads);
    return Result{FValueJson(value), std::nullopt};
  });
}

void CommandLine::AddEstimate(CLI::App& app) {
  auto* sub = app.add_subcommand("estimate", "Monte Carlo estimate of Pr[G has a unique embedding into H]");
  auto g6 = std::make_shared<std::string>();
  auto trials = std::make_shared<std::uint64_t>();
  sub->add_option("--g6", *g6, "Host graph")->required();
  sub->add_option("--trials", *trials, "Number of samples")->required();
  Register(sub, [this, g6, trials] {
    const Graph h = ParseGraph6(*g6);
    if (*trials == 0) throw DomainError("--trials must be at least 1");
    const EstimateReport report = EstimateUniqueProb(h, *trials, Seed(), globals_.threads);
    return Result{Json{{"h_g6", *g6},
                       {"trials", report.trials},
                       {"successes", report.successes},
                       {"estimate", report.estimate},
                       {"seed", report.seed},
                       {"confidence", report.confidence},
                       {"ci", Json::array({report.ci_low, report.ci_high})}},
                  std::nullopt};
  });
}

void CommandLine::AddProcess(CLI::App& app) {
  auto* sub = app.add_subcommand("process", "Uniqueness intervals along random graph processes");
  auto g6 = std::make_shared<std::string>();
  auto traces = std::make_shared<int>(1);
  auto L = std::make_shared<double>(1.0);
  auto scan_all = std::make_shared<bool>(false);
  sub->add_option("--g6", *g6, "Host graph")->required();
  sub->add_option("--traces", *traces, "Number of traces");
  sub->add_option("--L", *L, "Window half-width coefficient");
  sub->add_flag("--scan-all", *scan_all, "Evaluate every m and cross-check the binary search");
  Register(sub, [this, g6, traces, L, scan_all] {
    const Graph h = ParseGraph6(*g6);
    if (*traces < 1) throw DomainError("--traces must be at least 1");
    XWindow(h.order(), *L);
    const std::uint64_t seed = Seed();
    std::vector<Json> rows(static_cast<std::size_t>(*traces));
    ParallelFor(globals_.threads, rows.size(), [&](std::size_t t) {
      const ProcessTrace trace = SampleTrace(h.order(), DeriveSeed(seed, t));
      const UniquenessInterval interval = FindUniquenessInterval(trace, h);
      const XStatistic x = ComputeXStatistic(interval, h.order(), *L);
      Json row{{"trace", t},
               {"seed", trace.seed},
               {"interval", IntervalJson(interval)},
               {"X", x.x},
               {"window", Json::array({x.window_lo, x.window_hi})},
               {"probes", interval.probes}};
      if (*scan_all) {
        const ProcessScan scan = ScanProcess(trace, h);
        row["scan_interval"] = IntervalJson(scan.interval);
        row["monotonicity_violations"] = scan.monotonicity_violations;
        row["contiguous"] = scan.contiguous;
        row["search_matches_scan"] = scan.interval.range == interval.range;
      }
      rows[t] = std::move(row);
    });
    Result result;
    result.payload = Json::array();
    result.lines.emplace();
    for (Json& row : rows) {
      result.lines->push_back(row.dump());
      result.payload.push_back(std::move(row));
    }
    return result;
  });
}

void CommandLine::AddSwitch(CLI::App& app) {
  auto* sub = app.add_subcommand("switch", "Switch analysis for a bijection from V(Hc) to V(G)");
  auto hc = std::make_shared<std::string>();
  auto g = std::make_shared<std::string>();
  auto pi = std::make_shared<std::vector<int>>();
  auto pairs = std::make_shared<std::vector<int>>();
  sub->add_option("--hc", *hc, "Complement of the host")->required();
  sub->add_option("--g", *g, "Guest graph")->required();
  sub->add_option("--pi", *pi, "Images of 0..n-1, comma separated")->required()->delimiter(',');
  sub->add_option("--pairs", *pairs, "Restrict to pairs within these G-vertices")->delimiter(',');
  Register(sub, [hc, g, pi, pairs] {
    const Graph hc_graph = ParseGraph6(*hc);
    const Graph g_graph = ParseGraph6(*g);
    const SwitchContext ctx(hc_graph, g_graph, VertexMap(g_graph.order(), *pi));
    std::optional<VertexPair> found;
    VertexSet scope = g_graph.vertices();
    if (pairs->empty()) {
      found = FindSwitch(ctx);
    } else {
      scope = ToVertexSet(*pairs, g_graph.order());
      const std::vector<VertexPair> candidates = PairsWithin(scope);
      found = FindSwitch(ctx, std::span<const VertexPair>(candidates));
    }
    int switches = 0;
    const std::vector<VertexPair> all = PairsWithin(scope);
    for (auto [u, v] : all) switches += IsPiSwitch(ctx, u, v) ? 1 : 0;
    Json payload{{"pi_is_embedding", ctx.PiIsEmbedding()},
                 {"pairs_scanned", all.size()},
                 {"switch_count", switches}};
    if (found) {
      const auto [u, v] = *found;
      const SwitchRequirements req = RequiredNeighbours(hc_graph, ctx.pi(), u, v);
      const DyadicRational p = SwitchProbability(hc_graph, ctx.pi(), u, v);
      payload["switch"] = Json::array({u, v});
      payload["required_at_v"] = VertexList(req.at_v);
      payload["required_at_u"] = VertexList(req.at_u);
      payload["probability"] = ToString(p.ToRational());
      payload["probability_value"] = p.ToDouble();
      if (ctx.PiIsEmbedding()) {
        const VertexMap swapped = ApplySwitch(ctx, u, v);
        payload["switched_pi"] =
            std::vector<int>(swapped.image().begin(), swapped.image().end());
      }
    } else {
      payload["switch"] = nullptr;
    }
    return Result{payload, std::nullopt};
  });
}

void CommandLine::AddRefineT(CLI::App& app) {
  auto* sub = app.add_subcommand("refine-t", "Degree classes and the refined independent set T");
  auto hc = std::make_shared<std::string>();
  auto c = std::make_shared<double>();
  auto schedule = std::make_shared<std::vector<double>>();
  auto pi = std::make_shared<std::vector<int>>();
  sub->add_option("--hc", *hc, "Complement of the host")->required();
  sub->add_option("--c", *c, "Degree constant C")->required();
  sub->add_option("--schedule", *schedule, "Thresholds, comma separated")->delimiter(',');
  sub->add_option("--pi", *pi, "Bijection for the influence budget")->delimiter(',');
  Register(sub, [hc, c, schedule, pi] {
    const Graph hc_graph = ParseGraph6(*hc);
    const DegreeClassification classes = ClassifyDegrees(hc_graph, *c);
    const std::vector<double> thresholds =
        schedule->empty() ? DefaultSchedule(PopCount(classes.b_prime), *c) : *schedule;
    const RefinementResult refined = RefineT(hc_graph, classes.b_prime, thresholds);
    Json steps = Json::array();
    for (const RefinementStep& step : refined.steps) {
      steps.push_back(Json{{"vertex", step.vertex},
                           {"threshold", step.threshold},
                           {"size_after", step.size_after}});
    }
    Json payload{{"c", *c},
                 {"A", VertexList(classes.a)},
                 {"B", VertexList(classes.b)},
                 {"B_prime", VertexList(classes.b_prime)},
                 {"schedule", thresholds},
                 {"T", VertexList(refined.t)},
                 {"steps", steps},
                 {"depth", refined.depth},
                 {"final_threshold", refined.final_threshold},
                 {"depth_exceeded", refined.depth_exceeded}};
    if (!pi->empty()) {
      const VertexMap map(hc_graph.order(), *pi);
      if (!map.IsBijection()) throw DomainError("--pi must be a permutation");
      const InfluenceBudget budget = EdgeInfluenceBudget(hc_graph, map, refined.t);
      const Rational expected = ExpectedSwitchCount(hc_graph, map, refined.t);
      Json b = Json::array();
      for (const auto& [pair, count] : budget.b) {
        b.push_back(Json::array({pair.first, pair.second, count}));
      }
      payload["influence"] = b;
      payload["sum_b_squared"] = ToString(budget.sum_b_squared);
      payload["expected_switches"] = ToString(expected);
      payload["expected_switches_value"] = ToDouble(expected);
      HighFloat tail = AzumaTailFromSumSquares(ToDouble(expected), HighFloat(budget.sum_b_squared));
      payload["azuma_no_switch_bound"] = ToJsonNumber(tail);
    }
    return Result{payload, std::nullopt};
  });
}

void CommandLine::AddBounds(CLI::App& app) {
  auto* bounds = app.add_subcommand("bounds", "Probability bound evaluators");
  bounds->require_subcommand(1);

  {
    auto* sub = bounds->add_subcommand("point-mass", "max_t Pr[Bin(N,1/2) = t] against 1/sqrt(N)");
    auto N = std::make_shared<std::int64_t>();
    sub->add_option("--N", *N, "Trials")->required();
    Register(sub, [N] {
      const BoundReport report = BinomialPointMassMax(*N);
      return Result{Json{{"name", report.name},
                         {"inputs", {{"N", *N}}},
                         {"exact", ToString(BinomialPointMassExact(*N))},
                         {"exact_value", ToJsonNumber(*report.exact)},
                         {"bound", ToJsonNumber(report.bound)},
                         {"bound_digits", Digits(report.bound)},
                         {"slack", ToJsonNumber(*report.slack)},
                         {"holds", report.holds}},
                    std::nullopt};
    });
  }
  {
    auto* sub = bounds->add_subcommand("chernoff", "Smallest L whose two-sided tail is at most delta/4");
    auto delta = std::make_shared<double>();
    auto n = std::make_shared<int>();
    sub->add_option("--delta", *delta, "delta in (0, 1)")->required();
    sub->add_option("--n", *n, "Order")->required();
    Register(sub, [delta, n] {
      const ChernoffResult r = ChernoffL(*delta, *n);
      return Result{Json{{"name", "chernoff"},
                         {"inputs", {{"delta", *delta}, {"n", *n}}},
                         {"L", r.L},
                         {"exact", ToString(r.tail)},
                         {"exact_value", ToDouble(r.tail)},
                         {"bound", ToDouble(r.target)},
                         {"tail_below", ToString(r.tail_below)},
                         {"tail_below_value", ToDouble(r.tail_below)},
                         {"holds", r.tail <= r.target && r.tail_below > r.target}},
                    std::nullopt};
    });
  }
  {
    auto* sub = bounds->add_subcommand("azuma", "exp(-2 t^2 / sum b_i^2)");
    auto t = std::make_shared<double>();
    auto b = std::make_shared<std::vector<double>>();
    sub->add_option("--t", *t, "Deviation")->required();
    sub->add_option("--b", *b, "Bounded differences, comma separated")->required()->delimiter(',');
    Register(sub, [t, b] {
      const HighFloat bound = AzumaTail(*t, *b);
      return Result{Json{{"name", "azuma"},
                         {"inputs", {{"t", *t}, {"b", *b}}},
                         {"bound", ToJsonNumber(bound)},
                         {"bound_digits", Digits(bound)}},
                    std::nullopt};
    });
  }
  {
    auto* sub = bounds->add_subcommand("expected-embeddings", "n! 2^(e(H) - N)");
    auto n = std::make_shared<int>();
    auto e = std::make_shared<std::int64_t>();
    sub->add_option("--n", *n, "Order")->required();
    sub->add_option("--e", *e, "Edges of H")->required();
    Register(sub, [n, e] {
      const Rational value = ExpectedEmbeddings(*n, *e);
      return Result{Json{{"name", "expected-embeddings"},
                         {"inputs", {{"n", *n}, {"e", *e}}},
                         {"exact", ToString(value)},
                         {"exact_value", ToDouble(value)}},
                    std::nullopt};
    });
  }
  {
    auto* sub = bounds->add_subcommand(
        "density-decay", "(e(H)/N)^steps against the supergraph completion probability");
    auto e = std::make_shared<std::int64_t>();
    auto N = std::make_shared<std::int64_t>();
    auto steps = std::make_shared<std::int64_t>();
    auto m_star = std::make_shared<std::int64_t>(0);
    sub->add_option("--e", *e, "Edges of H")->required();
    sub->add_option("--N", *N, "Vertex pairs")->required();
    sub->add_option("--steps", *steps, "m2 - m*")->required();
    sub->add_option("--m-star", *m_star, "Conditioning time m*");
    Register(sub, [e, N, steps, m_star] {
      const DensityDecay decay = DensityDecayBound(*e, *N, *steps, *m_star);
      const Rational exact = SupergraphCompletionProb(*e, *N, *m_star, *m_star + *steps);
      return Result{Json{{"name", "density-decay"},
                         {"inputs", {{"e", *e}, {"N", *N}, {"steps", *steps}, {"m_star", *m_star}}},
                         {"exact", ToString(exact)},
                         {"exact_value", ToDouble(exact)},
                         {"bound", ToDouble(decay.crude)},
                         {"bound_exact", ToString(decay.crude)},
                         {"sharp_bound", ToDouble(decay.sharp)},
                         {"sharp_bound_exact", ToString(decay.sharp)},
                         {"slack", ToDouble(decay.crude - exact)},
                         {"holds", exact <= decay.sharp && decay.sharp <= decay.crude}},
                    std::nullopt};
    });
  }
  {
    auto* sub = bounds->add_subcommand("union", "n! exp(-n log n)");
    auto n = std::make_shared<int>();
    auto base = std::make_shared<double>(0.0);
    sub->add_option("--n", *n, "Order")->required();
    sub->add_option("--base", *base, "Logarithm base (natural when omitted)");
    Register(sub, [n, base] {
      Json payload{{"name", "union"}, {"inputs", {{"n", *n}}}};
      if (*base != 0.0) {
        payload["inputs"]["base"] = *base;
        const HighFloat value = UnionBudget(*n, *base);
        payload["bound"] = ToJsonNumber(value);
        payload["bound_digits"] = Digits(value);
      } else {
        const Rational value = UnionBudgetNatural(*n);
        payload["bound"] = ToDouble(value);
        payload["bound_exact"] = ToString(value);
      }
      return Result{payload, std::nullopt};
    });
  }
  {
    auto* sub = bounds->add_subcommand(
        "dense-reduction", "exp(-C n^2 delta / (17 N)) < delta / (48 L) for a chosen C");
    auto c = std::make_shared<double>();
    auto delta = std::make_shared<double>();
    auto n = std::make_shared<int>();
    auto L = std::make_shared<int>();
    sub->add_option("--c", *c, "Constant C")->required();
    sub->add_option("--delta", *delta, "delta in (0, 1)")->required();
    sub->add_option("--n", *n, "Order")->required();
    sub->add_option("--L", *L, "Window coefficient")->required();
    Register(sub, [c, delta, n, L] {
      const DenseReduction r = DenseReductionInequality(*c, *delta, *n, *L);
      return Result{Json{{"name", "dense-reduction"},
                         {"inputs", {{"c", *c}, {"delta", *delta}, {"n", *n}, {"L", *L}}},
                         {"exact", ToJsonNumber(r.lhs)},
                         {"bound", ToJsonNumber(r.rhs)},
                         {"slack", ToJsonNumber(r.rhs - r.lhs)},
                         {"holds", r.holds}},
                    std::nullopt};
    });
  }
}

void CommandLine::AddIngestCheck(CLI::App& app) {
  auto* sub = app.add_subcommand("ingest-check", "Validate a file of graph6 lines");
  auto path = std::make_shared<std::string>();
  auto skip_bad = std::make_shared<bool>(false);
  sub->add_option("--file", *path, "graph6 file")->required();
  sub->add_flag("--skip-bad", *skip_bad, "Count malformed lines instead of failing");
  Register(sub, [path, skip_bad] {
    std::ifstream file(*path);
    if (!file) throw DomainError("cannot open " + *path);
    CorpusReader reader(file, *skip_bad);
    std::uint64_t graphs = 0;
    std::map<int, std::uint64_t> by_order;
    while (auto g = reader.Next()) {
      ++graphs;
      ++by_order[g->order()];
    }
    Json orders = Json::object();
    for (auto [order, count] : by_order) orders[std::to_string(order)] = count;
    Json payload{{"file", *path},
                 {"graphs", graphs},
                 {"by_order", orders},
                 {"bad_lines", reader.bad_lines()}};
    if (reader.bad_lines() > 0) {
      payload["first_bad_line"] = reader.first_bad_line();
      payload["first_bad_message"] = reader.first_bad_message();
    }
    return Result{payload, std::nullopt};
  });
}

void CommandLine::WriteRecord(const std::string& command,
                              const std::vector<std::string>& args, const Json& params,
                              const std::string& started, const std::string& finished,
                              const Json& payload) {
  Json record{{"command", command},
              {"argv", args},
              {"params", params},
              {"seed", used_seed_ ? Json(*used_seed_) : Json(nullptr)},
              {"seed_generated", seed_generated_},
              {"started_at", started},
              {"finished_at", finished},
              {"payload", payload},
              {"version", kVersion}};
  std::ofstream file(globals_.record, std::ios::app);
  if (!file) throw DomainError("cannot open record file " + globals_.record);
  file << record.dump() << "\n";
}

void PrintError(std::ostream& err, const std::string& kind, const std::string& message,
                Json extra = Json::object()) {
  Json error{{"kind", kind}, {"message", message}};
  for (auto& [key, value] : extra.items()) error[key] = value;
  err << Json{{"error", error}}.dump() << "\n";
}

int CommandLine::Run(const std::vector<std::string>& args) {
  CLI::App app("Unique subgraph laboratory", "uniqsub");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--seed", globals_.seed, "Seed for stochastic commands");
  app.add_option("--threads", globals_.threads, "Worker threads (0: all cores)")
      ->envname("UNIQSUB_THREADS");
  app.add_option("--record", globals_.record, "Append an experiment record to this file");
  app.add_flag("--json", globals_.json, "JSON output (the default for every command but enumerate)");

  AddEnumerate(app);
  AddPolya(app);
  AddFExact(app);
  AddFOfH(app);
  AddEstimate(app);
  AddProcess(app);
  AddSwitch(app);
  AddRefineT(app);
  AddBounds(app);
  AddIngestCheck(app);

  std::vector<const char*> argv{"uniqsub"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::ParseError& e) {
    PrintError(err_, "usage", e.what());
    return 2;
  }

  const CLI::App* chosen = &app;
  std::string command;
  while (!chosen->get_subcommands().empty()) {
    chosen = chosen->get_subcommands().front();
    command += (command.empty() ? "" : " ") + chosen->get_name();
  }
  const auto handler = handlers_.find(chosen);
  if (handler == handlers_.end()) {
    PrintError(err_, "usage", "no command given");
    return 2;
  }

  try {
    const std::string started = Timestamp();
    const Result result = handler->second();
    const std::string finished = Timestamp();
    if (result.lines) {
      for (const auto& line : *result.lines) out_ << line << "\n";
    } else {
      out_ << result.payload.dump() << "\n";
    }
    if (!globals_.record.empty()) {
      WriteRecord(command, args, CollectParams(chosen), started, finished, result.payload);
    }
    return 0;
  } catch (const ParseError& e) {
    Json extra{{"offset", e.offset()}};
    if (e.line() != 0) extra["line"] = e.line();
    PrintError(err_, "parse", e.what(), extra);
    return 2;
  } catch (const DomainError& e) {
    PrintError(err_, "domain", e.what());
    return 2;
  } catch (const ResourceError& e) {
    PrintError(err_, "resource", e.what());
    return 2;
  } catch (const std::exception& e) {
    PrintError(err_, "internal", e.what());
    return 1;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandLine cli(out, err);
  return cli.Run(args);
}

}  // namespace uniqsub
