// Copyright 2026 The kopt Authors.
//
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

#include "kopt/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "kopt/alpha.h"
#include "kopt/decomp.h"
#include "kopt/dp_engine.h"
#include "kopt/generators.h"
#include "kopt/io.h"
#include "kopt/moves.h"
#include "kopt/oracle.h"
#include "kopt/rational.h"

namespace kopt {
namespace {

using nlohmann::json;

struct Config {
  int k = 0;
  std::string alpha;
  std::string mode = "dp";
  std::string policy = "best";
  std::string in;
  std::string tour;
  std::string out;
  std::string out_tour;
  int threads = 0;
  int max_steps = 1000;
  uint64_t budget = kDefaultNaiveBudget;
  // ck / patterns
  bool per_pattern = false;
  bool allow_large_k = false;
  bool list = false;
  // gen
  std::string type = "random";
  int n = 0;
  uint64_t seed = 1;
  int64_t wmax = 1000;
  std::string weights;
  bool shift = false;
  std::string out_instance;
  // oracle
  std::string oracle_kind;
  std::string edges;
  // bench
  std::string sizes = "40,60,80,100";
  std::string modes = "dp,naive";
  int repeats = 3;
};

int ResolveThreads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("KOPT_THREADS"); env != nullptr) {
    int value = 0;
    if (absl::SimpleAtoi(env, &value) && value > 0) return value;
  }
  return 1;
}

absl::StatusOr<Rational> ResolveAlpha(const Config& cfg) {
  if (cfg.alpha.empty()) return DefaultAlpha(cfg.k);
  absl::StatusOr<Rational> alpha = ParseRational(cfg.alpha);
  if (!alpha.ok()) return alpha.status();
  if (*alpha < 0 || *alpha > 1) {
    return absl::InvalidArgumentError("--alpha must lie in [0, 1]");
  }
  return alpha;
}

absl::Status CheckOrder(int k) {
  if (k < kMinMoveOrder || k > kMaxSolverOrder) {
    return absl::InvalidArgumentError(absl::StrCat(
        "--k must be in [", kMinMoveOrder, ", ", kMaxSolverOrder, "]"));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<int64_t>> ParseIntList(const std::string& text) {
  std::vector<int64_t> values;
  for (absl::string_view token : absl::StrSplit(text, ',', absl::SkipEmpty())) {
    int64_t v = 0;
    if (!absl::SimpleAtoi(token, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("not an integer: '", token, "'"));
    }
    values.push_back(v);
  }
  return values;
}

absl::Status Emit(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty()) {
    out << text << "\n";
    return absl::OkStatus();
  }
  return WriteFile(path, text + "\n");
}

struct Problem {
  Instance instance;
  Tour tour;
};

absl::StatusOr<Problem> LoadProblem(const Config& cfg) {
  absl::StatusOr<Instance> inst = LoadInstance(cfg.in);
  if (!inst.ok()) return inst.status();
  if (cfg.tour.empty()) return Problem{*inst, Tour::Identity(inst->size())};
  absl::StatusOr<Tour> tour = LoadTour(cfg.tour, inst->size());
  if (!tour.ok()) return tour.status();
  return Problem{*std::move(inst), *std::move(tour)};
}

json PairsToJson(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [p, q] : pairs) out.push_back({p + 1, q + 1});
  return out;
}

// A found move together with the pattern it uses.
struct Found {
  Weight gain = 0;
  std::optional<ConnectionPattern> pattern;
  Embedding embedding;
};

absl::StatusOr<Found> FindOnce(const Config& cfg, const Instance& inst,
                               const Tour& tour, const Rational& alpha) {
  Found found;
  if (cfg.mode == "naive") {
    absl::StatusOr<OracleResult> r =
        NaiveBestMove(inst, tour, cfg.k, cfg.budget);
    if (!r.ok()) return r.status();
    absl::StatusOr<ConnectionPattern> m =
        ConnectionPattern::FromPairs(cfg.k, r->pattern);
    if (!m.ok()) return m.status();
    if (absl::StatusOr<Tour> check = ApplyMove(inst, tour, *m, r->embedding);
        !check.ok()) {
      return check.status();
    }
    found.gain = r->gain;
    found.pattern = *m;
    found.embedding = r->embedding;
    return found;
  }
  SearchOptions options;
  options.alpha = alpha;
  options.policy = cfg.policy == "first" ? Policy::kFirst : Policy::kBest;
  options.threads = ResolveThreads(cfg.threads);
  absl::StatusOr<SolveResult> r = BestMove(inst, tour, cfg.k, options);
  if (!r.ok()) return r.status();
  absl::StatusOr<ConnectionPattern> m =
      ConnectionPattern::FromPairs(cfg.k, r->move->pattern);
  if (!m.ok()) return m.status();
  found.gain = *r->gain;
  found.pattern = *m;
  found.embedding = *r->embedding;
  return found;
}

absl::StatusOr<int> FindMoveCommand(const Config& cfg, std::ostream& out,
                                    std::ostream& err) {
  if (absl::Status s = CheckOrder(cfg.k); !s.ok()) return s;
  absl::StatusOr<Rational> alpha = ResolveAlpha(cfg);
  if (!alpha.ok()) return alpha.status();
  absl::StatusOr<Problem> problem = LoadProblem(cfg);
  if (!problem.ok()) return problem.status();
  absl::StatusOr<Found> found =
      FindOnce(cfg, problem->instance, problem->tour, *alpha);
  if (!found.ok()) return found.status();

  const bool improving = found->gain > 0;
  const KMove move = MakeMove(problem->instance, problem->tour,
                              *found->pattern, found->embedding);
  json report = {{"k", cfg.k},
                 {"mode", cfg.mode},
                 {"gain", found->gain},
                 {"improving", improving},
                 {"tour_weight", TourWeight(problem->instance, problem->tour)},
                 {"move", MoveToJson(move)}};
  if (cfg.mode == "dp") {
    report["alpha"] = RationalToString(*alpha);
    report["policy"] = cfg.policy;
  }
  if (absl::Status s = Emit(cfg.out, report.dump(), out); !s.ok()) return s;
  err << absl::StrFormat("%d-opt (%s): gain %d, %s\n", cfg.k, cfg.mode,
                         found->gain,
                         improving ? "improving" : "no improving move");
  return improving ? kExitImproving : kExitNoImprovement;
}

absl::StatusOr<int> LocalSearchCommand(const Config& cfg, std::ostream& out,
                                       std::ostream& err) {
  if (absl::Status s = CheckOrder(cfg.k); !s.ok()) return s;
  if (cfg.max_steps < 0) {
    return absl::InvalidArgumentError("--max-steps must be >= 0");
  }
  absl::StatusOr<Rational> alpha = ResolveAlpha(cfg);
  if (!alpha.ok()) return alpha.status();
  absl::StatusOr<Problem> problem = LoadProblem(cfg);
  if (!problem.ok()) return problem.status();
  const Instance& inst = problem->instance;

  Tour tour = problem->tour;
  const Weight initial = TourWeight(inst, tour);
  Weight weight = initial;
  json history = json::array();
  for (int step = 1; step <= cfg.max_steps; ++step) {
    absl::StatusOr<Found> found = FindOnce(cfg, inst, tour, *alpha);
    if (!found.ok()) return found.status();
    if (found->gain <= 0) break;
    absl::StatusOr<Tour> next =
        ApplyMove(inst, tour, *found->pattern, found->embedding);
    if (!next.ok()) return next.status();
    const Weight next_weight = TourWeight(inst, *next);
    if (next_weight >= weight) {
      return absl::InternalError("tour weight did not decrease");
    }
    tour = *std::move(next);
    weight = next_weight;
    history.push_back({{"step", step}, {"gain", found->gain},
                       {"weight", weight}});
  }
  json report = {{"k", cfg.k},
                 {"mode", cfg.mode},
                 {"initial_weight", initial},
                 {"final_weight", weight},
                 {"steps", history.size()},
                 {"history", history},
                 {"tour", TourToJson(tour)}};
  if (cfg.mode == "dp") report["alpha"] = RationalToString(*alpha);
  if (!cfg.out_tour.empty()) {
    if (absl::Status s = WriteFile(cfg.out_tour, TourToJson(tour).dump() + "\n");
        !s.ok()) {
      return s;
    }
  }
  if (absl::Status s = Emit(cfg.out, report.dump(), out); !s.ok()) return s;
  err << absl::StrFormat("%d-opt local search: %d -> %d in %d steps\n", cfg.k,
                         initial, weight, history.size());
  return kExitImproving;
}

absl::StatusOr<int> CkCommand(const Config& cfg, std::ostream& out,
                              std::ostream& err) {
  CkOptions options;
  options.per_pattern = cfg.per_pattern;
  options.allow_large_k = cfg.allow_large_k;
  options.threads = ResolveThreads(cfg.threads);
  absl::StatusOr<CkResult> r = ComputeCk(cfg.k, options);
  if (!r.ok()) return r.status();
  json report = {{"k", r->k},
                 {"c", RationalToString(r->c)},
                 {"alpha", RationalToString(r->alpha)},
                 {"global_c", RationalToString(r->global_c)},
                 {"valid_patterns", r->valid_patterns},
                 {"interference_classes", r->interference_classes}};
  if (cfg.per_pattern) {
    json rows = json::array();
    for (const PatternExponent& p : r->per_pattern) {
      rows.push_back({{"index", p.pattern_index + 1},
                      {"pattern", PairsToJson(p.pattern)},
                      {"profile", p.profile.t},
                      {"alpha", RationalToString(p.best.alpha)},
                      {"c", RationalToString(p.best.c)}});
    }
    report["per_pattern"] = rows;
  }
  if (absl::Status s = Emit(cfg.out, report.dump(), out); !s.ok()) return s;
  err << "c(" << r->k << ") = " << RationalToString(r->c)
      << " at alpha = " << RationalToString(r->alpha) << "\n";
  return 0;
}

absl::StatusOr<int> PatternsCommand(const Config& cfg, std::ostream& out,
                                    std::ostream&) {
  uint64_t matchings = 0;
  json list = json::array();
  uint64_t valid = 0;
  if (cfg.k < kMinMoveOrder || cfg.k > kMaxMoveOrder) {
    return absl::InvalidArgumentError(absl::StrCat(
        "--k must be in [", kMinMoveOrder, ", ", kMaxMoveOrder, "]"));
  }
  ForEachMatching(cfg.k, [&](const ConnectionPattern& m) {
    ++matchings;
    if (!IsValidPattern(m)) return;
    ++valid;
    if (cfg.list) list.push_back(PairsToJson(m.pairs()));
  });
  json report = {{"k", cfg.k}, {"matchings", matchings}, {"valid", valid}};
  if (cfg.list) report["patterns"] = list;
  if (absl::Status s = Emit(cfg.out, report.dump(), out); !s.ok()) return s;
  return 0;
}

absl::StatusOr<ReductionInput> ReductionFromFlags(const Config& cfg) {
  if (cfg.weights.empty()) {
    if (cfg.n < 3) return absl::InvalidArgumentError("--n must be >= 3");
    return RandomReductionInput(cfg.n, cfg.seed, cfg.wmax);
  }
  absl::StatusOr<std::vector<int64_t>> values = ParseIntList(cfg.weights);
  if (!values.ok()) return values.status();
  int n = 0;
  while (static_cast<size_t>(n) * (n - 1) / 2 < values->size()) ++n;
  if (static_cast<size_t>(n) * (n - 1) / 2 != values->size() || n < 3) {
    return absl::InvalidArgumentError(
        "--weights needs n(n-1)/2 values (upper triangle, row-major), n >= 3");
  }
  if (cfg.n != 0 && cfg.n != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("--n ", cfg.n, " disagrees with ", values->size(),
                     " weights"));
  }
  ReductionInput input{n, std::vector<std::vector<Weight>>(
                              n, std::vector<Weight>(n, 0))};
  size_t next = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      input.weights[i][j] = input.weights[j][i] = (*values)[next++];
    }
  }
  return input;
}

absl::StatusOr<int> GenCommand(const Config& cfg, std::ostream& out,
                               std::ostream& err) {
  if (cfg.out_instance.empty()) {
    return absl::InvalidArgumentError("--out-instance is required");
  }
  json report = {{"type", cfg.type}};
  if (cfg.type == "random") {
    absl::StatusOr<Instance> inst = GenerateRandom(cfg.n, cfg.seed, cfg.wmax);
    if (!inst.ok()) return inst.status();
    if (absl::Status s =
            WriteFile(cfg.out_instance, InstanceToJson(*inst).dump() + "\n");
        !s.ok()) {
      return s;
    }
    if (!cfg.out_tour.empty()) {
      const Tour tour = RandomTour(cfg.n, cfg.seed);
      if (absl::Status s =
              WriteFile(cfg.out_tour, TourToJson(tour).dump() + "\n");
          !s.ok()) {
        return s;
      }
    }
    report["n"] = cfg.n;
    report["vertices"] = cfg.n;
  } else {
    if (cfg.out_tour.empty()) {
      return absl::InvalidArgumentError(
          "--out-tour is required for --type neg-triangle");
    }
    absl::StatusOr<ReductionInput> input = ReductionFromFlags(cfg);
    if (!input.ok()) return input.status();
    absl::StatusOr<ReducedInstance> reduced =
        ReduceNegativeTriangle(*input, cfg.shift);
    if (!reduced.ok()) return reduced.status();
    if (absl::Status s = WriteFile(
            cfg.out_instance, InstanceToJson(reduced->instance).dump() + "\n");
        !s.ok()) {
      return s;
    }
    if (absl::Status s =
            WriteFile(cfg.out_tour, TourToJson(reduced->tour).dump() + "\n");
        !s.ok()) {
      return s;
    }
    report["n"] = input->n;
    report["vertices"] = reduced->instance.size();
    report["m1"] = reduced->m1;
    report["m2"] = reduced->m2;
    report["negative_triangle"] = HasNegativeTriangle(*input);
  }
  if (absl::Status s = Emit(cfg.out, report.dump(), out); !s.ok()) return s;
  err << "wrote " << cfg.out_instance << "\n";
  return 0;
}

absl::StatusOr<Graph> GraphFromFlags(const Config& cfg) {
  if (cfg.n < 0 || cfg.n > kMaxTreewidthVertices) {
    return absl::InvalidArgumentError(absl::StrCat(
        "--n must be in [0, ", kMaxTreewidthVertices, "]"));
  }
  Graph g(cfg.n);
  for (absl::string_view token :
       absl::StrSplit(cfg.edges, ',', absl::SkipEmpty())) {
    std::vector<absl::string_view> ends = absl::StrSplit(token, '-');
    int u = 0, v = 0;
    if (ends.size() != 2 || !absl::SimpleAtoi(ends[0], &u) ||
        !absl::SimpleAtoi(ends[1], &v) || u < 1 || v < 1 || u > cfg.n ||
        v > cfg.n || u == v) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad edge '", token, "'; expected u-v with 1 <= u,v <= n"));
    }
    g.AddEdge(u - 1, v - 1);
  }
  return g;
}

absl::StatusOr<int> OracleCommand(const Config& cfg, std::ostream& out,
                                  std::ostream& err) {
  if (cfg.oracle_kind == "best-move") {
    Config naive = cfg;
    naive.mode = "naive";
    return FindMoveCommand(naive, out, err);
  }
  json report;
  if (cfg.oracle_kind == "treewidth") {
    absl::StatusOr<Graph> g = GraphFromFlags(cfg);
    if (!g.ok()) return g.status();
    absl::StatusOr<TreewidthResult> exact = TreewidthExact(*g);
    if (!exact.ok()) return exact.status();
    report = {{"n", cfg.n}, {"treewidth", exact->width}};
    if (g->size() <= kMaxBruteforceTreewidth) {
      absl::StatusOr<int> brute = TreewidthBruteforce(*g);
      if (!brute.ok()) return brute.status();
      report["bruteforce"] = *brute;
    }
  } else {
    absl::StatusOr<ReductionInput> input = ReductionFromFlags(cfg);
    if (!input.ok()) return input.status();
    const std::optional<std::array<int, 3>> t = FindNegativeTriangle(*input);
    report = {{"n", input->n}, {"negative_triangle", t.has_value()}};
    report["triangle"] =
        t ? json::array({(*t)[0] + 1, (*t)[1] + 1, (*t)[2] + 1}) : json();
  }
  if (absl::Status s = Emit(cfg.out, report.dump(), out); !s.ok()) return s;
  return 0;
}

absl::StatusOr<int> BenchCommand(const Config& cfg, std::ostream& out,
                                 std::ostream& err) {
  if (absl::Status s = CheckOrder(cfg.k); !s.ok()) return s;
  if (cfg.repeats < 1) return absl::InvalidArgumentError("--repeats must be >= 1");
  absl::StatusOr<Rational> alpha = ResolveAlpha(cfg);
  if (!alpha.ok()) return alpha.status();
  absl::StatusOr<std::vector<int64_t>> sizes = ParseIntList(cfg.sizes);
  if (!sizes.ok()) return sizes.status();
  std::vector<std::string> modes = absl::StrSplit(cfg.modes, ',');
  for (const std::string& mode : modes) {
    if (mode != "dp" && mode != "naive") {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown mode '", mode, "'"));
    }
  }

  std::ostringstream csv;
  csv << "k,n,alpha,mode,wall_ms,gain\n";
  for (int64_t n : *sizes) {
    if (n < 5 || n > std::numeric_limits<int>::max()) {
      return absl::InvalidArgumentError("bench sizes must be >= 5");
    }
    absl::StatusOr<Instance> inst =
        GenerateRandom(static_cast<int>(n), cfg.seed, cfg.wmax);
    if (!inst.ok()) return inst.status();
    const Tour tour = RandomTour(static_cast<int>(n), cfg.seed + 1);
    for (const std::string& mode : modes) {
      Config run = cfg;
      run.mode = mode;
      double best_ms = std::numeric_limits<double>::infinity();
      Weight gain = 0;
      for (int rep = 0; rep < cfg.repeats; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        absl::StatusOr<Found> found = FindOnce(run, *inst, tour, *alpha);
        const auto stop = std::chrono::steady_clock::now();
        if (!found.ok()) return found.status();
        gain = found->gain;
        best_ms = std::min(
            best_ms,
            std::chrono::duration<double, std::milli>(stop - start).count());
      }
      csv << absl::StrFormat("%d,%d,%s,%s,%.3f,%d\n", cfg.k, n,
                             mode == "dp" ? RationalToString(*alpha) : "-",
                             mode, best_ms, gain);
      err << absl::StrFormat("n=%d %s: %.3f ms\n", n, mode, best_ms);
    }
  }
  std::string text = csv.str();
  text.pop_back();
  if (absl::Status s = Emit(cfg.out, text, out); !s.ok()) return s;
  return 0;
}

void AddSearchFlags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--k", cfg.k, "move order")->required();
  cmd->add_option("--alpha", cfg.alpha,
                  "bucket exponent p/q in [0,1] (default: per-k optimum)");
  cmd->add_option("--mode", cfg.mode, "dp or naive")
      ->check(CLI::IsMember({"dp", "naive"}));
  cmd->add_option("--policy", cfg.policy, "best or first")
      ->check(CLI::IsMember({"best", "first"}));
  cmd->add_option("--in", cfg.in, "instance file (TSPLIB or JSON)")
      ->required();
  cmd->add_option("--tour", cfg.tour, "tour file (JSON); default 1..n");
  cmd->add_option("--out", cfg.out, "write the JSON report here");
  cmd->add_option("--threads", cfg.threads, "worker threads")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--budget", cfg.budget, "candidate budget of naive mode");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Config cfg;
  CLI::App app{"k-opt improving moves by dynamic programming over tree "
               "decompositions",
               "kopt"};
  app.require_subcommand(1);

  CLI::App* find_move = app.add_subcommand("find-move", "best k-move");
  AddSearchFlags(find_move, cfg);

  CLI::App* local_search =
      app.add_subcommand("local-search", "apply improving k-moves");
  AddSearchFlags(local_search, cfg);
  local_search->add_option("--max-steps", cfg.max_steps, "step limit");
  local_search->add_option("--out-tour", cfg.out_tour, "final tour file");

  CLI::App* ck = app.add_subcommand("ck", "running-time exponent c(k)");
  ck->add_option("--k", cfg.k, "move order")->required();
  ck->add_flag("--per-pattern", cfg.per_pattern, "per-pattern table");
  ck->add_flag("--allow-large-k", cfg.allow_large_k, "permit k >= 9");
  ck->add_option("--threads", cfg.threads, "worker threads");
  ck->add_option("--out", cfg.out, "write the JSON report here");

  CLI::App* patterns =
      app.add_subcommand("patterns", "count or list valid patterns");
  patterns->add_option("--k", cfg.k, "move order")->required();
  patterns->add_flag("--list", cfg.list, "list every valid pattern");
  patterns->add_option("--out", cfg.out, "write the JSON report here");

  CLI::App* gen = app.add_subcommand("gen", "generate instances");
  gen->add_option("--type", cfg.type, "random or neg-triangle")
      ->check(CLI::IsMember({"random", "neg-triangle"}));
  gen->add_option("--n", cfg.n, "vertex count");
  gen->add_option("--seed", cfg.seed, "random seed");
  gen->add_option("--wmax", cfg.wmax, "largest absolute weight");
  gen->add_option("--weights", cfg.weights,
                  "neg-triangle input, upper triangle row-major");
  gen->add_flag("--shift", cfg.shift, "shift reduced weights to >= 0");
  gen->add_option("--out-instance", cfg.out_instance, "instance file");
  gen->add_option("--out-tour", cfg.out_tour, "tour file");
  gen->add_option("--out", cfg.out, "write the JSON summary here");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force references");
  oracle->add_option("kind", cfg.oracle_kind, "best-move|treewidth|neg-triangle")
      ->required()
      ->check(CLI::IsMember({"best-move", "treewidth", "neg-triangle"}));
  oracle->add_option("--k", cfg.k, "move order (best-move)");
  oracle->add_option("--in", cfg.in, "instance file (best-move)");
  oracle->add_option("--tour", cfg.tour, "tour file (best-move)");
  oracle->add_option("--budget", cfg.budget, "candidate budget");
  oracle->add_option("--n", cfg.n, "vertex count");
  oracle->add_option("--edges", cfg.edges, "graph edges u-v,... (treewidth)");
  oracle->add_option("--weights", cfg.weights,
                     "triangle input, upper triangle row-major");
  oracle->add_option("--seed", cfg.seed, "random triangle input seed");
  oracle->add_option("--wmax", cfg.wmax, "largest absolute weight");
  oracle->add_option("--out", cfg.out, "write the JSON report here");

  CLI::App* bench = app.add_subcommand("bench", "dp vs naive timing, CSV");
  bench->add_option("--k", cfg.k, "move order")->default_val(4);
  bench->add_option("--n", cfg.sizes, "comma separated sizes");
  bench->add_option("--modes", cfg.modes, "comma separated modes");
  bench->add_option("--alpha", cfg.alpha, "bucket exponent for dp");
  bench->add_option("--seed", cfg.seed, "random seed");
  bench->add_option("--wmax", cfg.wmax, "largest weight");
  bench->add_option("--repeats", cfg.repeats, "best-of repeats");
  bench->add_option("--budget", cfg.budget, "naive candidate budget")
      ->default_val(uint64_t{1'000'000'000});
  bench->add_option("--threads", cfg.threads, "worker threads");
  bench->add_option("--out", cfg.out, "write the CSV here");

  std::vector<const char*> argv = {"kopt"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  absl::StatusOr<int> result = absl::InvalidArgumentError("no command");
  if (*find_move) {
    result = FindMoveCommand(cfg, out, err);
  } else if (*local_search) {
    result = LocalSearchCommand(cfg, out, err);
  } else if (*ck) {
    result = CkCommand(cfg, out, err);
  } else if (*patterns) {
    result = PatternsCommand(cfg, out, err);
  } else if (*gen) {
    result = GenCommand(cfg, out, err);
  } else if (*oracle) {
    result = OracleCommand(cfg, out, err);
  } else if (*bench) {
    result = BenchCommand(cfg, out, err);
  }
  if (!result.ok()) {
    err << "error: " << result.status().message() << "\n";
    return kExitError;
  }
  return *result;
}

}  // namespace kopt
