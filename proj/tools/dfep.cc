// Copyright 2026 The DFEP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dfep: command-line front end.
//
// Exit codes: 0 success, 2 bad input (including instances over the oracle
// limits), 3 internal invariant violation.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dfep/builder.h"
#include "dfep/costs.h"
#include "dfep/error.h"
#include "dfep/generators.h"
#include "dfep/instance_io.h"
#include "dfep/oracle.h"
#include "dfep/pairs.h"
#include "dfep/submodular.h"
#include "dfep/tree_io.h"

namespace dfep {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int g_precision = 6;

std::string Dec(const Rational& r) { return FormatDecimal(r, g_precision); }

Json RationalJson(const Rational& r) {
  return Json{{"exact", FormatRational(r)}, {"decimal", Dec(r)}};
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

// ---------------------------------------------------------------- gen

struct GenRandomArgs {
  RandomParams params;
  std::string shape = "dyadic";
  std::string out;
};

int RunGenRandom(GenRandomArgs& args) {
  const auto shape = ParseProbShape(args.shape);
  if (!shape) {
    throw Error(ErrorCode::kInvalidInput, "unknown --prob-shape " + args.shape);
  }
  args.params.prob_shape = *shape;
  Emit(args.out, InstanceToJson(GenRandom(args.params)));
  return kExitOk;
}

struct GenHuffmanArgs {
  int n = 8;
  int max_n = 10;
  std::string out;
};

int RunGenHuffman(const GenHuffmanArgs& args) {
  Emit(args.out, InstanceToJson(GenIdentificationDichotomy(args.n, args.max_n)));
  return kExitOk;
}

struct GenSetCoverArgs {
  std::string in;
  int b = 2;
  std::string eta;
  std::uint64_t seed = 0;
  int universe = 0;
  int sets = 0;
  std::string out;
  std::string cover_out;
};

int RunGenSetCover(const GenSetCoverArgs& args) {
  SetCoverInstance sc;
  if (!args.in.empty()) {
    sc = ParseSetCoverJson(ReadTextFile(args.in));
  } else if (args.universe > 0 && args.sets > 0) {
    sc = RandomSetCover(args.seed, args.universe, args.sets);
  } else {
    throw Error(ErrorCode::kInvalidInput,
                "give --in, or --universe and --sets for a random family");
  }
  std::optional<Rational> eta;
  if (!args.eta.empty()) {
    eta = ParseRational(args.eta);
    if (!eta) throw Error(ErrorCode::kInvalidInput, "bad --eta " + args.eta);
  }
  const auto red = GenSetCoverReduction(sc, args.b, eta);
  if (!args.cover_out.empty()) WriteTextFile(args.cover_out, SetCoverToJson(sc));
  Emit(args.out, InstanceToJson(red.instance));
  return kExitOk;
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string in;
  std::string out;
  std::string dot;
  int threads = 1;
  bool json = false;
};

Json BackboneStats(const Instance& inst, const BuildResult& result) {
  Json rows = Json::array();
  for (const auto& b : result.backbones) {
    const TestSequence seq(b.Sequence(), b.objects);
    const Cost total = TotCost(inst, seq);
    Json row;
    row["invocation"] = b.invocation;
    row["objects"] = b.objects.count();
    row["pairs"] = b.pairs;
    row["B"] = b.budget;
    row["t_A"] = b.t_a;
    row["t_B"] = b.t_b;
    row["covered"] = b.covered;
    row["coverage"] = RationalJson(RatioOrOne(Rational(b.covered), Rational(b.pairs)));
    row["totcost_t_I"] = total;
    row["totcost_over_B"] =
        RationalJson(RatioOrOne(Rational(total), Rational(b.budget)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int RunBuild(const BuildArgs& args) {
  const Instance inst = LoadInstance(args.in);
  const BuildResult result = Build(inst, {args.threads});
  const CostReport costs = TreeCosts(result.tree, inst);
  Emit(args.out, TreeToJson(result.tree, result.backbones));
  if (!args.dot.empty()) WriteTextFile(args.dot, TreeToDot(result.tree, inst));

  const Json stats = BackboneStats(inst, result);
  // With the tree on stdout the summary moves to stderr.
  std::ostream& os = args.out.empty() || args.out == "-" ? std::cerr : std::cout;
  if (args.json) {
    Json j;
    j["cost_W"] = costs.worst;
    j["cost_E"] = RationalJson(costs.expected);
    j["backbones"] = stats;
    os << j.dump(2) << "\n";
    return kExitOk;
  }
  os << "cost_W " << costs.worst << "\n";
  os << "cost_E " << FormatRational(costs.expected) << " (" << Dec(costs.expected)
     << ")\n";
  os << "invocations " << stats.size() << "\n";
  for (const auto& row : stats) {
    os << "  #" << row["invocation"].get<int>() << " |G|=" << row["objects"].get<int>()
       << " P=" << row["pairs"].get<std::int64_t>() << " B=" << row["B"].get<Cost>()
       << " covered=" << row["covered"].get<std::int64_t>() << " ("
       << row["coverage"]["decimal"].get<std::string>() << ")"
       << " totcost/B=" << row["totcost_over_B"]["decimal"].get<std::string>()
       << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string in;
  std::string tree;
  bool json = false;
};

int RunEval(const EvalArgs& args) {
  const Instance inst = LoadInstance(args.in);
  const ParsedTree parsed = ParseTreeJson(ReadTextFile(args.tree), inst.num_objects());
  const auto problems = CheckTree(parsed.tree, inst);
  if (!problems.empty()) {
    std::string message = "tree does not match the instance:";
    for (const auto& p : problems) message += "\n  " + p;
    throw Error(ErrorCode::kTreeMismatch, message);
  }
  const CostReport costs = TreeCosts(parsed.tree, inst);
  if (args.json) {
    std::cout << CostReportToJson(costs) << "\n";
    return kExitOk;
  }
  std::cout << "cost_W " << costs.worst << "\n";
  std::cout << "cost_E " << FormatRational(costs.expected) << " ("
            << Dec(costs.expected) << ")\n";
  return kExitOk;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string in;
  std::string which = "all";
  bool force_limit = false;
  int max_objects = OracleLimits{}.max_objects;
  int max_tests = OracleLimits{}.max_tests;
  bool json = false;
};

OracleLimits LimitsFrom(bool force, int max_objects, int max_tests) {
  if (force) return {64, 30};
  return {max_objects, max_tests};
}

int RunOracle(const OracleArgs& args) {
  static const std::vector<std::string> kAll = {"opt_e", "opt_w", "sepcost", "totcost"};
  std::vector<std::string> which;
  if (args.which == "all") {
    which = kAll;
  } else if (std::find(kAll.begin(), kAll.end(), args.which) != kAll.end()) {
    which = {args.which};
  } else {
    throw Error(ErrorCode::kInvalidInput, "unknown --which " + args.which);
  }
  const Instance inst = LoadInstance(args.in);
  const OracleLimits limits = LimitsFrom(args.force_limit, args.max_objects, args.max_tests);
  Json j;
  for (const auto& w : which) {
    OracleResult r;
    if (w == "opt_e") r = OptExpected(inst, limits);
    if (w == "opt_w") r = OptWorst(inst, limits);
    if (w == "sepcost") r = SepCostStar(inst, limits);
    if (w == "totcost") r = TotCostStar(inst, limits);
    if (args.json) {
      j[w] = Json::parse(OracleResultToJson(r));
      continue;
    }
    std::cout << w << " " << FormatRational(r.value) << " (" << Dec(r.value) << ")";
    if (!r.tree) {
      std::cout << " sequence [";
      for (std::size_t i = 0; i < r.sequence.size(); ++i) {
        std::cout << (i ? "," : "") << r.sequence[i];
      }
      std::cout << "]";
    }
    std::cout << " explored " << r.explored << "\n";
  }
  if (args.json) std::cout << j.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- compare

struct CompareArgs {
  std::string in;
  std::string seed_range;
  GenRandomArgs gen;
  int threads = 1;
  bool force_limit = false;
  bool json = false;
};

struct Comparison {
  Json row;
  Rational ratio_e, ratio_w, coverage, tot_ratio, budget_ratio;
  bool within_w = true;
};

Comparison Compare(const Instance& inst, int threads, const OracleLimits& limits) {
  const BuildResult built = Build(inst, {threads});
  const CostReport costs = TreeCosts(built.tree, inst);
  const OracleResult opt_e = OptExpected(inst, limits);
  const OracleResult opt_w = OptWorst(inst, limits);
  const OracleResult sep = SepCostStar(inst, limits);
  const OracleResult tot = TotCostStar(inst, limits);
  const PairCount pairs = CountPairs(inst, inst.all());
  const Cost opt_w_value = static_cast<Cost>(boost::multiprecision::numerator(opt_w.value));

  Comparison c;
  c.ratio_e = RatioOrOne(costs.expected, opt_e.value);
  c.ratio_w = RatioOrOne(Rational(costs.worst), opt_w.value);
  c.within_w = WithinWorstCostBound(costs.worst, opt_w_value, pairs);

  // Least coverage fraction over invocations with P >= 2.
  c.coverage = 1;
  for (const auto& b : built.backbones) {
    if (b.pairs >= 2) c.coverage = std::min(c.coverage, Rational(b.covered, b.pairs));
  }
  Cost top_total = 0, top_budget = 0;
  if (!built.backbones.empty()) {
    top_total = TotCost(inst, BackboneSequence(built, 0));
    top_budget = built.backbones.front().budget;
  }
  c.tot_ratio = RatioOrOne(Rational(top_total), tot.value);
  c.budget_ratio = RatioOrOne(Rational(top_budget), tot.value);

  Json& r = c.row;
  r["n"] = inst.num_objects();
  r["pairs"] = pairs;
  r["cost_E"] = RationalJson(costs.expected);
  r["cost_W"] = costs.worst;
  r["OPT_E"] = RationalJson(opt_e.value);
  r["OPT_W"] = opt_w_value;
  r["sepcost_star"] = RationalJson(sep.value);
  r["totcost_star"] = RationalJson(tot.value);
  r["cost_E_over_OPT_E"] = RationalJson(c.ratio_e);
  r["cost_W_over_OPT_W"] = RationalJson(c.ratio_w);
  r["worst_bound"] = WorstCostBound(pairs);
  r["within_worst_bound"] = c.within_w;
  r["min_coverage"] = RationalJson(c.coverage);
  r["coverage_target"] = RationalJson(Alpha() * Alpha());
  r["totcost_t_I_over_totcost_star"] = RationalJson(c.tot_ratio);
  r["B_over_totcost_star"] = RationalJson(c.budget_ratio);
  return c;
}

void PrintComparison(const Json& r) {
  auto line = [](const char* name, const Json& v) {
    std::cout << "  " << name << " " << v["exact"].get<std::string>() << " ("
              << v["decimal"].get<std::string>() << ")\n";
  };
  std::cout << "n " << r["n"].get<int>() << "  P(S) " << r["pairs"].get<std::int64_t>()
            << "\n";
  line("cost_E/OPT_E", r["cost_E_over_OPT_E"]);
  line("cost_W/OPT_W", r["cost_W_over_OPT_W"]);
  std::cout << "  worst bound 1+rho*log2 P(S) = " << r["worst_bound"].get<double>()
            << (r["within_worst_bound"].get<bool>() ? " (holds)" : " (VIOLATED)")
            << "\n";
  line("min coverage", r["min_coverage"]);
  line("coverage target", r["coverage_target"]);
  line("totcost(t_I)/totcost*", r["totcost_t_I_over_totcost_star"]);
  line("B/totcost*", r["B_over_totcost_star"]);
}

int RunCompare(CompareArgs& args) {
  const OracleLimits limits = LimitsFrom(args.force_limit, OracleLimits{}.max_objects,
                                         OracleLimits{}.max_tests);
  if (args.seed_range.empty()) {
    if (args.in.empty()) throw Error(ErrorCode::kInvalidInput, "give --in or --seed-range");
    const Comparison c = Compare(LoadInstance(args.in), args.threads, limits);
    if (args.json) {
      std::cout << c.row.dump(2) << "\n";
    } else {
      PrintComparison(c.row);
    }
    return kExitOk;
  }

  const auto colon = args.seed_range.find(':');
  std::uint64_t first = 0, last = 0;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    first = std::stoull(args.seed_range.substr(0, colon));
    last = std::stoull(args.seed_range.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidInput, "--seed-range wants FIRST:LAST");
  }
  if (last < first) throw Error(ErrorCode::kInvalidInput, "empty --seed-range");
  const auto shape = ParseProbShape(args.gen.shape);
  if (!shape) throw Error(ErrorCode::kInvalidInput, "unknown --prob-shape");

  Rational worst_e = 0, worst_w = 0, least_coverage = 1, worst_tot = 0, worst_budget = 0;
  int violations = 0;
  Json rows = Json::array();
  for (std::uint64_t seed = first; seed <= last; ++seed) {
    RandomParams p = args.gen.params;
    p.seed = seed;
    p.prob_shape = *shape;
    Comparison c = Compare(GenRandom(p), args.threads, limits);
    worst_e = std::max(worst_e, c.ratio_e);
    worst_w = std::max(worst_w, c.ratio_w);
    least_coverage = std::min(least_coverage, c.coverage);
    worst_tot = std::max(worst_tot, c.tot_ratio);
    worst_budget = std::max(worst_budget, c.budget_ratio);
    violations += c.within_w ? 0 : 1;
    c.row["seed"] = seed;
    rows.push_back(std::move(c.row));
  }
  Json summary;
  summary["instances"] = rows.size();
  summary["max_cost_E_over_OPT_E"] = RationalJson(worst_e);
  summary["max_cost_W_over_OPT_W"] = RationalJson(worst_w);
  summary["worst_bound_violations"] = violations;
  summary["min_coverage"] = RationalJson(least_coverage);
  summary["max_totcost_t_I_over_totcost_star"] = RationalJson(worst_tot);
  summary["max_B_over_totcost_star"] = RationalJson(worst_budget);
  if (args.json) {
    Json j;
    j["summary"] = summary;
    j["instances"] = rows;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "instances " << rows.size() << "\n";
  for (const char* key : {"max_cost_E_over_OPT_E", "max_cost_W_over_OPT_W", "min_coverage",
                          "max_totcost_t_I_over_totcost_star", "max_B_over_totcost_star"}) {
    std::cout << "  " << key << " " << summary[key]["exact"].get<std::string>() << " ("
              << summary[key]["decimal"].get<std::string>() << ")\n";
  }
  std::cout << "  worst_bound_violations " << violations << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  std::string in;
  bool json = false;
};

int RunStats(const StatsArgs& args) {
  const Instance inst = LoadInstance(args.in);
  std::map<Cost, int> spectrum;
  for (const auto& t : inst.tests()) ++spectrum[t.cost];
  Json j;
  j["n"] = inst.num_objects();
  j["m"] = inst.num_classes();
  j["tests"] = inst.num_tests();
  j["outcomes"] = inst.num_outcomes();
  j["pairs"] = CountPairs(inst, inst.all());
  j["total_cost"] = inst.TotalCost();
  Json costs = Json::object();
  for (const auto& [c, k] : spectrum) costs[std::to_string(c)] = k;
  j["cost_spectrum"] = costs;
  if (args.json) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n " << inst.num_objects() << "\nm " << inst.num_classes() << "\n|T| "
            << inst.num_tests() << "\nl " << inst.num_outcomes() << "\nP(S) "
            << j["pairs"].get<std::int64_t>() << "\ntotal cost " << inst.TotalCost()
            << "\ncosts";
  for (const auto& [c, k] : spectrum) std::cout << " " << c << "x" << k;
  std::cout << "\n";
  return kExitOk;
}

void AddRandomOptions(CLI::App* cmd, GenRandomArgs& a) {
  cmd->add_option("--seed", a.params.seed, "RNG seed");
  cmd->add_option("--n", a.params.num_objects, "objects")->check(CLI::PositiveNumber);
  cmd->add_option("--m", a.params.num_classes, "classes")->check(CLI::PositiveNumber);
  cmd->add_option("--tests", a.params.num_tests, "tests")->check(CLI::PositiveNumber);
  cmd->add_option("--outcomes", a.params.num_outcomes, "outcome labels per test")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-cost", a.params.max_cost, "largest test cost")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--prob-shape", a.shape, "uniform | dyadic | sparse");
}

int Main(int argc, char** argv) {
  CLI::App app{"Decision trees for discrete function evaluation"};
  app.require_subcommand(1, 1);
  app.add_option("--precision", g_precision, "significant digits for decimals")
      ->check(CLI::Range(1, 40));

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1, 1);
  GenRandomArgs random_args;
  auto* gen_random = gen->add_subcommand("random", "random instance");
  AddRandomOptions(gen_random, random_args);
  gen_random->add_option("--out", random_args.out, "output file (default stdout)");

  GenHuffmanArgs huffman_args;
  auto* gen_huffman = gen->add_subcommand("huffman", "identification dichotomy family");
  gen_huffman->add_option("--n", huffman_args.n, "objects")->required();
  gen_huffman->add_option("--max-n", huffman_args.max_n, "cap on n (2^n tests)");
  gen_huffman->add_option("--out", huffman_args.out, "output file (default stdout)");

  GenSetCoverArgs sc_args;
  auto* gen_sc = gen->add_subcommand("setcover", "set-cover reduction instance");
  gen_sc->add_option("--in", sc_args.in, "set cover JSON");
  gen_sc->add_option("--b", sc_args.b, "number of classes b >= 2");
  gen_sc->add_option("--eta", sc_args.eta, "eta as a rational, default 1/(2(n+b-2)+2)");
  gen_sc->add_option("--seed", sc_args.seed, "seed for a random family");
  gen_sc->add_option("--universe", sc_args.universe, "random family universe size");
  gen_sc->add_option("--sets", sc_args.sets, "random family size");
  gen_sc->add_option("--cover-out", sc_args.cover_out, "write the set cover JSON here");
  gen_sc->add_option("--out", sc_args.out, "output file (default stdout)");

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "build a DecTree");
  build->add_option("--in", build_args.in, "instance file")->required();
  build->add_option("--out", build_args.out, "tree JSON (default stdout)");
  build->add_option("--dot", build_args.dot, "Graphviz output");
  build->add_option("--threads", build_args.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  build->add_flag("--json", build_args.json, "summary as JSON");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "costs of a given tree");
  eval->add_option("--in", eval_args.in, "instance file")->required();
  eval->add_option("--tree", eval_args.tree, "tree JSON")->required();
  eval->add_flag("--json", eval_args.json, "JSON output");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "exact optima by enumeration");
  oracle->add_option("--in", oracle_args.in, "instance file")->required();
  oracle->add_option("--which", oracle_args.which, "opt_e | opt_w | sepcost | totcost | all");
  oracle->add_flag("--force-limit", oracle_args.force_limit, "lift the size limits");
  oracle->add_option("--max-objects", oracle_args.max_objects, "object limit");
  oracle->add_option("--max-tests", oracle_args.max_tests, "test limit");
  oracle->add_flag("--json", oracle_args.json, "JSON output");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "DecTree against the oracles");
  compare->add_option("--in", compare_args.in, "instance file");
  compare->add_option("--seed-range", compare_args.seed_range,
                      "FIRST:LAST, compare random instances instead");
  AddRandomOptions(compare, compare_args.gen);
  compare->add_option("--threads", compare_args.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  compare->add_flag("--force-limit", compare_args.force_limit, "lift the oracle limits");
  compare->add_flag("--json", compare_args.json, "JSON output");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "instance summary");
  stats->add_option("--in", stats_args.in, "instance file")->required();
  stats->add_flag("--json", stats_args.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen_random) return RunGenRandom(random_args);
    if (*gen_huffman) return RunGenHuffman(huffman_args);
    if (*gen_sc) return RunGenSetCover(sc_args);
    if (*build) return RunBuild(build_args);
    if (*eval) return RunEval(eval_args);
    if (*oracle) return RunOracle(oracle_args);
    if (*compare) return RunCompare(compare_args);
    if (*stats) return RunStats(stats_args);
  } catch (const Error& e) {
    std::cerr << "dfep: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return e.is_internal() ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "dfep: internal: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace
}  // namespace dfep

int main(int argc, char** argv) { return dfep::Main(argc, argv); }
