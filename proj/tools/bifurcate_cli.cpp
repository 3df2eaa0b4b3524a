#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bifurcate/error.hpp"
#include "bifurcate/io/instance.hpp"
#include "bifurcate/io/run.hpp"
#include "bifurcate/log.hpp"
#include "bifurcate/oracle/oracle.hpp"

namespace {

using namespace bifurcate;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBadInput = 2;

std::optional<std::uint64_t> parse_L(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || v == 0) {
    throw InputError("--L must be 'auto' or a positive integer");
  }
  return v;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

struct GenerateArgs {
  io::GenerateParams params;
  std::optional<std::uint64_t> k;
  std::string out;
};

struct SolveArgs {
  std::string input;
  std::string problem;
  std::string strategy = "bifurcation";
  std::string L = "auto";
  std::uint64_t seed = 1;
  std::string out;
  std::string telemetry;
};

struct CompareArgs {
  std::vector<std::string> inputs;
  io::GenerateParams gen;
  std::optional<std::uint64_t> k;
  std::size_t count = 0;
  std::vector<std::string> strategies;
  std::string L = "auto";
  std::uint64_t seed = 1;
  std::string csv;
  std::string out;
};

void check_problem(const std::string& expected, const json& doc) {
  if (!expected.empty() && doc.value("problem", "") != expected) {
    throw InputError("instance is '" + doc.value("problem", "") + "' but --problem is '" + expected + "'");
  }
}

int do_generate(GenerateArgs& a) {
  a.params.k = a.k;
  write_text(a.out, pretty(io::generate_instance(a.params)));
  return kExitOk;
}

int do_solve(const SolveArgs& a) {
  const json doc = io::read_json_file(a.input);
  check_problem(a.problem, doc);
  const auto inst = io::parse_instance(doc);
  const io::RunOptions opts{io::parse_strategy(a.strategy), parse_L(a.L), a.seed};
  const auto outcome = io::run(*inst, io::digest(doc), opts);
  write_text(a.out, pretty(outcome.result_json()));
  if (!a.telemetry.empty()) write_text(a.telemetry, pretty(outcome.telemetry_json()));
  if (outcome.degenerate) {
    std::cerr << "degenerate instance: r* is the bottom of the parameter domain\n";
    return kExitBadInput;
  }
  return kExitOk;
}

struct BatchItem {
  std::string label;
  json doc;
};

int do_compare(CompareArgs& a) {
  std::vector<io::Strategy> strategies;
  for (const auto& s : a.strategies) strategies.push_back(io::parse_strategy(s));
  if (strategies.empty()) strategies.assign(std::begin(io::kAllStrategies), std::end(io::kAllStrategies));
  const auto L = parse_L(a.L);

  std::vector<BatchItem> batch;
  for (const auto& path : a.inputs) batch.push_back({path, io::read_json_file(path)});
  a.gen.k = a.k;
  const std::uint64_t first_seed = a.gen.seed;
  for (std::size_t i = 0; i < a.count; ++i) {
    a.gen.seed = first_seed + i;
    batch.push_back({a.gen.problem + "#" + std::to_string(a.gen.seed), io::generate_instance(a.gen)});
  }

  std::string csv = std::string(io::kCsvHeader) + "\n";
  json reports = json::array();
  double max_dev = 0.0;
  bool any_deviation = false, any_degenerate = false;
  for (const auto& item : batch) {
    const std::string digest = io::digest(item.doc);
    std::unique_ptr<engine::ProblemInstance> inst;
    try {
      inst = io::parse_instance(item.doc);
    } catch (const DegenerateError& e) {
      any_degenerate = true;
      log().info("{}: {}", item.label, e.what());
      for (auto s : strategies) {
        csv += item.doc.value("problem", "") + "," + std::to_string(io::declared_size(item.doc)) + "," +
               std::string(io::to_string(s)) + ",,,,,,,degenerate\n";
      }
      continue;
    }
    std::vector<io::RunOutcome> runs;
    std::map<std::string, double> answers;
    for (auto s : strategies) {
      runs.push_back(io::run(*inst, digest, io::RunOptions{s, L, a.seed}));
      answers[std::string(io::to_string(s))] = runs.back().r_star;
    }
    const double reference = runs.front().r_star;
    for (const auto& r : runs) {
      const double dev = oracle::deviation(r.r_star, reference);
      max_dev = std::max(max_dev, dev);
      const bool bad = dev > oracle::kTolerance;
      any_deviation |= bad;
      any_degenerate |= r.degenerate;
      csv += io::csv_row(r, bad ? "deviation" : r.degenerate ? "degenerate" : "ok") + "\n";
    }
    if (answers.count("oracle")) {
      std::map<std::string, double> others = answers;
      const double oracle_value = others["oracle"];
      others.erase("oracle");
      reports.push_back(oracle::make_report(std::string(inst->tag()), digest, oracle_value, others).to_json());
    }
  }
  write_text(a.csv, csv);
  if (!a.out.empty()) write_text(a.out, pretty(reports));
  std::cout << "instances=" << batch.size() << " strategies=" << strategies.size()
            << " max_deviation=" << io::format_double(max_dev) << (any_deviation ? " FAIL" : " ok") << "\n";
  if (any_deviation) return kExitError;
  return any_degenerate ? kExitBadInput : kExitOk;
}

void add_generator_flags(CLI::App* cmd, io::GenerateParams& p, std::optional<std::uint64_t>& k) {
  cmd->add_option("--n", p.n, "Instance size");
  cmd->add_option("--dim", p.dim, "Dimension (udg-rsp, dfds)");
  cmd->add_option("--objects", p.objects, "selection objects: disks | segments");
  cmd->add_option("--mode", p.mode, "Growth mode: add | mul");
  cmd->add_option("--k", k, "Hop bound (udg-rsp) or rank (selection)");
  cmd->add_flag("--weighted", p.weighted, "udg-rsp with a path length bound");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric search by bifurcation: instance generation, solving and comparison"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a random instance");
  g->add_option("--problem", gen.params.problem, "udg-rsp | dfds | selection | matching | towers")->required();
  g->add_option("--seed", gen.params.seed, "Random seed");
  g->add_option("--out", gen.out, "Output file (default stdout)");
  add_generator_flags(g, gen.params, gen.k);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one instance");
  s->add_option("--input", solve.input, "Instance JSON")->required();
  s->add_option("--problem", solve.problem, "Expected problem tag");
  s->add_option("--strategy", solve.strategy, "bifurcation | baseline | oracle");
  s->add_option("--L", solve.L, "Shrink target: auto or a count");
  s->add_option("--seed", solve.seed, "Random seed");
  s->add_option("--out", solve.out, "Result JSON (default stdout)");
  s->add_option("--telemetry", solve.telemetry, "Telemetry JSON");

  CompareArgs cmp;
  auto* c = app.add_subcommand("compare", "Run several strategies on a batch and check they agree");
  c->add_option("--input", cmp.inputs, "Instance files (repeatable)");
  c->add_option("--problem", cmp.gen.problem, "Generate instances of this problem");
  c->add_option("--count", cmp.count, "Number of generated instances");
  c->add_option("--instance-seed", cmp.gen.seed, "Seed of the first generated instance");
  c->add_option("--strategy", cmp.strategies, "Strategies to run (repeatable, default all)");
  c->add_option("--L", cmp.L, "Shrink target: auto or a count");
  c->add_option("--seed", cmp.seed, "Solver seed");
  c->add_option("--csv", cmp.csv, "CSV table (default stdout)");
  c->add_option("--out", cmp.out, "Oracle report JSON");
  add_generator_flags(c, cmp.gen, cmp.k);

  CLI11_PARSE(app, argc, argv);
  try {
    if (g->parsed()) return do_generate(gen);
    if (s->parsed()) return do_solve(solve);
    if (cmp.count > 0 && cmp.gen.problem.empty()) throw InputError("--count needs --problem");
    return do_compare(cmp);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
