#include "bifurcate/io/run.hpp"

#include <charconv>
#include <chrono>

#include "bifurcate/error.hpp"
#include "bifurcate/oracle/oracle.hpp"

namespace bifurcate::io {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Bifurcation:
      return "bifurcation";
    case Strategy::Baseline:
      return "baseline";
    case Strategy::Oracle:
      return "oracle";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  for (Strategy s : kAllStrategies) {
    if (text == to_string(s)) return s;
  }
  throw InputError("unknown strategy '" + std::string(text) + "' (expected bifurcation|baseline|oracle)");
}

std::uint64_t run_seed(std::uint64_t seed, std::string_view digest) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (unsigned char c : digest) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  // splitmix64 finalizer
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

RunOutcome run(const engine::ProblemInstance& inst, std::string_view digest, const RunOptions& options) {
  RunOutcome out;
  out.problem = std::string(inst.tag());
  out.n = inst.object_count();
  out.strategy = options.strategy;
  out.seed = options.seed;
  engine::Rng rng(run_seed(options.seed, digest));
  if (options.strategy == Strategy::Oracle) {
    const auto start = std::chrono::steady_clock::now();
    out.r_star = oracle::oracle_solve(inst);
    out.degenerate = inst.degenerate_answer().has_value();
    out.telemetry.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }
  engine::SolveResult res = options.strategy == Strategy::Baseline
                                ? engine::baseline_solve(inst, rng)
                                : engine::solve(inst, engine::SolveOptions{options.L}, rng);
  out.r_star = res.r_star;
  out.witness = res.witness;
  out.degenerate = res.degenerate;
  out.telemetry = std::move(res.telemetry);
  return out;
}

namespace {

nlohmann::json witness_json(const std::optional<engine::CriticalEvent>& w) {
  if (!w) return nullptr;
  nlohmann::json ids = nlohmann::json::array();
  const std::size_t arity = w->kind == engine::EventKind::Triple ? 3 : w->kind == engine::EventKind::Pair ? 2 : 0;
  for (std::size_t i = 0; i < arity; ++i) ids.push_back(w->ids[i]);
  const char* kind = w->kind == engine::EventKind::Triple ? "triple" : w->kind == engine::EventKind::Pair ? "pair" : "non-pair";
  return {{"kind", kind}, {"ids", ids}, {"value", w->value}};
}

}  // namespace

nlohmann::json RunOutcome::result_json() const {
  return {{"problem", problem}, {"n", n},           {"strategy", to_string(strategy)}, {"seed", seed},
          {"r_star", r_star},   {"degenerate", degenerate}, {"witness", witness_json(witness)}};
}

nlohmann::json RunOutcome::telemetry_json(bool include_wall_time) const {
  auto j = telemetry.to_json(include_wall_time);
  j["problem"] = problem;
  j["strategy"] = to_string(strategy);
  return j;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_row(const RunOutcome& r, std::string_view status) {
  const auto& t = r.telemetry;
  std::string row = r.problem + "," + std::to_string(r.n) + "," + std::string(to_string(r.strategy)) + "," +
                    format_double(r.r_star) + "," + std::to_string(t.decide_calls) + "," +
                    std::to_string(t.phases_successful) + "," + std::to_string(t.phases_unsuccessful) + "," +
                    std::to_string(t.bifurcations) + "," + format_double(t.wall_time) + "," + std::string(status);
  return row;
}

}  // namespace bifurcate::io
