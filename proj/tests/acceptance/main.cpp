// Acceptance run: prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bifurcate/error.hpp"
#include "bifurcate/io/instance.hpp"
#include "bifurcate/io/run.hpp"
#include "bifurcate/oracle/caps.hpp"
#include "bifurcate/oracle/matching.hpp"
#include "bifurcate/oracle/oracle.hpp"
#include "bifurcate/oracle/samplers.hpp"
#include "bifurcate/problems/matching.hpp"
#include "checks.hpp"

using namespace bifurcate;
using nlohmann::json;

namespace {

struct Family {
  std::string name;
  std::string problem;
};

const std::vector<Family> kFamilies = {
    {"udg-rsp", "udg-rsp"},     {"udg-rsp-weighted", "udg-rsp"}, {"dfds", "dfds"},
    {"selection", "selection"}, {"matching", "matching"},        {"towers", "towers"},
};

// Seed-fixed generator parameters for instance `index` of a family.
io::GenerateParams family_params(const Family& f, std::uint64_t index) {
  std::mt19937_64 rng(0xACCE55 + 7919 * index + std::hash<std::string>{}(f.name) % 1000);
  std::uniform_int_distribution<std::size_t> size(5, 60);
  io::GenerateParams p;
  p.problem = f.problem;
  p.seed = 1000003 * index + 17;
  p.n = size(rng);
  if (f.name == "udg-rsp" || f.name == "udg-rsp-weighted") {
    p.dim = index % 2 ? 3 : 2;
    p.weighted = f.name == "udg-rsp-weighted";
    if (!p.weighted) p.k = std::uniform_int_distribution<std::uint64_t>(1, p.n - 1)(rng);
  } else if (f.name == "dfds") {
    p.dim = std::vector<std::size_t>{2, 3, 5}[index % 3];
  } else if (f.name == "selection") {
    p.objects = index % 2 ? "segments" : "disks";
    p.mode = (index / 2) % 2 ? "mul" : "add";
  } else if (f.name == "matching") {
    p.n += p.n % 2;
    p.mode = index % 2 ? "mul" : "add";
  }
  return p;
}

struct Tally {
  std::uint64_t runs = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> notes;
  void fail(const std::string& note) {
    ++violations;
    if (notes.size() < 5) notes.push_back(note);
  }
};

void print(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << " " << name << ": " << detail << std::endl;
}

std::string notes_text(const Tally& t) {
  std::string out;
  for (const auto& n : t.notes) out += " [" + n + "]";
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct BatchStats {
  Tally oracle;
  Tally shrink;
  Tally phases;
  Tally phases_sound;
  Tally determinism;
  std::map<std::string, std::uint64_t> per_family;
  std::uint64_t exhaustive_checked = 0;
  double max_deviation = 0.0;
};

std::string run_key(const io::RunOutcome& r) {
  return r.result_json().dump() + r.telemetry_json(false).dump();
}

void run_instance(const Family& f, std::uint64_t index, BatchStats& st) {
  const json doc = io::generate_instance(family_params(f, index));
  const std::string digest = io::digest(doc);
  const std::string tag = f.name + "#" + std::to_string(index);
  const auto inst = io::parse_instance(doc);
  std::map<io::Strategy, io::RunOutcome> runs;
  for (io::Strategy s : io::kAllStrategies) runs[s] = io::run(*inst, digest, {s, std::nullopt, index});
  ++st.per_family[f.name];

  const double want = runs[io::Strategy::Oracle].r_star;
  for (io::Strategy s : {io::Strategy::Bifurcation, io::Strategy::Baseline}) {
    const auto& r = runs[s];
    const double dev = oracle::deviation(r.r_star, want);
    st.max_deviation = std::max(st.max_deviation, dev);
    ++st.oracle.runs;
    if (dev > oracle::kTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << tag << " " << io::to_string(s) << " " << r.r_star << " vs " << want;
      st.oracle.fail(msg.str());
    }
    if (!r.degenerate) {
      ++st.shrink.runs;
      if (!r.telemetry.shrink_certified) st.shrink.fail(tag + " " + std::string(io::to_string(s)));
    }
  }

  // Exhaustive matching check of the answer on small disk sets.
  if (f.name == "matching" && inst->object_count() <= oracle::kMaxExhaustiveMatching) {
    const auto& m = static_cast<const problems::MatchingInstance&>(*inst);
    const double r = runs[io::Strategy::Bifurcation].r_star;
    ++st.oracle.runs;
    ++st.exhaustive_checked;
    const double slack = oracle::kTolerance * std::max(1.0, std::fabs(r));
    const bool at = oracle::has_perfect_matching_exhaustive(oracle::disk_graph(m, r + slack));
    const bool below = r > 0.0 && oracle::has_perfect_matching_exhaustive(oracle::disk_graph(m, r - slack));
    if (!at || below) st.oracle.fail(tag + " exhaustive matching disagrees");
  }

  const auto& bif = runs[io::Strategy::Bifurcation];
  if (!bif.degenerate) {
    const auto& t = bif.telemetry;
    ++st.phases.runs;
    if (!t.phase_accounting_holds()) {
      st.phases.fail(tag + " D=" + std::to_string(t.decision_budget) + " s=" + std::to_string(t.s) +
                     " ok=" + std::to_string(t.phases_successful) + " bad=" + std::to_string(t.phases_unsuccessful));
    }
    for (const auto& ph : t.phases) {
      ++st.phases_sound.runs;
      if (!ph.successful && ph.bifurcations * (2 * t.s + 1) + t.s < t.decision_budget) st.phases_sound.fail(tag);
    }
  }

  if (index % 5 == 0) {
    for (io::Strategy s : {io::Strategy::Bifurcation, io::Strategy::Baseline}) {
      ++st.determinism.runs;
      const auto again = io::run(*io::parse_instance(io::generate_instance(family_params(f, index))), digest,
                                 {s, std::nullopt, index});
      if (run_key(again) != run_key(runs[s])) st.determinism.fail(tag + " " + std::string(io::to_string(s)));
    }
    ++st.determinism.runs;
    if (io::generate_instance(family_params(f, index)).dump() != doc.dump()) st.determinism.fail(tag + " generate");
  }
}

// Pairs r1 < r2 drawn near critical values and across the initial interval.
std::pair<double, double> draw_pair(const engine::ProblemInstance& inst, std::mt19937_64& rng) {
  const auto iv = inst.initial_interval();
  const double lo = std::max(iv.alpha, std::numeric_limits<double>::denorm_min());
  const double hi = iv.beta * 1.25 + 1e-9;
  std::uniform_real_distribution<double> u(lo, hi);
  auto near_critical = [&]() {
    auto ev = inst.sample_criticals(1, rng);
    if (ev.empty()) return u(rng);
    double v = ev.front().value;
    const int steps = static_cast<int>(rng() % 3);
    for (int i = 0; i < steps; ++i) v = rng() % 2 ? std::nextafter(v, INFINITY) : std::nextafter(v, -INFINITY);
    return std::max(v, lo);
  };
  double a = rng() % 2 ? near_critical() : u(rng);
  double b = rng() % 3 == 0 ? std::nextafter(a, INFINITY) : (rng() % 2 ? near_critical() : u(rng));
  if (a > b) std::swap(a, b);
  return {a, b};
}

void monotonicity(Tally& predicate, Tally& decide, std::map<std::string, std::string>& detail) {
  constexpr std::size_t kTrials = 10000;
  std::mt19937_64 rng(0x40707);
  const std::map<std::string, std::vector<oracle::PredicateSampler>> predicates = {
      {"udg-rsp", {oracle::distance_predicate_sampler(2), oracle::distance_predicate_sampler(3)}},
      {"udg-rsp-weighted", {oracle::distance_predicate_sampler(2), oracle::distance_predicate_sampler(3)}},
      {"dfds",
       {oracle::distance_predicate_sampler(2), oracle::distance_predicate_sampler(3),
        oracle::distance_predicate_sampler(5)}},
      {"selection",
       {oracle::disk_predicate_sampler(geom::ExpansionMode::Additive),
        oracle::disk_predicate_sampler(geom::ExpansionMode::Multiplicative),
        oracle::segment_predicate_sampler(geom::ExpansionMode::Additive),
        oracle::segment_predicate_sampler(geom::ExpansionMode::Multiplicative)}},
      {"matching",
       {oracle::disk_predicate_sampler(geom::ExpansionMode::Additive),
        oracle::disk_predicate_sampler(geom::ExpansionMode::Multiplicative)}},
      {"towers", {oracle::visibility_predicate_sampler()}},
  };
  for (const auto& f : kFamilies) {
    const auto& samplers = predicates.at(f.name);
    std::uint64_t pred_trials = 0;
    for (std::size_t i = 0; i < samplers.size(); ++i) {
      const std::size_t share = kTrials / samplers.size() + (i < kTrials % samplers.size() ? 1 : 0);
      const auto rep = oracle::check_monotonicity(samplers[i], share, rng);
      pred_trials += rep.trials;
      predicate.runs += rep.trials;
      for (const auto& w : rep.witnesses) predicate.fail(f.name + " " + w);
      predicate.violations += rep.violations - rep.witnesses.size();
    }

    std::uint64_t dec_trials = 0;
    for (std::uint64_t index = 0; dec_trials < kTrials; ++index) {
      auto params = family_params(f, 50000 + index);
      const auto inst = io::parse_instance(io::generate_instance(params));
      for (int q = 0; q < 50 && dec_trials < kTrials; ++q, ++dec_trials) {
        const auto [r1, r2] = draw_pair(*inst, rng);
        ++decide.runs;
        if (inst->decide(r1) && !inst->decide(r2)) {
          std::ostringstream msg;
          msg.precision(17);
          msg << f.name << " seed " << params.seed << " r1=" << r1 << " r2=" << r2;
          decide.fail(msg.str());
        }
      }
    }
    detail[f.name] = std::to_string(pred_trials) + "+" + std::to_string(dec_trials);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  bool all_pass = true;
  auto report = [&](int id, const std::string& name, bool pass, const std::string& detail) {
    all_pass &= pass;
    print(id, name, pass, detail);
  };

  // Criteria 1, 2, 3 and 7 share one batch.
  constexpr std::uint64_t kPerFamily = 1000;
  BatchStats st;
  const auto batch_start = std::chrono::steady_clock::now();
  for (const auto& f : kFamilies) {
    for (std::uint64_t i = 0; i < kPerFamily; ++i) {
      try {
        run_instance(f, i, st);
      } catch (const std::exception& e) {
        st.oracle.fail(f.name + "#" + std::to_string(i) + " threw: " + e.what());
      }
    }
  }
  const double batch_time = seconds_since(batch_start);
  {
    std::string counts;
    bool enough = true;
    for (const auto& f : kFamilies) {
      counts += " " + f.name + "=" + std::to_string(st.per_family[f.name]);
      enough &= st.per_family[f.name] >= kPerFamily;
    }
    std::ostringstream d;
    d << "instances" << counts << "; comparisons=" << st.oracle.runs << " exhaustive=" << st.exhaustive_checked
      << " violations=" << st.oracle.violations << " max_deviation=" << st.max_deviation << " time=" << batch_time
      << "s" << notes_text(st.oracle);
    report(1, "oracle equivalence", enough && st.oracle.violations == 0, d.str());
  }
  report(2, "shrink certification", st.shrink.violations == 0 && st.shrink.runs > 0,
         "solves=" + std::to_string(st.shrink.runs) + " uncertified=" + std::to_string(st.shrink.violations) +
             notes_text(st.shrink));
  report(3, "phase accounting", st.phases.violations == 0,
         "solves=" + std::to_string(st.phases.runs) + " violations=" + std::to_string(st.phases.violations) +
             "; weaker per-phase bound x >= (D-s)/(2s+1): phases=" + std::to_string(st.phases_sound.runs) +
             " violations=" + std::to_string(st.phases_sound.violations) + notes_text(st.phases));

  {
    Tally predicate, decide;
    std::map<std::string, std::string> per;
    monotonicity(predicate, decide, per);
    std::string counts;
    for (const auto& [k, v] : per) counts += " " + k + "=" + v;
    report(4, "monotonicity", predicate.violations == 0 && decide.violations == 0,
           "trials (predicate+decide)" + counts + "; violations=" + std::to_string(predicate.violations) + "+" +
               std::to_string(decide.violations) + notes_text(predicate) + notes_text(decide));
  }

  {
    io::GenerateParams p;
    p.problem = "udg-rsp";
    p.n = 10000;
    p.seed = 10000;
    const json doc = io::generate_instance(p);
    const auto inst = io::parse_instance(doc);
    const auto start = std::chrono::steady_clock::now();
    const auto r = io::run(*inst, io::digest(doc), {io::Strategy::Bifurcation, std::nullopt, 1});
    const double wall = seconds_since(start);
    const double limit = 64.0 * std::log2(10000.0);
    std::ostringstream d;
    d << "n=10000 k=" << doc["k"] << " r*=" << r.r_star << " decide_calls=" << r.telemetry.decide_calls
      << " (limit " << static_cast<int>(limit) << ") L=" << r.telemetry.L << " time=" << wall << "s (limit 60s)";
    report(5, "decision-call economy", r.telemetry.decide_calls <= limit && wall <= 60.0, d.str());
  }

  {
    const auto outcome = acceptance::run_checks(acceptance::known_value_checks(cli));
    std::string failed;
    for (const auto& f : outcome.failures) failed += " [" + f + "]";
    report(6, "known values", outcome.failures.empty() && !cli.empty(),
           "examples=" + std::to_string(outcome.total) + " failed=" + std::to_string(outcome.failures.size()) +
               (cli.empty() ? " (no CLI path given)" : "") + failed);
  }

  report(7, "determinism", st.determinism.violations == 0 && st.determinism.runs > 0,
         "repeats=" + std::to_string(st.determinism.runs) + " mismatches=" +
             std::to_string(st.determinism.violations) + notes_text(st.determinism));
  return all_pass ? 0 : 1;
}
