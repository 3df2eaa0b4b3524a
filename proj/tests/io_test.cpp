#include <string>

#include "bifurcate/error.hpp"
#include "bifurcate/io/instance.hpp"
#include "bifurcate/io/run.hpp"
#include "bifurcate/problems/rsp.hpp"
#include "bifurcate/problems/selection.hpp"
#include "bifurcate/problems/towers.hpp"
#include "doctest.h"

using namespace bifurcate;
using nlohmann::json;

namespace {

json collinear_rsp() {
  return json::parse(R"({"problem":"udg-rsp","dim":2,"points":[[0,0],[1,0],[2,0],[3,0]],"s":0,"t":3,"k":2})");
}

}  // namespace

TEST_CASE("each problem parses from its schema") {
  CHECK(io::parse_instance(collinear_rsp())->tag() == "udg-rsp");
  const auto weighted = io::parse_instance(
      json::parse(R"({"problem":"udg-rsp","dim":3,"points":[[0,0,0],[1,1,1],[2,0,1]],"s":0,"t":2,"w":4.5})"));
  CHECK(static_cast<const problems::RspInstance&>(*weighted).weighted());
  CHECK(io::parse_instance(json::parse(R"({"problem":"dfds","dim":2,"A":[[0,0],[1,0]],"B":[[0,1],[1,1],[2,1]]})"))
            ->object_count() == 5);
  const auto segs = io::parse_instance(json::parse(
      R"({"problem":"selection","objects":"segments","mode":"mul","k":1,"data":[[0,0,1,0],[0,2,1,3]]})"));
  CHECK(static_cast<const problems::SelectionInstance&>(*segs).mode() == geom::ExpansionMode::Multiplicative);
  CHECK(io::parse_instance(json::parse(R"({"problem":"matching","mode":"add","disks":[[0,0,1],[3,0,1]]})"))
            ->object_count() == 2);
  const auto by_index = io::parse_instance(json::parse(R"({"problem":"towers","terrain":[[0,0],[1,2],[2,0]],"q":[0,2]})"));
  const auto by_point =
      io::parse_instance(json::parse(R"({"problem":"towers","terrain":[[0,0],[1,2],[2,0]],"q":[[0,0],[2,0]]})"));
  CHECK(static_cast<const problems::TowersInstance&>(*by_index).bases() ==
        static_cast<const problems::TowersInstance&>(*by_point).bases());
}

TEST_CASE("schema errors are input errors") {
  CHECK_THROWS_AS(io::parse_instance(json::array()), InputError);
  CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"problem":"nope"})")), InputError);
  auto doc = collinear_rsp();
  doc.erase("k");
  CHECK_THROWS_AS(io::parse_instance(doc), InputError);
  doc["k"] = 2;
  doc["w"] = 5.0;
  CHECK_THROWS_AS(io::parse_instance(doc), InputError);
  doc = collinear_rsp();
  doc["points"][1] = json::array({1.0});
  CHECK_THROWS_AS(io::parse_instance(doc), InputError);
  doc = collinear_rsp();
  doc["s"] = -1;
  CHECK_THROWS_AS(io::parse_instance(doc), InputError);
  CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"problem":"matching","mode":"sideways","disks":[]})")),
                  InputError);
  CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"problem":"towers","terrain":[[0,0],[1,0],[2,0]],"q":[0,2]})")),
                  DegenerateError);
  CHECK_THROWS(io::read_json_file("/nonexistent/instance.json"));
}

TEST_CASE("digest is stable and content-sensitive") {
  const auto a = collinear_rsp();
  CHECK(io::digest(a) == io::digest(collinear_rsp()));
  CHECK(io::digest(a).size() == 16);
  auto b = a;
  b["k"] = 3;
  CHECK(io::digest(a) != io::digest(b));
  CHECK(io::run_seed(1, io::digest(a)) != io::run_seed(1, io::digest(b)));
  CHECK(io::run_seed(1, io::digest(a)) != io::run_seed(2, io::digest(a)));
}

TEST_CASE("generated instances parse and echo their parameters") {
  for (const char* p : io::kProblemTags) {
    io::GenerateParams g;
    g.problem = p;
    g.n = 10;
    g.seed = 3;
    const json doc = io::generate_instance(g);
    CHECK(doc["generator"]["seed"] == 3);
    CHECK(doc["generator"]["n"] == 10);
    CHECK(io::declared_size(doc) == (std::string(p) == "dfds" ? 20u : 10u));
    CHECK(io::parse_instance(doc)->tag() == p);
    CHECK(io::generate_instance(g).dump() == doc.dump());
  }
  io::GenerateParams odd;
  odd.problem = "matching";
  odd.n = 7;
  CHECK_THROWS_AS(io::generate_instance(odd), InputError);
  io::GenerateParams k_too_big;
  k_too_big.problem = "udg-rsp";
  k_too_big.n = 5;
  k_too_big.k = 50;
  CHECK(io::generate_instance(k_too_big)["k"] == 4);
}

TEST_CASE("runs, results and CSV rows") {
  const auto inst = io::parse_instance(collinear_rsp());
  const std::string digest = io::digest(collinear_rsp());
  for (io::Strategy s : io::kAllStrategies) {
    const auto r = io::run(*inst, digest, {s, std::nullopt, 9});
    CHECK(r.r_star == 2.0);
    const json res = r.result_json();
    CHECK(res["strategy"] == io::to_string(s));
    CHECK(res["seed"] == 9);
    CHECK(res["degenerate"] == false);
    CHECK(io::csv_row(r, "ok").starts_with("udg-rsp,4," + std::string(io::to_string(s)) + ",2,"));
    CHECK(io::csv_row(r, "ok").ends_with(",ok"));
    CHECK_FALSE(r.telemetry_json(false).contains("wall_time"));
  }
  const auto a = io::run(*inst, digest, {io::Strategy::Bifurcation, 1, 5});
  const auto b = io::run(*inst, digest, {io::Strategy::Bifurcation, 1, 5});
  CHECK(a.result_json().dump() == b.result_json().dump());
  CHECK(a.telemetry_json(false).dump() == b.telemetry_json(false).dump());
  CHECK(io::parse_strategy("baseline") == io::Strategy::Baseline);
  CHECK_THROWS_AS(io::parse_strategy("guess"), InputError);
  CHECK(io::format_double(0.1) == "0.1");
}
