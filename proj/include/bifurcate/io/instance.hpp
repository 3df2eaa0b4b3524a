#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>

#include "bifurcate/engine/problem.hpp"
#include "json.hpp"

namespace bifurcate::io {

/// Problem tags accepted in instance files.
inline constexpr const char* kProblemTags[] = {"udg-rsp", "dfds", "selection", "matching", "towers"};

/// Builds a problem from its instance JSON. Throws InputError on schema
/// problems and the problem's own errors on invalid data.
std::unique_ptr<engine::ProblemInstance> parse_instance(const nlohmann::json& doc);

/// Reads and parses an instance file.
nlohmann::json read_json_file(const std::string& path);

/// Stable 64-bit digest (hex) of the instance's compact JSON text.
std::string digest(const nlohmann::json& doc);

/// Number of objects recorded in an instance document, without building it.
std::size_t declared_size(const nlohmann::json& doc);

struct GenerateParams {
  std::string problem;
  std::size_t n = 20;
  std::uint64_t seed = 1;
  std::size_t dim = 2;
  std::string objects = "disks";  // selection: disks | segments
  std::string mode = "add";       // selection, matching: add | mul
  std::optional<std::uint64_t> k;  // udg-rsp hop bound or selection rank
  bool weighted = false;           // udg-rsp length bound instead of hops
};

/// Random instance JSON; the parameters are echoed under "generator".
nlohmann::json generate_instance(const GenerateParams& params);

}  // namespace bifurcate::io
