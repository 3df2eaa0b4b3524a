#include "bifurcate/io/instance.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bifurcate/error.hpp"
#include "bifurcate/problems/frechet.hpp"
#include "bifurcate/problems/generate.hpp"
#include "bifurcate/problems/matching.hpp"
#include "bifurcate/problems/rsp.hpp"
#include "bifurcate/problems/selection.hpp"
#include "bifurcate/problems/towers.hpp"

namespace bifurcate::io {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw InputError(std::string("instance is missing field '") + name + "'");
  return doc.at(name);
}

template <class T>
T number(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number()) throw InputError(std::string("field '") + name + "' must be a number");
  return v.get<T>();
}

std::size_t index_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> row(const json& v, std::size_t width, const char* what) {
  if (!v.is_array() || v.size() != width) {
    throw InputError(std::string(what) + " entries must be arrays of " + std::to_string(width) + " numbers");
  }
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw InputError(std::string(what) + " entries must be numeric");
    out.push_back(x.get<double>());
  }
  return out;
}

geom::PointSet point_set(const json& list, std::size_t dim, const char* what) {
  if (!list.is_array()) throw InputError(std::string("field '") + what + "' must be an array");
  std::vector<double> flat;
  for (const auto& p : list) {
    const auto r = row(p, dim, what);
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return {dim, std::move(flat)};
}

std::size_t dimension(const json& doc) {
  const auto dim = index_field(doc, "dim");
  if (dim < 1) throw InputError("field 'dim' must be at least 1");
  return dim;
}

std::vector<geom::Disk> disks(const json& list) {
  if (!list.is_array()) throw InputError("disk data must be an array");
  std::vector<geom::Disk> out;
  for (const auto& d : list) {
    const auto r = row(d, 3, "disk");
    out.emplace_back(geom::Point2{r[0], r[1]}, r[2]);
  }
  return out;
}

std::vector<geom::Segment> segments(const json& list) {
  if (!list.is_array()) throw InputError("segment data must be an array");
  std::vector<geom::Segment> out;
  for (const auto& s : list) {
    const auto r = row(s, 4, "segment");
    out.push_back(geom::Segment::from_endpoints({r[0], r[1]}, {r[2], r[3]}));
  }
  return out;
}

std::unique_ptr<engine::ProblemInstance> parse_rsp(const json& doc) {
  const std::size_t dim = dimension(doc);
  auto pts = point_set(field(doc, "points"), dim, "points");
  const std::size_t s = index_field(doc, "s"), t = index_field(doc, "t");
  if (doc.contains("k") == doc.contains("w")) throw InputError("udg-rsp instance needs exactly one of 'k' or 'w'");
  if (doc.contains("k")) {
    return std::make_unique<problems::RspInstance>(std::move(pts), s, t, problems::HopBound{index_field(doc, "k")});
  }
  return std::make_unique<problems::RspInstance>(std::move(pts), s, t, problems::LengthBound{number<double>(doc, "w")});
}

std::unique_ptr<engine::ProblemInstance> parse_dfds(const json& doc) {
  const std::size_t dim = dimension(doc);
  return std::make_unique<problems::FrechetInstance>(point_set(field(doc, "A"), dim, "A"),
                                                     point_set(field(doc, "B"), dim, "B"));
}

std::string text_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_string()) throw InputError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::unique_ptr<engine::ProblemInstance> parse_selection(const json& doc) {
  const auto mode = geom::parse_expansion_mode(text_field(doc, "mode"));
  const std::string kind = text_field(doc, "objects");
  const json& data = field(doc, "data");
  problems::PlanarObjects objects;
  if (kind == "disks") {
    objects = disks(data);
  } else if (kind == "segments") {
    objects = segments(data);
  } else {
    throw InputError("field 'objects' must be 'disks' or 'segments'");
  }
  return std::make_unique<problems::SelectionInstance>(std::move(objects), mode, index_field(doc, "k"));
}

std::unique_ptr<engine::ProblemInstance> parse_matching(const json& doc) {
  const auto mode = geom::parse_expansion_mode(text_field(doc, "mode"));
  return std::make_unique<problems::MatchingInstance>(disks(field(doc, "disks")), mode);
}

std::unique_ptr<engine::ProblemInstance> parse_towers(const json& doc) {
  const json& t = field(doc, "terrain");
  if (!t.is_array()) throw InputError("field 'terrain' must be an array");
  std::vector<geom::Point2> vertices;
  for (const auto& p : t) {
    const auto r = row(p, 2, "terrain");
    vertices.push_back({r[0], r[1]});
  }
  geom::Terrain terrain(std::move(vertices));
  const json& q = field(doc, "q");
  if (!q.is_array()) throw InputError("field 'q' must be an array");
  if (!q.empty() && q.front().is_number_integer()) {
    std::vector<std::size_t> ids;
    for (const auto& v : q) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("'q' indices must be non-negative integers");
      ids.push_back(v.get<std::size_t>());
    }
    return std::make_unique<problems::TowersInstance>(std::move(terrain), ids);
  }
  std::vector<geom::Point2> bases;
  for (const auto& p : q) {
    const auto r = row(p, 2, "q");
    bases.push_back({r[0], r[1]});
  }
  return std::make_unique<problems::TowersInstance>(std::move(terrain), std::move(bases));
}

json points_json(const geom::PointSet& pts) {
  json out = json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    json p = json::array();
    for (double x : pts[i]) p.push_back(x);
    out.push_back(std::move(p));
  }
  return out;
}

json disks_json(const std::vector<geom::Disk>& list) {
  json out = json::array();
  for (const auto& d : list) out.push_back({d.center().x, d.center().y, d.radius()});
  return out;
}

json segments_json(const std::vector<geom::Segment>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back({s.source().x, s.source().y, s.target().x, s.target().y});
  return out;
}

}  // namespace

std::unique_ptr<engine::ProblemInstance> parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  const std::string tag = text_field(doc, "problem");
  if (tag == "udg-rsp") return parse_rsp(doc);
  if (tag == "dfds") return parse_dfds(doc);
  if (tag == "selection") return parse_selection(doc);
  if (tag == "matching") return parse_matching(doc);
  if (tag == "towers") return parse_towers(doc);
  throw InputError("unknown problem '" + tag + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string digest(const json& doc) {
  // FNV-1a over the compact text.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t declared_size(const json& doc) {
  const std::string tag = doc.value("problem", "");
  auto count = [&](const char* name) -> std::size_t {
    return doc.contains(name) && doc.at(name).is_array() ? doc.at(name).size() : 0;
  };
  if (tag == "udg-rsp") return count("points");
  if (tag == "dfds") return count("A") + count("B");
  if (tag == "selection") return count("data");
  if (tag == "matching") return count("disks");
  if (tag == "towers") return count("q");
  return 0;
}

json generate_instance(const GenerateParams& p) {
  std::mt19937_64 rng(p.seed);
  json doc{{"problem", p.problem}};
  json echo{{"n", p.n}, {"seed", p.seed}};
  const std::size_t n = p.n;
  if (p.problem == "udg-rsp") {
    if (n < 2) throw InputError("udg-rsp needs n >= 2");
    if (p.dim != 2 && p.dim != 3) throw InputError("udg-rsp needs dim 2 or 3");
    const double side = std::pow(static_cast<double>(n), 1.0 / static_cast<double>(p.dim));
    const auto pts = problems::random_points(n, p.dim, side, rng);
    doc["dim"] = p.dim;
    doc["points"] = points_json(pts);
    doc["s"] = 0;
    doc["t"] = n - 1;
    if (p.weighted) {
      doc["w"] = 1.5 * pts.distance(0, n - 1);
    } else {
      const auto root = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      doc["k"] = std::clamp<std::uint64_t>(p.k.value_or(root), 1, n - 1);
    }
    echo["dim"] = p.dim;
    echo["weighted"] = p.weighted;
  } else if (p.problem == "dfds") {
    if (n < 1) throw InputError("dfds needs n >= 1");
    // A is a random walk; B follows it with noise and occasional detours.
    std::normal_distribution<double> walk(0.0, 1.0), noise(0.0, 0.3), detour(0.0, 4.0);
    std::bernoulli_distribution jump(0.15);
    std::vector<double> a(n * p.dim), b(n * p.dim), at(p.dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const bool away = jump(rng);
      for (std::size_t c = 0; c < p.dim; ++c) {
        at[c] += walk(rng);
        a[i * p.dim + c] = at[c];
        b[i * p.dim + c] = at[c] + (away ? detour(rng) : noise(rng));
      }
    }
    doc["dim"] = p.dim;
    doc["A"] = points_json(geom::PointSet(p.dim, a));
    doc["B"] = points_json(geom::PointSet(p.dim, b));
    echo["dim"] = p.dim;
  } else if (p.problem == "selection") {
    if (n < 2) throw InputError("selection needs n >= 2");
    const auto mode = geom::parse_expansion_mode(p.mode);
    problems::PlanarObjects objects;
    if (p.objects == "disks") {
      objects = problems::random_disjoint_disks(n, rng);
      doc["data"] = disks_json(std::get<std::vector<geom::Disk>>(objects));
    } else if (p.objects == "segments") {
      auto raw = problems::random_disjoint_segments(n, rng);
      doc["data"] = segments_json(raw);
      objects = std::move(raw);
    } else {
      throw InputError("objects must be 'disks' or 'segments'");
    }
    std::uint64_t finite = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) finite += std::isfinite(problems::pair_critical(objects, mode, i, j));
    }
    std::uniform_int_distribution<std::uint64_t> rank(1, std::max<std::uint64_t>(1, finite));
    doc["objects"] = p.objects;
    doc["mode"] = geom::to_string(mode);
    doc["k"] = std::clamp<std::uint64_t>(p.k.value_or(rank(rng)), 1, std::max<std::uint64_t>(1, finite));
    echo["objects"] = p.objects;
    echo["mode"] = geom::to_string(mode);
  } else if (p.problem == "matching") {
    if (n < 2 || n % 2 != 0) throw InputError("matching needs an even n >= 2");
    const auto mode = geom::parse_expansion_mode(p.mode);
    doc["mode"] = geom::to_string(mode);
    doc["disks"] = disks_json(problems::random_disjoint_disks(n, rng));
    echo["mode"] = geom::to_string(mode);
  } else if (p.problem == "towers") {
    if (n < 2) throw InputError("towers needs n >= 2");
    const auto sample = problems::random_towers(n, rng);
    json terrain = json::array();
    for (const auto& v : sample.terrain.vertices()) terrain.push_back({v.x, v.y});
    doc["terrain"] = std::move(terrain);
    doc["q"] = sample.bases;
  } else {
    throw InputError("unknown problem '" + p.problem + "'");
  }
  doc["generator"] = std::move(echo);
  return doc;
}

}  // namespace bifurcate::io
