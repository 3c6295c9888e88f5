#include "islands/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "islands/errors.hpp"

namespace islands::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T get_field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw PreconditionError(std::string(where) + ": missing field \"" + key + "\"");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw PreconditionError(std::string(where) + ": field \"" + key + "\" has the wrong type");
  }
}

json cut_json(const OrientedCut& cut) {
  json normal = json::array();
  for (const auto& v : cut.normal) normal.push_back(to_string(v));
  json assignment = json::object();
  for (const auto& [id, side] : cut.side_assignment) {
    assignment[std::to_string(id)] = side == Side::kAbove ? "above" : "below";
  }
  return json{{"spanning_ids", cut.spanning_ids},
              {"normal", std::move(normal)},
              {"offset", to_string(cut.offset)},
              {"side_assignment", std::move(assignment)}};
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  const int dim = get_field<int>(doc, "dim", "instance");
  const int colors = get_field<int>(doc, "colors", "instance");
  if (dim < 1) throw PreconditionError("instance: dim must be positive");
  if (colors < 1) throw PreconditionError("instance: colors must be positive");
  if (!doc.contains("points") || !doc["points"].is_array()) throw PreconditionError("instance: missing points array");

  std::vector<Coords> points;
  std::vector<int> point_colors;
  std::size_t index = 0;
  for (const auto& p : doc["points"]) {
    const std::string where = "point " + std::to_string(index++);
    if (!p.is_object() || !p.contains("x") || !p["x"].is_array()) {
      throw PreconditionError(where + ": missing coordinate array x");
    }
    Coords x;
    for (const auto& v : p["x"]) {
      if (!v.is_string()) {
        throw PreconditionError(where + ": coordinates must be exact rational strings, not JSON numbers");
      }
      x.push_back(parse_rational(v.get<std::string>()));
    }
    if (!p.contains("color") || !p["color"].is_number_integer()) {
      throw PreconditionError(where + ": missing integer color");
    }
    points.push_back(std::move(x));
    point_colors.push_back(p["color"].get<int>());
  }

  InstanceMeta meta;
  if (doc.contains("meta")) {
    const json& m = doc["meta"];
    if (!m.is_object()) throw PreconditionError("instance: meta must be an object");
    if (m.contains("k")) meta.k = get_field<int>(m, "k", "meta");
    if (m.contains("n")) meta.n = get_field<int>(m, "n", "meta");
    if (m.contains("seed")) meta.seed = get_field<std::uint64_t>(m, "seed", "meta");
    if (m.contains("family")) meta.family = get_field<std::string>(m, "family", "meta");
  }
  return Instance{ColoredPointSet(dim, std::move(points), std::move(point_colors), colors), std::move(meta)};
}

std::string serialize_instance(const Instance& instance) {
  const ColoredPointSet& set = instance.set;
  json points = json::array();
  for (PointId id = 0; id < set.size(); ++id) {
    json x = json::array();
    for (const auto& v : set.point(id)) x.push_back(to_string(v));
    points.push_back(json{{"x", std::move(x)}, {"color", set.color(id)}});
  }
  json doc{{"dim", set.dim()},
           {"colors", set.num_colors()},
           {"points", std::move(points)},
           {"meta",
            {{"k", instance.meta.k},
             {"n", instance.meta.n},
             {"seed", instance.meta.seed},
             {"family", instance.meta.family}}}};
  return doc.dump(2) + "\n";
}

Solution parse_solution(const std::string& text) {
  const json doc = parse_json(text);
  Solution sol;
  if (!doc.is_object() || !doc.contains("parts") || !doc["parts"].is_array()) {
    throw PreconditionError("solution: missing parts array");
  }
  for (const auto& part : doc["parts"]) {
    if (!part.is_array()) throw PreconditionError("solution: every part must be an array of point ids");
    IdList ids;
    for (const auto& id : part) {
      if (!id.is_number_integer() || id.get<long long>() < 0) {
        throw PreconditionError("solution: point ids must be non-negative integers");
      }
      ids.push_back(id.get<PointId>());
    }
    sol.partition.parts.push_back(std::move(ids));
  }
  if (doc.contains("verified") && doc["verified"].is_boolean()) sol.verified = doc["verified"].get<bool>();
  if (doc.contains("mode") && doc["mode"].is_string()) sol.mode = doc["mode"].get<std::string>();
  return sol;
}

std::string serialize_solution(const Solution& sol) {
  json cuts = json::array();
  for (const auto& c : sol.cuts) cuts.push_back(cut_json(c));
  json doc{{"mode", sol.mode},
           {"parts", sol.partition.parts},
           {"cuts", std::move(cuts)},
           {"verified", sol.verified},
           {"report", sol.report},
           {"elapsed_ms", sol.elapsed_ms}};
  if (!sol.steps.empty()) doc["steps"] = sol.steps;
  if (!sol.compositions.empty()) doc["compositions"] = sol.compositions;
  if (sol.status) doc["status"] = *sol.status;
  return doc.dump(2) + "\n";
}

std::string cut_to_json(const OrientedCut& cut) { return cut_json(cut).dump(); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path.string());
  out << text;
  if (!out) throw PreconditionError("write failed for " + path.string());
}

}  // namespace islands::io
