#include "splinefan/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace splinefan {

namespace {

using nlohmann::json;

Rational entry_to_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad rational entry: ") + e.what());
    }
  }
  throw ParseError("ray entries must be integers or rational strings");
}

}  // namespace

FanDocument parse_fan_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("rays") ||
      !doc.contains("maximal_cones"))
    throw ParseError("fan document needs dim, rays, maximal_cones");
  if (!doc["dim"].is_number_integer()) throw ParseError("dim must be an integer");
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError("dim must be positive");

  std::vector<RatVec> rays;
  if (!doc["rays"].is_array()) throw ParseError("rays must be an array");
  for (const auto& r : doc["rays"]) {
    if (!r.is_array() || static_cast<int>(r.size()) != dim)
      throw ParseError("each ray must be an array of dim entries");
    RatVec ray;
    for (const auto& v : r) ray.push_back(entry_to_rational(v));
    rays.push_back(ray);
  }

  std::vector<std::vector<int>> cones;
  if (!doc["maximal_cones"].is_array()) throw ParseError("maximal_cones must be an array");
  for (const auto& c : doc["maximal_cones"]) {
    if (!c.is_array() || c.empty()) throw ParseError("each maximal cone must list ray indices");
    std::vector<int> cone;
    for (const auto& v : c) {
      if (!v.is_number_integer()) throw ParseError("ray indices must be integers");
      const long idx = v.get<long>();
      if (idx < 0 || idx >= static_cast<long>(rays.size()))
        throw ParseError("ray index out of range");
      cone.push_back(static_cast<int>(idx));
    }
    cones.push_back(cone);
  }

  FanDocument out{doc.value("name", std::string()), [&] {
                    try {
                      return Fan(dim, rays, cones);
                    } catch (const std::exception& e) {
                      throw ParseError(std::string("bad fan data: ") + e.what());
                    }
                  }()};
  if (auto err = validate(out.fan)) throw ValidationError(*err);
  return out;
}

FanDocument load_fan_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fan_document(buf.str());
}

std::string fan_document_json(const Fan& fan, const std::string& name) {
  json doc;
  if (!name.empty()) doc["name"] = name;
  doc["dim"] = fan.dim();
  json rays = json::array();
  for (const auto& ray : fan.rays()) {
    json r = json::array();
    for (const auto& x : ray) r.push_back(x.str());
    rays.push_back(r);
  }
  doc["rays"] = rays;
  doc["maximal_cones"] = fan.maximal_cones();
  return doc.dump(2) + "\n";
}

void save_fan_document(const Fan& fan, const std::string& name, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << fan_document_json(fan, name);
}

}  // namespace splinefan
