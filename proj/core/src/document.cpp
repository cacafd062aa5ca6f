#include "elastic/document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace elastic {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path, message);
}

const json& field(const json& obj, const char* name, const std::string& path) {
  const auto it = obj.find(name);
  if (it == obj.end()) fail(path, std::string("missing field \"") + name + "\"");
  return *it;
}

Point parse_point(const json& j, int dim, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of coordinates");
  if (static_cast<int>(j.size()) != dim) {
    throw ParseError(path, "dimension mismatch: expected " + std::to_string(dim) +
                               " coordinates, got " + std::to_string(j.size()));
  }
  Point p(dim);
  for (int i = 0; i < dim; ++i) {
    const json& c = j[static_cast<std::size_t>(i)];
    if (!c.is_number()) fail(path + "[" + std::to_string(i) + "]", "expected a number");
    p[i] = c.get<double>();
    if (!std::isfinite(p[i])) fail(path + "[" + std::to_string(i) + "]", "coordinate is not finite");
  }
  return p;
}

std::vector<Point> parse_points(const json& j, int dim, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of vertices");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_point(j[i], dim, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

GeometryDocument parse_one(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a geometry document object");
  GeometryDocument doc;
  const json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  const json& dim = field(j, "dimension", path);
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    fail(path + ".dimension", "expected a positive integer");
  }
  doc.dimension = dim.get<int>();
  if (const auto it = j.find("id"); it != j.end()) {
    if (!it->is_string()) fail(path + ".id", "expected a string");
    doc.id = it->get<std::string>();
  }
  const json& payload = field(j, "payload", path);
  const std::string ppath = path + ".payload";

  const std::string k = kind.get<std::string>();
  if (k == "curve") {
    auto vertices = parse_points(payload, doc.dimension, ppath);
    if (vertices.empty()) fail(ppath, "a curve needs at least one vertex");
    doc.shape = PolygonalCurve(std::move(vertices));
  } else if (k == "region") {
    if (doc.dimension != 2) fail(path + ".dimension", "regions are planar; dimension must be 2");
    if (!payload.is_object()) fail(ppath, "expected {\"outer\": ..., \"holes\": [...]}");
    Ring outer(parse_points(field(payload, "outer", ppath), 2, ppath + ".outer"));
    std::vector<Ring> holes;
    if (const auto it = payload.find("holes"); it != payload.end()) {
      if (!it->is_array()) fail(ppath + ".holes", "expected an array of rings");
      for (std::size_t h = 0; h < it->size(); ++h) {
        holes.emplace_back(
            parse_points((*it)[h], 2, ppath + ".holes[" + std::to_string(h) + "]"));
      }
    }
    PolygonalRegion region(std::move(outer), std::move(holes));
    const ValidationReport report = validate_region(region);
    if (!report.ok()) fail(ppath, "invalid region: " + report.violations.front().describe());
    doc.shape = std::move(region);
  } else {
    fail(path + ".kind", "unknown kind \"" + k + "\" (expected curve or region)");
  }
  return doc;
}

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) {
    json coords = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) coords.push_back(p[i]);
    arr.push_back(std::move(coords));
  }
  return arr;
}

json to_json(const GeometryDocument& doc) {
  json j;
  j["id"] = doc.id;
  j["dimension"] = doc.dimension;
  if (const auto* c = std::get_if<PolygonalCurve>(&doc.shape)) {
    j["kind"] = "curve";
    j["payload"] = points_json(c->vertices());
  } else {
    const auto& r = std::get<PolygonalRegion>(doc.shape);
    j["kind"] = "region";
    json holes = json::array();
    for (const auto& h : r.holes()) holes.push_back(points_json(h.vertices()));
    j["payload"] = {{"outer", points_json(r.outer().vertices())}, {"holes", std::move(holes)}};
  }
  return j;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column),
                     "malformed JSON");
  }
}

}  // namespace

ParseError::ParseError(const std::string& location, const std::string& message)
    : InputError(location + ": " + message), location_(location) {}

std::vector<GeometryDocument> parse_documents(const std::string& text) {
  const json j = parse_json(text);
  std::vector<GeometryDocument> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_one(j[i], "$[" + std::to_string(i) + "]"));
    if (out.empty()) fail("$", "empty document array");
  } else {
    out.push_back(parse_one(j, "$"));
  }
  return out;
}

GeometryDocument parse_document(const std::string& text) {
  const json j = parse_json(text);
  if (j.is_array()) fail("$", "expected a single document, got an array");
  return parse_one(j, "$");
}

std::string serialize(const GeometryDocument& doc, int indent) { return to_json(doc).dump(indent); }

std::string serialize(const std::vector<GeometryDocument>& docs, int indent) {
  json arr = json::array();
  for (const auto& d : docs) arr.push_back(to_json(d));
  return arr.dump(indent);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace elastic
