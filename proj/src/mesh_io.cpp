#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wgmorley/errors.hpp"
#include "wgmorley/mesh.hpp"

namespace wgm {

namespace {

using nlohmann::json;

double finite_number(const json& value, const char* what) {
  if (!value.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
  return x;
}

} // namespace

PolyMesh parse_mesh(std::string_view text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("mesh JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("mesh JSON: top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() != 2)
    throw ParseError("mesh JSON: \"dim\" must be 2");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("mesh JSON: \"vertices\" must be an array");
  if (!doc.contains("cells") || !doc["cells"].is_array())
    throw ParseError("mesh JSON: \"cells\" must be an array");

  std::vector<Vec2> vertices;
  vertices.reserve(doc["vertices"].size());
  for (const auto& p : doc["vertices"]) {
    if (!p.is_array() || p.size() != 2) throw ParseError("mesh JSON: vertex must be [x, y]");
    vertices.emplace_back(finite_number(p[0], "vertex coordinate"),
                          finite_number(p[1], "vertex coordinate"));
  }

  const auto nv = static_cast<long long>(vertices.size());
  std::vector<std::vector<int>> cells;
  cells.reserve(doc["cells"].size());
  for (std::size_t c = 0; c < doc["cells"].size(); ++c) {
    const auto& loop = doc["cells"][c];
    const std::string where = "mesh JSON: cell " + std::to_string(c);
    if (!loop.is_array()) throw ParseError(where + " must be an index array");
    std::vector<int> ids;
    for (const auto& v : loop) {
      if (!v.is_number_integer()) throw ParseError(where + " has a non-integer index");
      const long long i = v.get<long long>();
      if (i < 0 || i >= nv) throw ParseError(where + " references vertex out of range");
      ids.push_back(static_cast<int>(i));
    }
    // A repeated closing vertex is tolerated; anything else that does not
    // form a loop of at least three distinct corners is rejected.
    if (ids.size() > 1 && ids.front() == ids.back()) ids.pop_back();
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == ids[(i + 1) % ids.size()]) throw ParseError(where + " repeats a vertex");
    if (ids.size() < 3) throw ParseError(where + " is not a closed loop of >= 3 vertices");

    std::vector<Vec2> pts;
    for (int v : ids) pts.push_back(vertices[v]);
    if (signed_area(pts) < 0.0) {
      std::reverse(ids.begin(), ids.end());
      if (warnings)
        warnings->push_back("cell " + std::to_string(c) +
                            " was clockwise; reversed to counter-clockwise");
    }
    cells.push_back(std::move(ids));
  }
  return PolyMesh(std::move(vertices), std::move(cells));
}

std::string format_mesh(const PolyMesh& mesh) {
  json doc;
  doc["dim"] = 2;
  json vertices = json::array();
  for (const Vec2& p : mesh.vertices()) vertices.push_back({p.x(), p.y()});
  doc["vertices"] = std::move(vertices);
  doc["cells"] = mesh.cells();
  return doc.dump() + "\n";
}

PolyMesh import_mesh(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mesh file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mesh(buf.str(), warnings);
}

void export_mesh(const PolyMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write mesh file " + path);
  out << format_mesh(mesh);
}

} // namespace wgm
