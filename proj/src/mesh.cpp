#include "wgmorley/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "wgmorley/errors.hpp"

namespace wgm {

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double orient(const Vec2& a, const Vec2& b, const Vec2& c) { return cross(b - a, c - a); }

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

bool segments_touch(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  const double d1 = orient(q1, q2, p1);
  const double d2 = orient(q1, q2, p2);
  const double d3 = orient(p1, p2, q1);
  const double d4 = orient(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  return (d1 == 0 && on_segment(q1, q2, p1)) || (d2 == 0 && on_segment(q1, q2, p2)) ||
         (d3 == 0 && on_segment(p1, p2, q1)) || (d4 == 0 && on_segment(p1, p2, q2));
}

void check_duplicate_vertices(const std::vector<Vec2>& vertices) {
  std::vector<int> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vertices[a].x() < vertices[b].x(); });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Vec2& a = vertices[order[i]];
      const Vec2& b = vertices[order[j]];
      if (b.x() - a.x() > kDuplicateVertexTol) break;
      if ((a - b).norm() <= kDuplicateVertexTol) {
        throw ValidationError("duplicate vertices " + std::to_string(order[i]) + " and " +
                              std::to_string(order[j]));
      }
    }
  }
}

} // namespace

double signed_area(std::span<const Vec2> loop) {
  double twice = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i)
    twice += cross(loop[i], loop[(i + 1) % loop.size()]);
  return 0.5 * twice;
}

CellGeometry cell_geometry(std::span<const Vec2> loop) {
  if (loop.size() < 3) throw GeometryError("cell has fewer than 3 vertices");
  // Shift to the first vertex so the centroid formula stays well conditioned.
  const Vec2 origin = loop[0];
  double twice_area = 0.0;
  Vec2 moment = Vec2::Zero();
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vec2 a = loop[i] - origin;
    const Vec2 b = loop[(i + 1) % loop.size()] - origin;
    const double w = cross(a, b);
    twice_area += w;
    moment += w * (a + b);
  }
  const double area = 0.5 * twice_area;
  if (std::abs(area) < kMinCellArea) throw GeometryError("degenerate cell: area below 1e-14");

  CellGeometry g;
  g.area = area;
  g.centroid = origin + moment / (3.0 * twice_area);
  for (std::size_t i = 0; i < loop.size(); ++i)
    for (std::size_t j = i + 1; j < loop.size(); ++j)
      g.diameter = std::max(g.diameter, (loop[i] - loop[j]).norm());
  return g;
}

bool is_self_intersecting(std::span<const Vec2> loop) {
  const std::size_t k = loop.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (adjacent) continue;
      if (segments_touch(loop[i], loop[(i + 1) % k], loop[j], loop[(j + 1) % k])) return true;
    }
  }
  return false;
}

PolyMesh::PolyMesh(std::vector<Vec2> vertices, std::vector<std::vector<int>> cells)
    : vertices_(std::move(vertices)), cells_(std::move(cells)) {
  const int nv = num_vertices();
  for (const Vec2& p : vertices_)
    if (!std::isfinite(p.x()) || !std::isfinite(p.y()))
      throw ValidationError("non-finite vertex coordinate");
  check_duplicate_vertices(vertices_);

  geometry_.reserve(cells_.size());
  for (int c = 0; c < num_cells(); ++c) {
    const auto& loop = cells_[c];
    if (loop.size() < 3)
      throw ValidationError("cell " + std::to_string(c) + " has fewer than 3 vertices");
    for (int v : loop)
      if (v < 0 || v >= nv)
        throw ValidationError("cell " + std::to_string(c) + " references vertex out of range");
    const auto pts = cell_points(c);
    if (is_self_intersecting(pts))
      throw ValidationError("cell " + std::to_string(c) + " is self-intersecting");
    for (std::size_t i = 0; i < pts.size(); ++i)
      if ((pts[(i + 1) % pts.size()] - pts[i]).norm() < kMinEdgeLength)
        throw GeometryError("cell " + std::to_string(c) + " has an edge shorter than 1e-13");
    CellGeometry g;
    try {
      g = cell_geometry(pts);
    } catch (const GeometryError& e) {
      throw GeometryError("cell " + std::to_string(c) + ": " + e.what());
    }
    if (g.area <= 0) throw ValidationError("cell " + std::to_string(c) + " is clockwise");
    meshsize_ = std::max(meshsize_, g.diameter);
    geometry_.push_back(g);
  }

  // Collect undirected edges in first-seen order, remembering which cells
  // traverse them in which direction.
  struct Incidence {
    int forward = kBoundary;  // cell traversing min -> max
    int backward = kBoundary; // cell traversing max -> min
  };
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> keys;
  std::vector<Incidence> incidence;
  for (int c = 0; c < num_cells(); ++c) {
    const auto& loop = cells_[c];
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const int a = loop[i];
      const int b = loop[(i + 1) % loop.size()];
      const auto key = std::minmax(a, b);
      auto [it, inserted] = index.emplace(key, static_cast<int>(keys.size()));
      if (inserted) {
        keys.push_back(key);
        incidence.emplace_back();
      }
      Incidence& inc = incidence[it->second];
      int& slot = (a < b) ? inc.forward : inc.backward;
      if (slot != kBoundary) {
        throw ValidationError("edge (" + std::to_string(key.first) + "," +
                              std::to_string(key.second) +
                              ") traversed twice in the same direction (non-manifold or "
                              "inconsistent orientation)");
      }
      slot = c;
    }
  }

  edges_.resize(keys.size());
  vertex_on_boundary_.assign(nv, 0);
  for (std::size_t e = 0; e < keys.size(); ++e) {
    Edge& edge = edges_[e];
    const auto [lo, hi] = keys[e];
    const Incidence& inc = incidence[e];
    if (inc.forward != kBoundary && inc.backward != kBoundary) {
      edge.tail = lo;
      edge.head = hi;
      edge.left = inc.forward;
      edge.right = inc.backward;
    } else if (inc.forward != kBoundary) {
      edge.tail = lo;
      edge.head = hi;
      edge.left = inc.forward;
    } else {
      edge.tail = hi;
      edge.head = lo;
      edge.left = inc.backward;
    }
    const Vec2 d = vertices_[edge.head] - vertices_[edge.tail];
    edge.length = d.norm();
    edge.tangent = d / edge.length;
    edge.normal = Vec2(edge.tangent.y(), -edge.tangent.x());
    if (edge.on_boundary()) {
      vertex_on_boundary_[edge.tail] = 1;
      vertex_on_boundary_[edge.head] = 1;
    }
  }

  cell_edges_.resize(cells_.size());
  for (int c = 0; c < num_cells(); ++c) {
    const auto& loop = cells_[c];
    auto& local = cell_edges_[c];
    local.reserve(loop.size());
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const int a = loop[i];
      const int b = loop[(i + 1) % loop.size()];
      const int e = index.at(std::minmax(a, b));
      local.push_back({e, edges_[e].tail == a ? 1 : -1});
    }
  }
}

std::vector<Vec2> PolyMesh::cell_points(int c) const {
  std::vector<Vec2> pts;
  pts.reserve(cells_[c].size());
  for (int v : cells_[c]) pts.push_back(vertices_[v]);
  return pts;
}

double PolyMesh::total_area() const noexcept {
  double sum = 0.0;
  for (const auto& g : geometry_) sum += g.area;
  return sum;
}

bool PolyMesh::operator==(const PolyMesh& other) const {
  return vertices_ == other.vertices_ && cells_ == other.cells_;
}

} // namespace wgm
