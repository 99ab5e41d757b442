#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace wgm {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Marker for the missing neighbour of a boundary edge.
inline constexpr int kBoundary = -1;

inline constexpr double kMinCellArea = 1e-14;
inline constexpr double kMinEdgeLength = 1e-13;
inline constexpr double kDuplicateVertexTol = 1e-12;

/// A mesh edge with its global orientation.
///
/// Interior edges run from the smaller to the larger vertex index; boundary
/// edges follow the counter-clockwise loop of their only cell, so `normal`
/// points out of the domain there. `left` is the cell that traverses the edge
/// tail->head, for which `normal` is the outward normal.
struct Edge {
  int tail = 0;
  int head = 0;
  int left = kBoundary;
  int right = kBoundary;
  double length = 0.0;
  Vec2 tangent = Vec2::Zero(); ///< unit, tail -> head
  Vec2 normal = Vec2::Zero();  ///< tangent rotated clockwise: (t_y, -t_x)

  bool on_boundary() const noexcept { return right == kBoundary; }
};

struct CellGeometry {
  double area = 0.0;
  Vec2 centroid = Vec2::Zero();
  double diameter = 0.0;
};

/// Local edge k of a cell joins loop vertex k to loop vertex k+1.
/// `sign` is n_F . n_outward(T, F).
struct CellEdge {
  int edge = 0;
  int sign = 1;
};

/// Shoelace area, polygon centroid and max pairwise vertex distance of a
/// counter-clockwise vertex loop. Throws GeometryError when |area| < 1e-14.
CellGeometry cell_geometry(std::span<const Vec2> loop);

/// Signed shoelace area (positive for counter-clockwise loops).
double signed_area(std::span<const Vec2> loop);

/// True when two non-adjacent sides of the loop touch or cross.
bool is_self_intersecting(std::span<const Vec2> loop);

/// Immutable polygonal mesh with derived edge topology and cell geometry.
class PolyMesh {
public:
  /// Validates the cell loops and derives edges, orientation signs and
  /// per-cell geometry. Throws ValidationError or GeometryError.
  PolyMesh(std::vector<Vec2> vertices, std::vector<std::vector<int>> cells);

  int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  int num_cells() const noexcept { return static_cast<int>(cells_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Vec2>& vertices() const noexcept { return vertices_; }
  const Vec2& vertex(int v) const { return vertices_[v]; }
  const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }
  std::span<const int> cell(int c) const { return cells_[c]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  std::span<const CellEdge> cell_edges(int c) const { return cell_edges_[c]; }
  const CellGeometry& geometry(int c) const { return geometry_[c]; }
  bool vertex_on_boundary(int v) const { return vertex_on_boundary_[v] != 0; }

  std::vector<Vec2> cell_points(int c) const;

  /// h = max_T h_T.
  double meshsize() const noexcept { return meshsize_; }
  double total_area() const noexcept;
  int euler_characteristic() const noexcept {
    return num_vertices() - num_edges() + num_cells();
  }

  bool operator==(const PolyMesh& other) const;

private:
  std::vector<Vec2> vertices_;
  std::vector<std::vector<int>> cells_;
  std::vector<Edge> edges_;
  std::vector<std::vector<CellEdge>> cell_edges_;
  std::vector<CellGeometry> geometry_;
  std::vector<char> vertex_on_boundary_;
  double meshsize_ = 0.0;
};

// Generators on the unit square (0,1)^2.

/// n x n squares, each cut along its lower-left to upper-right diagonal.
PolyMesh gen_uniform_triangular(int n);
/// n x n axis-aligned squares.
PolyMesh gen_uniform_rectangular(int n);
/// Uniform grid with interior vertices displaced by up to jitter/n per axis.
PolyMesh gen_randomized_quadrilateral(int n, std::uint64_t seed, double jitter);
/// Honeycomb of n rows clipped to the unit square.
PolyMesh gen_hexagonal(int n);

enum class MeshKind { Triangular, Rectangular, RandomQuad, Hexagonal };

MeshKind parse_mesh_kind(std::string_view name);
std::string_view mesh_kind_name(MeshKind kind);

inline constexpr double kDefaultJitter = 0.25;

PolyMesh generate_mesh(MeshKind kind, int n, std::uint64_t seed = 1,
                       double jitter = kDefaultJitter);

// JSON mesh format: {"dim": 2, "vertices": [[x,y],...], "cells": [[i0,i1,...],...]}

/// Parses and validates a mesh document. Clockwise cells are reversed and a
/// message is appended to `warnings` when given.
PolyMesh parse_mesh(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string format_mesh(const PolyMesh& mesh);

PolyMesh import_mesh(const std::string& path, std::vector<std::string>* warnings = nullptr);
void export_mesh(const PolyMesh& mesh, const std::string& path);

} // namespace wgm
