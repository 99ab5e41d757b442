#pragma once

#include <vector>

#include "wgmorley/basis.hpp"
#include "wgmorley/mesh.hpp"
#include "wgmorley/quadrature.hpp"

namespace wgm {

/// Local edge k of a cell, traversed counter-clockwise from loop vertex k to
/// loop vertex k+1 (`start` -> `end`).
struct LocalEdge {
  int edge = 0;              ///< global edge id
  int sign = 1;              ///< n_F . n_outward
  Vec2 start = Vec2::Zero();
  Vec2 end = Vec2::Zero();
  double length = 0.0;
  Vec2 outward_normal = Vec2::Zero();
  QuadraturePoints quadrature;
};

/// Everything the element routines need about one cell: geometry, local
/// edges with orientation signs, the P2 basis and quadrature.
///
/// Local weak-function vectors use the layout
/// [6 interior coefficients | k vertex values | k edge normal values]
/// where edge values are taken w.r.t. the global normal n_F.
struct LocalCell {
  int id = 0;
  std::vector<Vec2> points;
  CellGeometry geometry;
  std::vector<LocalEdge> edges;
  P2Basis basis;
  QuadraturePoints quadrature;

  int num_vertices() const noexcept { return static_cast<int>(points.size()); }
  int num_boundary_dofs() const noexcept { return 2 * num_vertices(); }
  int num_local_dofs() const noexcept { return P2Basis::kSize + num_boundary_dofs(); }
  int vertex_slot(int k) const noexcept { return P2Basis::kSize + k; }
  int edge_slot(int k) const noexcept { return P2Basis::kSize + num_vertices() + k; }
};

LocalCell make_local_cell(const PolyMesh& mesh, int cell, int cell_degree = kDefaultCellDegree,
                          int edge_degree = kDefaultEdgeDegree);

} // namespace wgm
