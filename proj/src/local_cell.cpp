#include "wgmorley/local_cell.hpp"

namespace wgm {

LocalCell make_local_cell(const PolyMesh& mesh, int cell, int cell_degree, int edge_degree) {
  LocalCell lc;
  lc.id = cell;
  lc.points = mesh.cell_points(cell);
  lc.geometry = mesh.geometry(cell);
  lc.basis = P2Basis(lc.geometry.centroid, lc.geometry.diameter);
  lc.quadrature = cell_quadrature(lc.points, cell_degree);

  const auto incident = mesh.cell_edges(cell);
  const int k = lc.num_vertices();
  lc.edges.reserve(k);
  for (int i = 0; i < k; ++i) {
    const Edge& e = mesh.edge(incident[i].edge);
    LocalEdge le;
    le.edge = incident[i].edge;
    le.sign = incident[i].sign;
    le.start = lc.points[i];
    le.end = lc.points[(i + 1) % k];
    le.length = e.length;
    le.outward_normal = static_cast<double>(le.sign) * e.normal;
    le.quadrature = edge_quadrature(le.start, le.end, edge_degree);
    lc.edges.push_back(std::move(le));
  }
  return lc;
}

} // namespace wgm
