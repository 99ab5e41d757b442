#include "wgmorley/weak_ops.hpp"

#include <cassert>

namespace wgm {

Vec2 tangential_weak_gradient(const Edge& edge, double vb_tail, double vb_head) {
  assert(edge.length > 0.0);
  return ((vb_head - vb_tail) / edge.length) * edge.tangent;
}

EdgeWeakGradient edge_weak_gradient(const Edge& edge, double un_global, double vb_tail,
                                    double vb_head, int sign) {
  assert(sign == 1 || sign == -1);
  EdgeWeakGradient g;
  g.normal_part = (sign * un_global) * (sign * edge.normal);
  g.tangential_part = tangential_weak_gradient(edge, vb_tail, vb_head);
  return g;
}

std::vector<EdgeWeakGradient> edge_weak_gradients(const PolyMesh& mesh, const LocalCell& cell,
                                                  const Eigen::VectorXd& local) {
  const int k = cell.num_vertices();
  std::vector<EdgeWeakGradient> grads;
  grads.reserve(k);
  for (int i = 0; i < k; ++i) {
    const LocalEdge& le = cell.edges[i];
    const double v_start = local(cell.vertex_slot(i));
    const double v_end = local(cell.vertex_slot((i + 1) % k));
    const bool forward = le.sign > 0;
    grads.push_back(edge_weak_gradient(mesh.edge(le.edge), local(cell.edge_slot(i)),
                                       forward ? v_start : v_end, forward ? v_end : v_start,
                                       le.sign));
  }
  return grads;
}

Mat2 weak_hessian(const LocalCell& cell, std::span<const EdgeWeakGradient> grads) {
  Mat2 h = Mat2::Zero();
  for (std::size_t i = 0; i < grads.size(); ++i) {
    const LocalEdge& le = cell.edges[i];
    h += le.length * grads[i].value() * le.outward_normal.transpose();
  }
  return h / cell.geometry.area;
}

Mat2 hessian_identity_residual(const LocalCell& cell, const P2Coefficients& interior,
                               std::span<const EdgeWeakGradient> grads) {
  const double area = cell.geometry.area;
  Mat2 rhs = cell.basis.hessian(interior);
  for (std::size_t i = 0; i < grads.size(); ++i) {
    const LocalEdge& le = cell.edges[i];
    const Vec2 vg = grads[i].value();
    Vec2 jump = Vec2::Zero();
    for (std::size_t q = 0; q < le.quadrature.points.size(); ++q)
      jump += le.quadrature.weights[q] * (cell.basis.gradient(interior, le.quadrature.points[q]) - vg);
    rhs -= jump * le.outward_normal.transpose() / area;
  }
  return weak_hessian(cell, grads) - rhs;
}

} // namespace wgm
