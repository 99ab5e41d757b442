#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "wgmorley/basis.hpp"
#include "wgmorley/local_cell.hpp"
#include "wgmorley/mesh.hpp"

namespace wgm {

/// Constant weak gradient on one edge, split into its normal and tangential
/// parts: v_g = v_n n_F + grad_{w,F} v.
struct EdgeWeakGradient {
  Vec2 normal_part = Vec2::Zero();
  Vec2 tangential_part = Vec2::Zero();

  Vec2 value() const { return normal_part + tangential_part; }
};

/// Weak tangential derivative on a straight edge from its two endpoint
/// values (global orientation): ((v_head - v_tail) / |F|) t_F.
Vec2 tangential_weak_gradient(const Edge& edge, double vb_tail, double vb_head);

/// Weak gradient seen from a cell with orientation sign `sign`. The normal
/// part is (sign u_n)(sign n_F) = u_n n_F, so both neighbours of an interior
/// edge obtain the same vector.
EdgeWeakGradient edge_weak_gradient(const Edge& edge, double un_global, double vb_tail,
                                    double vb_head, int sign);

/// Weak gradients on every local edge of a cell for a local weak-function
/// vector laid out as in LocalCell.
std::vector<EdgeWeakGradient> edge_weak_gradients(const PolyMesh& mesh, const LocalCell& cell,
                                                  const Eigen::VectorXd& local);

/// Cell-constant weak Hessian:
/// H_ij = (1/|T|) sum_F |F| v_{g,i}(F) (sign n_F)_j.
Mat2 weak_hessian(const LocalCell& cell, std::span<const EdgeWeakGradient> grads);

/// H - [ (1/|T|) int_T d_ij v0 - (1/|T|) sum_F int_F (d_i v0 - v_{g,i}) n_j ],
/// which vanishes identically by integration by parts.
Mat2 hessian_identity_residual(const LocalCell& cell, const P2Coefficients& interior,
                               std::span<const EdgeWeakGradient> grads);

} // namespace wgm
