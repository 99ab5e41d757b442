#pragma once

#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "wgmorley/local_cell.hpp"
#include "wgmorley/mesh.hpp"
#include "wgmorley/problems.hpp"
#include "wgmorley/projections.hpp"

namespace wgm {

/// Global numbering of the weak-function coefficients:
/// [6 per cell interior | one per vertex (u_b) | one per edge (u_n)].
/// The skeleton numbering used by the condensed system drops the interior
/// block: vertex v -> v, edge e -> NV + e.
class DofMap {
public:
  explicit DofMap(const PolyMesh& mesh);

  int num_cells() const noexcept { return num_cells_; }
  int num_vertices() const noexcept { return num_vertices_; }
  int num_edges() const noexcept { return num_edges_; }

  int num_interior() const noexcept { return 6 * num_cells_; }
  int num_skeleton() const noexcept { return num_vertices_ + num_edges_; }
  int num_total() const noexcept { return num_interior() + num_skeleton(); }

  int interior_offset(int cell) const noexcept { return 6 * cell; }
  int vertex_dof(int v) const noexcept { return num_interior() + v; }
  int edge_dof(int e) const noexcept { return num_interior() + num_vertices_ + e; }

  int skeleton_vertex(int v) const noexcept { return v; }
  int skeleton_edge(int e) const noexcept { return num_vertices_ + e; }

  bool vertex_on_boundary(int v) const { return boundary_vertex_[v] != 0; }
  bool edge_on_boundary(int e) const { return boundary_edge_[e] != 0; }

  /// Interior vertices plus interior edges: the size of the condensed system.
  int num_free_skeleton() const noexcept { return free_skeleton_; }

private:
  int num_cells_ = 0;
  int num_vertices_ = 0;
  int num_edges_ = 0;
  int free_skeleton_ = 0;
  std::vector<char> boundary_vertex_;
  std::vector<char> boundary_edge_;
};

/// Linear maps from a cell's local weak-function vector to the quantities the
/// bilinear form pairs:
///   hessian_map    4 x n : vec(H), H = weak Hessian (row-major i,j)
///   vertex_mismatch 2k x n : v_0(p) - v_b(p) for each endpoint p of each edge
///   normal_mismatch k x n  : mean_F(grad v_0 . sign n_F) - sign u_n
/// so that a_T(v,v) = |T| |B v|^2 + h^-2 |R1 v|^2 + h^-1 sum_F |F| (R2 v)_F^2.
struct LocalOperators {
  Eigen::MatrixXd hessian_map;
  Eigen::MatrixXd vertex_mismatch;
  Eigen::MatrixXd normal_mismatch;
  Eigen::VectorXd edge_lengths;
  double area = 0.0;
  double diameter = 0.0;
};

LocalOperators local_operators(const PolyMesh& mesh, const LocalCell& cell);

/// Hessian and stabilizer parts of a_T(v, v) for one local vector.
struct LocalEnergy {
  double hessian = 0.0;
  double stabilizer = 0.0;
};

LocalEnergy local_energy(const LocalOperators& ops, const Eigen::VectorXd& local);

/// Element matrices of a_T split into interior (0) and skeleton (b) blocks.
struct LocalSystem {
  int cell = 0;
  Eigen::Matrix<double, 6, 6> a00;
  Eigen::MatrixXd a0b; ///< 6 x m
  Eigen::MatrixXd abb; ///< m x m
  P2Coefficients f0;
  std::vector<int> skeleton_dofs; ///< skeleton index of each of the m local skeleton slots

  Eigen::MatrixXd hessian_part;    ///< (6+m)^2, Hessian term only
  Eigen::MatrixXd stabilizer_part; ///< (6+m)^2, stabilizer only

  Eigen::MatrixXd full() const;
};

LocalSystem local_system(const PolyMesh& mesh, const LocalCell& cell, const ScalarField& f);

/// Element-level Schur complement.
struct CondensedBlock {
  Eigen::MatrixXd schur; ///< S = A_bb - A_0b^T A_00^{-1} A_0b
  Eigen::VectorXd load;  ///< G = -A_0b^T A_00^{-1} F_0, so that S u_bn = G locally
};

/// Throws GeometryError naming the cell when A_00 is not positive definite.
CondensedBlock condense(const LocalSystem& local);

/// u_0 = A_00^{-1} (F_0 - A_0b u_bn).
P2Coefficients recover_interior(const LocalSystem& local, const Eigen::VectorXd& u_bn_local);

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Symmetric system with essential conditions eliminated: fixed rows and
/// columns are replaced by identity, their values moved to the right-hand side.
struct AssembledSystem {
  SparseMatrix matrix;
  Eigen::VectorXd rhs;
  std::vector<int> free_dofs;
  std::vector<char> fixed;
  Eigen::VectorXd boundary_values; ///< prescribed values on fixed DOFs, 0 elsewhere
};

/// Prescribed skeleton values: u on boundary vertices, the edge mean of
/// grad u . n_F on boundary edges (n_F is outward there).
Eigen::VectorXd boundary_skeleton_values(const PolyMesh& mesh, const DofMap& dofs,
                                         const ManufacturedProblem& problem);

/// Full system over every DOF (interior + skeleton).
AssembledSystem assemble_full(const PolyMesh& mesh, const ManufacturedProblem& problem);
WGField field_from_full(const DofMap& dofs, const Eigen::VectorXd& x);

/// Statically condensed system over the skeleton DOFs together with the
/// element data needed to recover the interior coefficients.
struct CondensedSystem {
  AssembledSystem system;
  std::vector<LocalSystem> locals;
};

CondensedSystem assemble_condensed(const PolyMesh& mesh, const ManufacturedProblem& problem);

/// Rebuilds the full weak function from a skeleton solution.
WGField recover_field(const PolyMesh& mesh, const CondensedSystem& condensed,
                      const Eigen::VectorXd& skeleton);

} // namespace wgm
