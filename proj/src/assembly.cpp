#include "wgmorley/assembly.hpp"

#include <string>

#include <Eigen/Cholesky>

#include "wgmorley/errors.hpp"
#include "wgmorley/weak_ops.hpp"

namespace wgm {

DofMap::DofMap(const PolyMesh& mesh)
    : num_cells_(mesh.num_cells()),
      num_vertices_(mesh.num_vertices()),
      num_edges_(mesh.num_edges()),
      boundary_vertex_(mesh.num_vertices(), 0),
      boundary_edge_(mesh.num_edges(), 0) {
  for (int v = 0; v < num_vertices_; ++v) {
    boundary_vertex_[v] = mesh.vertex_on_boundary(v) ? 1 : 0;
    if (!boundary_vertex_[v]) ++free_skeleton_;
  }
  for (int e = 0; e < num_edges_; ++e) {
    boundary_edge_[e] = mesh.edge(e).on_boundary() ? 1 : 0;
    if (!boundary_edge_[e]) ++free_skeleton_;
  }
}

LocalOperators local_operators(const PolyMesh& mesh, const LocalCell& cell) {
  const int k = cell.num_vertices();
  const int n = cell.num_local_dofs();
  LocalOperators ops;
  ops.area = cell.geometry.area;
  ops.diameter = cell.geometry.diameter;
  ops.hessian_map = Eigen::MatrixXd::Zero(4, n);
  ops.vertex_mismatch = Eigen::MatrixXd::Zero(2 * k, n);
  ops.normal_mismatch = Eigen::MatrixXd::Zero(k, n);
  ops.edge_lengths.resize(k);

  // The weak Hessian of interior-only fields vanishes; probe the skeleton
  // slots one at a time through the weak operators.
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(n);
  for (int col = P2Basis::kSize; col < n; ++col) {
    unit(col) = 1.0;
    const auto grads = edge_weak_gradients(mesh, cell, unit);
    const Mat2 h = weak_hessian(cell, grads);
    ops.hessian_map.col(col) << h(0, 0), h(0, 1), h(1, 0), h(1, 1);
    unit(col) = 0.0;
  }

  for (int i = 0; i < k; ++i) {
    const LocalEdge& le = cell.edges[i];
    ops.edge_lengths(i) = le.length;

    const int endpoints[2] = {i, (i + 1) % k};
    for (int s = 0; s < 2; ++s) {
      const int row = 2 * i + s;
      ops.vertex_mismatch.row(row).head<6>() =
          cell.basis.values(cell.points[endpoints[s]]).transpose();
      ops.vertex_mismatch(row, cell.vertex_slot(endpoints[s])) = -1.0;
    }

    P2Basis::Values mean_dn = P2Basis::Values::Zero();
    for (std::size_t q = 0; q < le.quadrature.points.size(); ++q)
      mean_dn += le.quadrature.weights[q] *
                 (cell.basis.gradients(le.quadrature.points[q]) * le.outward_normal);
    ops.normal_mismatch.row(i).head<6>() = mean_dn.transpose() / le.length;
    ops.normal_mismatch(i, cell.edge_slot(i)) = -static_cast<double>(le.sign);
  }
  return ops;
}

LocalEnergy local_energy(const LocalOperators& ops, const Eigen::VectorXd& local) {
  LocalEnergy e;
  e.hessian = ops.area * (ops.hessian_map * local).squaredNorm();
  const Eigen::VectorXd r2 = ops.normal_mismatch * local;
  e.stabilizer = (ops.vertex_mismatch * local).squaredNorm() / (ops.diameter * ops.diameter) +
                 ops.edge_lengths.dot(r2.cwiseAbs2()) / ops.diameter;
  return e;
}

Eigen::MatrixXd LocalSystem::full() const { return hessian_part + stabilizer_part; }

LocalSystem local_system(const PolyMesh& mesh, const LocalCell& cell, const ScalarField& f) {
  const LocalOperators ops = local_operators(mesh, cell);
  const int k = cell.num_vertices();
  const int m = cell.num_boundary_dofs();
  const double h = ops.diameter;

  LocalSystem ls;
  ls.cell = cell.id;
  ls.hessian_part = ops.area * ops.hessian_map.transpose() * ops.hessian_map;
  ls.stabilizer_part =
      ops.vertex_mismatch.transpose() * ops.vertex_mismatch / (h * h) +
      ops.normal_mismatch.transpose() * ops.edge_lengths.asDiagonal() * ops.normal_mismatch / h;
  const Eigen::MatrixXd a = ls.full();
  ls.a00 = a.topLeftCorner<6, 6>();
  ls.a0b = a.topRightCorner(6, m);
  ls.abb = a.bottomRightCorner(m, m);

  ls.f0 = P2Coefficients::Zero();
  for (std::size_t q = 0; q < cell.quadrature.points.size(); ++q) {
    const Vec2& x = cell.quadrature.points[q];
    ls.f0 += cell.quadrature.weights[q] * f(x) * cell.basis.values(x);
  }

  const auto loop = mesh.cell(cell.id);
  ls.skeleton_dofs.resize(m);
  for (int i = 0; i < k; ++i) {
    ls.skeleton_dofs[i] = loop[i];
    ls.skeleton_dofs[k + i] = mesh.num_vertices() + cell.edges[i].edge;
  }
  return ls;
}

namespace {

Eigen::LLT<Eigen::Matrix<double, 6, 6>> factor_interior(const LocalSystem& local) {
  Eigen::LLT<Eigen::Matrix<double, 6, 6>> llt(local.a00);
  if (llt.info() != Eigen::Success)
    throw GeometryError("degenerate element: interior block of cell " + std::to_string(local.cell) +
                        " is not positive definite");
  return llt;
}

// Accumulates element contributions with symmetric elimination of fixed DOFs.
class EliminatingAssembler {
public:
  EliminatingAssembler(int size, std::vector<char> fixed, Eigen::VectorXd values)
      : size_(size), fixed_(std::move(fixed)), values_(std::move(values)),
        rhs_(Eigen::VectorXd::Zero(size)) {}

  void add(std::span<const int> dofs, const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      const int gi = dofs[i];
      if (fixed_[gi]) continue;
      rhs_(gi) += b(static_cast<Eigen::Index>(i));
      for (std::size_t j = 0; j < dofs.size(); ++j) {
        const int gj = dofs[j];
        const double v = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (fixed_[gj])
          rhs_(gi) -= v * values_(gj);
        else
          triplets_.emplace_back(gi, gj, v);
      }
    }
  }

  AssembledSystem finish() {
    AssembledSystem sys;
    for (int i = 0; i < size_; ++i) {
      if (fixed_[i]) {
        triplets_.emplace_back(i, i, 1.0);
        rhs_(i) = values_(i);
      } else {
        sys.free_dofs.push_back(i);
      }
    }
    sys.matrix.resize(size_, size_);
    sys.matrix.setFromTriplets(triplets_.begin(), triplets_.end());
    sys.matrix.makeCompressed();
    sys.rhs = std::move(rhs_);
    sys.fixed = std::move(fixed_);
    sys.boundary_values = std::move(values_);
    return sys;
  }

private:
  int size_;
  std::vector<char> fixed_;
  Eigen::VectorXd values_;
  Eigen::VectorXd rhs_;
  std::vector<Eigen::Triplet<double>> triplets_;
};

} // namespace

CondensedBlock condense(const LocalSystem& local) {
  const auto llt = factor_interior(local);
  // W = L^{-1} A_0b keeps S = A_bb - W^T W exactly symmetric.
  const Eigen::MatrixXd w = llt.matrixL().solve(local.a0b);
  const P2Coefficients z = llt.matrixL().solve(local.f0);
  CondensedBlock block;
  block.schur = local.abb - w.transpose() * w;
  block.load = -w.transpose() * z;
  return block;
}

P2Coefficients recover_interior(const LocalSystem& local, const Eigen::VectorXd& u_bn_local) {
  return factor_interior(local).solve(local.f0 - local.a0b * u_bn_local);
}

Eigen::VectorXd boundary_skeleton_values(const PolyMesh& mesh, const DofMap& dofs,
                                         const ManufacturedProblem& problem) {
  Eigen::VectorXd values = Eigen::VectorXd::Zero(dofs.num_skeleton());
  for (int v = 0; v < mesh.num_vertices(); ++v)
    if (dofs.vertex_on_boundary(v))
      values(dofs.skeleton_vertex(v)) = qb_project(problem.u, mesh.vertex(v));
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!dofs.edge_on_boundary(e)) continue;
    const Edge& edge = mesh.edge(e);
    const Vec2 n = edge.normal;
    values(dofs.skeleton_edge(e)) =
        qn_project(mesh.vertex(edge.tail), mesh.vertex(edge.head),
                   [&](const Vec2& x) { return problem.grad(x).dot(n); });
  }
  return values;
}

AssembledSystem assemble_full(const PolyMesh& mesh, const ManufacturedProblem& problem) {
  const DofMap dofs(mesh);
  const Eigen::VectorXd skeleton_values = boundary_skeleton_values(mesh, dofs, problem);

  std::vector<char> fixed(dofs.num_total(), 0);
  Eigen::VectorXd values = Eigen::VectorXd::Zero(dofs.num_total());
  for (int v = 0; v < mesh.num_vertices(); ++v)
    if (dofs.vertex_on_boundary(v)) {
      fixed[dofs.vertex_dof(v)] = 1;
      values(dofs.vertex_dof(v)) = skeleton_values(dofs.skeleton_vertex(v));
    }
  for (int e = 0; e < mesh.num_edges(); ++e)
    if (dofs.edge_on_boundary(e)) {
      fixed[dofs.edge_dof(e)] = 1;
      values(dofs.edge_dof(e)) = skeleton_values(dofs.skeleton_edge(e));
    }

  EliminatingAssembler assembler(dofs.num_total(), std::move(fixed), std::move(values));
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const LocalCell cell = make_local_cell(mesh, c);
    const LocalSystem ls = local_system(mesh, cell, problem.f);
    const int n = cell.num_local_dofs();
    std::vector<int> global(n);
    for (int i = 0; i < 6; ++i) global[i] = dofs.interior_offset(c) + i;
    for (int i = 0; i < cell.num_boundary_dofs(); ++i)
      global[6 + i] = dofs.num_interior() + ls.skeleton_dofs[i];
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    b.head<6>() = ls.f0;
    assembler.add(global, ls.full(), b);
  }
  return assembler.finish();
}

WGField field_from_full(const DofMap& dofs, const Eigen::VectorXd& x) {
  WGField field;
  field.interior.resize(dofs.num_cells());
  for (int c = 0; c < dofs.num_cells(); ++c)
    field.interior[c] = x.segment<6>(dofs.interior_offset(c));
  field.vertex_values.resize(dofs.num_vertices());
  for (int v = 0; v < dofs.num_vertices(); ++v) field.vertex_values[v] = x(dofs.vertex_dof(v));
  field.edge_normals.resize(dofs.num_edges());
  for (int e = 0; e < dofs.num_edges(); ++e) field.edge_normals[e] = x(dofs.edge_dof(e));
  return field;
}

CondensedSystem assemble_condensed(const PolyMesh& mesh, const ManufacturedProblem& problem) {
  const DofMap dofs(mesh);
  Eigen::VectorXd values = boundary_skeleton_values(mesh, dofs, problem);
  std::vector<char> fixed(dofs.num_skeleton(), 0);
  for (int v = 0; v < mesh.num_vertices(); ++v)
    fixed[dofs.skeleton_vertex(v)] = dofs.vertex_on_boundary(v) ? 1 : 0;
  for (int e = 0; e < mesh.num_edges(); ++e)
    fixed[dofs.skeleton_edge(e)] = dofs.edge_on_boundary(e) ? 1 : 0;

  CondensedSystem out;
  out.locals.reserve(mesh.num_cells());
  EliminatingAssembler assembler(dofs.num_skeleton(), std::move(fixed), std::move(values));
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const LocalCell cell = make_local_cell(mesh, c);
    LocalSystem ls = local_system(mesh, cell, problem.f);
    const CondensedBlock block = condense(ls);
    assembler.add(ls.skeleton_dofs, block.schur, block.load);
    out.locals.push_back(std::move(ls));
  }
  out.system = assembler.finish();
  return out;
}

WGField recover_field(const PolyMesh& mesh, const CondensedSystem& condensed,
                      const Eigen::VectorXd& skeleton) {
  const int nv = mesh.num_vertices();
  WGField field = WGField::zeros(mesh);
  for (int v = 0; v < nv; ++v) field.vertex_values[v] = skeleton(v);
  for (int e = 0; e < mesh.num_edges(); ++e) field.edge_normals[e] = skeleton(nv + e);
  for (const LocalSystem& ls : condensed.locals) {
    Eigen::VectorXd local(static_cast<Eigen::Index>(ls.skeleton_dofs.size()));
    for (std::size_t i = 0; i < ls.skeleton_dofs.size(); ++i)
      local(static_cast<Eigen::Index>(i)) = skeleton(ls.skeleton_dofs[i]);
    field.interior[ls.cell] = recover_interior(ls, local);
  }
  return field;
}

} // namespace wgm
