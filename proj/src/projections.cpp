#include "wgmorley/projections.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "wgmorley/errors.hpp"
#include "wgmorley/quadrature.hpp"

namespace wgm {

namespace {

constexpr double kMaxMassCondition = 1e12;

} // namespace

WGField WGField::zeros(const PolyMesh& mesh) {
  WGField f;
  f.interior.assign(mesh.num_cells(), P2Coefficients::Zero());
  f.vertex_values.assign(mesh.num_vertices(), 0.0);
  f.edge_normals.assign(mesh.num_edges(), 0.0);
  return f;
}

WGField& WGField::operator-=(const WGField& other) {
  for (std::size_t c = 0; c < interior.size(); ++c) interior[c] -= other.interior[c];
  for (std::size_t v = 0; v < vertex_values.size(); ++v) vertex_values[v] -= other.vertex_values[v];
  for (std::size_t e = 0; e < edge_normals.size(); ++e) edge_normals[e] -= other.edge_normals[e];
  return *this;
}

WGField& WGField::operator*=(double alpha) {
  for (auto& c : interior) c *= alpha;
  for (auto& v : vertex_values) v *= alpha;
  for (auto& e : edge_normals) e *= alpha;
  return *this;
}

bool WGField::all_finite() const {
  for (const auto& c : interior)
    if (!c.allFinite()) return false;
  for (double v : vertex_values)
    if (!std::isfinite(v)) return false;
  for (double e : edge_normals)
    if (!std::isfinite(e)) return false;
  return true;
}

WGField operator-(WGField a, const WGField& b) { return a -= b; }
WGField operator*(double alpha, WGField a) { return a *= alpha; }

Eigen::VectorXd restrict_to_cell(const WGField& field, const PolyMesh& mesh, const LocalCell& cell) {
  Eigen::VectorXd local(cell.num_local_dofs());
  local.head<6>() = field.interior[cell.id];
  const auto loop = mesh.cell(cell.id);
  for (int k = 0; k < cell.num_vertices(); ++k) {
    local(cell.vertex_slot(k)) = field.vertex_values[loop[k]];
    local(cell.edge_slot(k)) = field.edge_normals[cell.edges[k].edge];
  }
  return local;
}

Eigen::Matrix<double, 6, 6> p2_mass_matrix(const LocalCell& cell) {
  Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Zero();
  for (std::size_t q = 0; q < cell.quadrature.points.size(); ++q) {
    const auto phi = cell.basis.values(cell.quadrature.points[q]);
    m.noalias() += cell.quadrature.weights[q] * phi * phi.transpose();
  }
  return m;
}

P2Coefficients q0_project(const LocalCell& cell, const ScalarField& u) {
  const auto m = p2_mass_matrix(cell);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(m, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxMassCondition)
    throw GeometryError("cell " + std::to_string(cell.id) +
                        ": P2 mass matrix is singular or badly conditioned");
  P2Coefficients b = P2Coefficients::Zero();
  for (std::size_t q = 0; q < cell.quadrature.points.size(); ++q) {
    const Vec2& x = cell.quadrature.points[q];
    b += cell.quadrature.weights[q] * u(x) * cell.basis.values(x);
  }
  return m.llt().solve(b);
}

double qb_project(const ScalarField& u, const Vec2& vertex) { return u(vertex); }

double qn_project(const Vec2& a, const Vec2& b, const ScalarField& g) {
  return integrate_edge(a, b, g) / (b - a).norm();
}

double qbar_project(const LocalCell& cell, const ScalarField& f) {
  return cell.quadrature.integrate(f) / cell.geometry.area;
}

WGField qh_interpolate(const PolyMesh& mesh, const ManufacturedProblem& problem) {
  WGField field = WGField::zeros(mesh);
  for (int c = 0; c < mesh.num_cells(); ++c)
    field.interior[c] = q0_project(make_local_cell(mesh, c), problem.u);
  for (int v = 0; v < mesh.num_vertices(); ++v)
    field.vertex_values[v] = qb_project(problem.u, mesh.vertex(v));
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edge(e);
    const Vec2 n = edge.normal;
    field.edge_normals[e] = qn_project(mesh.vertex(edge.tail), mesh.vertex(edge.head),
                                       [&](const Vec2& x) { return problem.grad(x).dot(n); });
  }
  return field;
}

} // namespace wgm
