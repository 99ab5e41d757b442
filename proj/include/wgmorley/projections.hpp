#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "wgmorley/basis.hpp"
#include "wgmorley/local_cell.hpp"
#include "wgmorley/mesh.hpp"
#include "wgmorley/problems.hpp"

namespace wgm {

using ScalarField = std::function<double(const Vec2&)>;

/// Discrete weak function {v_0, v_b, v_n n_F}: P2 coefficients per cell,
/// one value per mesh vertex and one normal-derivative value per mesh edge
/// (w.r.t. the global edge normal).
struct WGField {
  std::vector<P2Coefficients> interior;
  std::vector<double> vertex_values;
  std::vector<double> edge_normals;

  static WGField zeros(const PolyMesh& mesh);

  WGField& operator-=(const WGField& other);
  WGField& operator*=(double alpha);
  bool all_finite() const;
};

WGField operator-(WGField a, const WGField& b);
WGField operator*(double alpha, WGField a);

/// Gathers the local vector [interior | vertex values | edge normals] of a cell.
Eigen::VectorXd restrict_to_cell(const WGField& field, const PolyMesh& mesh, const LocalCell& cell);

/// Local P2 mass matrix in the scaled monomial basis.
Eigen::Matrix<double, 6, 6> p2_mass_matrix(const LocalCell& cell);

/// L2 projection onto P2(T). Throws GeometryError when the local mass matrix
/// has condition number above 1e12.
P2Coefficients q0_project(const LocalCell& cell, const ScalarField& u);

/// Projection onto P0 of a vertex: point evaluation.
double qb_project(const ScalarField& u, const Vec2& vertex);

/// Edge mean (1/|F|) int_F g.
double qn_project(const Vec2& a, const Vec2& b, const ScalarField& g);

/// Cell mean of f.
double qbar_project(const LocalCell& cell, const ScalarField& f);

/// Q_h u = {Q_0 u, Q_b u, Q_n(grad u . n_F)} on every cell, vertex and edge.
WGField qh_interpolate(const PolyMesh& mesh, const ManufacturedProblem& problem);

} // namespace wgm
