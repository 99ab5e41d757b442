#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "helpers.hpp"
#include "wgmorley/errors.hpp"
#include "wgmorley/local_cell.hpp"
#include "wgmorley/problems.hpp"
#include "wgmorley/projections.hpp"

using namespace wgm;

TEST_CASE("Q0 reproduces quadratics and is idempotent") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const PolyMesh mesh = test::single_cell(test::random_convex_polygon(rng, 3 + trial % 5));
    const LocalCell cell = make_local_cell(mesh, 0);
    const ManufacturedProblem q = quadratic_patch({0.3, -1, 2, 0.5, 1.5, -0.7});
    const P2Coefficients c = q0_project(cell, q.u);
    for (const Vec2& x : cell.quadrature.points)
      CHECK(cell.basis.evaluate(c, x) == doctest::Approx(q.u(x)).epsilon(1e-12));

    const ScalarField f = [](const Vec2& x) { return std::exp(x.x()) * std::sin(3 * x.y()); };
    const P2Coefficients p = q0_project(cell, f);
    const P2Coefficients pp = q0_project(cell, [&](const Vec2& x) { return cell.basis.evaluate(p, x); });
    CHECK((p - pp).cwiseAbs().maxCoeff() < 1e-10 * (1 + p.cwiseAbs().maxCoeff()));
    // residual is orthogonal to P2
    for (int k = 0; k < 6; ++k) {
      const double r = cell.quadrature.integrate([&](const Vec2& x) {
        return (f(x) - cell.basis.evaluate(p, x)) * cell.basis.values(x)(k);
      });
      CHECK(std::abs(r) < 1e-12);
    }
  }
}

TEST_CASE("P2 mass matrix is symmetric positive definite") {
  const PolyMesh mesh = test::single_cell(test::l_shape());
  const LocalCell cell = make_local_cell(mesh, 0);
  const auto m = p2_mass_matrix(cell);
  CHECK((m - m.transpose()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(m(0, 0) == doctest::Approx(3.0));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(m);
  CHECK(eig.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("trace projections") {
  const ScalarField lin = [](const Vec2& x) { return 2 * x.x() - x.y() + 0.5; };
  const Vec2 a(0.1, 0.2), b(0.9, 0.6);
  CHECK(qb_project(lin, a) == lin(a));
  CHECK(qn_project(a, b, lin) == doctest::Approx(lin(0.5 * (a + b))));
  const ScalarField sq = [](const Vec2& x) { return x.x() * x.x(); };
  // mean of x^2 along x in [0.1, 0.9]
  CHECK(qn_project(a, b, sq) == doctest::Approx((0.729 - 0.001) / 3 / 0.8));

  const PolyMesh unit = gen_uniform_rectangular(1);
  const LocalCell cell = make_local_cell(unit, 0);
  CHECK(qbar_project(cell, lin) == doctest::Approx(lin(Vec2(0.5, 0.5))));
}

TEST_CASE("Q_h interpolation of the boundary data") {
  const PolyMesh mesh = gen_uniform_triangular(3);
  const ManufacturedProblem p = smooth2d();
  const WGField q = qh_interpolate(mesh, p);
  REQUIRE(q.interior.size() == static_cast<std::size_t>(mesh.num_cells()));
  for (int v = 0; v < mesh.num_vertices(); ++v) CHECK(q.vertex_values[v] == p.u(mesh.vertex(v)));
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edge(e);
    const double mean = qn_project(mesh.vertex(edge.tail), mesh.vertex(edge.head),
                                   [&](const Vec2& x) { return p.grad(x).dot(edge.normal); });
    CHECK(q.edge_normals[e] == doctest::Approx(mean).epsilon(1e-14));
  }
  CHECK(q.all_finite());
}

TEST_CASE("weak field arithmetic") {
  const PolyMesh mesh = gen_uniform_rectangular(2);
  const WGField a = qh_interpolate(mesh, smooth2d());
  const WGField z = a - a;
  for (double v : z.vertex_values) CHECK(v == 0.0);
  const WGField twice = 2.0 * a;
  CHECK(twice.edge_normals[3] == 2.0 * a.edge_normals[3]);
  CHECK(twice.interior[1](4) == 2.0 * a.interior[1](4));
  WGField zero = WGField::zeros(mesh);
  CHECK(zero.vertex_values.size() == 9u);
  zero.vertex_values[0] = NAN;
  CHECK(!zero.all_finite());
}

TEST_CASE("Q0 projection error decays like h^3") {
  const ScalarField phi = [](const Vec2& x) { return std::cos(x.x() + 1) * std::sin(2 * x.y() - 1); };
  std::vector<double> h, err;
  for (int n : {8, 16, 32, 64}) {
    const PolyMesh mesh = gen_uniform_rectangular(n);
    double sum = 0.0;
    for (int c = 0; c < mesh.num_cells(); ++c) {
      const LocalCell cell = make_local_cell(mesh, c);
      const P2Coefficients q = q0_project(cell, phi);
      sum += cell.quadrature.integrate([&](const Vec2& x) {
        const double d = phi(x) - cell.basis.evaluate(q, x);
        return d * d;
      });
    }
    h.push_back(mesh.meshsize());
    err.push_back(std::sqrt(sum));
  }
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    CHECK(std::log(err[i] / err[i + 1]) / std::log(h[i] / h[i + 1]) == doctest::Approx(3.0).epsilon(0.05));
}
