#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "wgmorley/local_cell.hpp"
#include "wgmorley/problems.hpp"
#include "wgmorley/projections.hpp"
#include "wgmorley/weak_ops.hpp"

using namespace wgm;

namespace {

std::array<double, 6> random_quadratic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
}

Mat2 exact_hessian(const std::array<double, 6>& c) {
  Mat2 h;
  h << 2 * c[3], c[4], c[4], 2 * c[5];
  return h;
}

Mat2 weak_hessian_of(const PolyMesh& mesh, const WGField& field, int c) {
  const LocalCell cell = make_local_cell(mesh, c);
  const auto grads = edge_weak_gradients(mesh, cell, restrict_to_cell(field, mesh, cell));
  return weak_hessian(cell, grads);
}

} // namespace

TEST_CASE("weak Hessian commutes with the projection for quadratics") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const PolyMesh mesh = test::single_cell(test::random_convex_polygon(rng, 3 + trial % 7));
    const auto c = random_quadratic(rng);
    const WGField q = qh_interpolate(mesh, quadratic_patch(c));
    const Mat2 h = weak_hessian_of(mesh, q, 0);
    CHECK((h - exact_hessian(c)).cwiseAbs().maxCoeff() < 1e-11);
  }
  const PolyMesh l = test::single_cell(test::l_shape());
  const auto c = random_quadratic(rng);
  CHECK((weak_hessian_of(l, qh_interpolate(l, quadratic_patch(c)), 0) - exact_hessian(c))
            .cwiseAbs()
            .maxCoeff() < 1e-11);
}

TEST_CASE("tangential weak gradient is exact for linear traces") {
  const PolyMesh mesh = gen_hexagonal(3);
  const Vec2 g(0.7, -1.3);
  for (const Edge& e : mesh.edges()) {
    const double a = g.dot(mesh.vertex(e.tail)) + 0.2;
    const double b = g.dot(mesh.vertex(e.head)) + 0.2;
    const Vec2 t = tangential_weak_gradient(e, a, b);
    CHECK((t - g.dot(e.tangent) * e.tangent).norm() < 1e-13);
  }
}

TEST_CASE("both neighbours of an interior edge see the same weak gradient") {
  const PolyMesh mesh = gen_uniform_triangular(2);
  for (const Edge& e : mesh.edges()) {
    if (e.on_boundary()) continue;
    const auto left = edge_weak_gradient(e, 0.37, 1.1, -0.4, +1);
    const auto right = edge_weak_gradient(e, 0.37, 1.1, -0.4, -1);
    CHECK((left.value() - right.value()).norm() < 1e-15);
    CHECK(left.normal_part.dot(e.tangent) == doctest::Approx(0.0));
    CHECK(left.tangential_part.dot(e.normal) == doctest::Approx(0.0));
  }
}

TEST_CASE("weak Hessian is linear and satisfies the integration-by-parts identity") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n01;
  const PolyMesh mesh = test::single_cell(test::random_convex_polygon(rng, 6));
  const LocalCell cell = make_local_cell(mesh, 0);
  const int n = cell.num_local_dofs();
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd u(n), v(n);
    for (int i = 0; i < n; ++i) {
      u(i) = n01(rng);
      v(i) = n01(rng);
    }
    const double a = n01(rng), b = n01(rng);
    auto hess = [&](const Eigen::VectorXd& x) {
      return weak_hessian(cell, edge_weak_gradients(mesh, cell, x));
    };
    CHECK((hess(a * u + b * v) - a * hess(u) - b * hess(v)).cwiseAbs().maxCoeff() < 1e-11);
    const Mat2 h = hess(u);
    CHECK(std::abs(h(0, 1) - h(1, 0)) < 1e-11 * (1 + h.norm()));

    const P2Coefficients interior = u.head<6>();
    const auto grads = edge_weak_gradients(mesh, cell, u);
    CHECK(hessian_identity_residual(cell, interior, grads).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("weak Hessian does not depend on vertex numbering") {
  const PolyMesh mesh = gen_hexagonal(3);
  // reverse the vertex numbering and rotate every cell loop
  const int nv = mesh.num_vertices();
  std::vector<Vec2> verts(nv);
  for (int v = 0; v < nv; ++v) verts[nv - 1 - v] = mesh.vertex(v);
  std::vector<std::vector<int>> cells;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    std::vector<int> loop;
    for (int v : mesh.cell(c)) loop.push_back(nv - 1 - v);
    std::rotate(loop.begin(), loop.begin() + 1 + c % 2, loop.end());
    cells.push_back(loop);
  }
  const PolyMesh relabeled(verts, cells);

  const ManufacturedProblem p = smooth2d();
  const WGField a = qh_interpolate(mesh, p);
  const WGField b = qh_interpolate(relabeled, p);
  for (int c = 0; c < mesh.num_cells(); ++c)
    CHECK((weak_hessian_of(mesh, a, c) - weak_hessian_of(relabeled, b, c)).cwiseAbs().maxCoeff() <
          1e-11);
}

TEST_CASE("for cubics the weak Hessian is the cell mean of the exact Hessian") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyMesh mesh = test::single_cell(test::random_convex_polygon(rng, 3 + trial % 6));
    std::array<double, 4> a{d(rng), d(rng), d(rng), d(rng)};
    ManufacturedProblem cubic;
    cubic.u = [a](const Vec2& p) {
      const double x = p.x(), y = p.y();
      return a[0] * x * x * x + a[1] * x * x * y + a[2] * x * y * y + a[3] * y * y * y + x - y;
    };
    cubic.grad = [a](const Vec2& p) {
      const double x = p.x(), y = p.y();
      return Vec2(3 * a[0] * x * x + 2 * a[1] * x * y + a[2] * y * y + 1,
                  a[1] * x * x + 2 * a[2] * x * y + 3 * a[3] * y * y - 1);
    };
    cubic.f = [](const Vec2&) { return 0.0; };
    const LocalCell cell = make_local_cell(mesh, 0);
    Mat2 mean = Mat2::Zero();
    mean(0, 0) = cell.quadrature.integrate([&](const Vec2& p) { return 6 * a[0] * p.x() + 2 * a[1] * p.y(); });
    mean(0, 1) = cell.quadrature.integrate([&](const Vec2& p) { return 2 * a[1] * p.x() + 2 * a[2] * p.y(); });
    mean(1, 1) = cell.quadrature.integrate([&](const Vec2& p) { return 2 * a[2] * p.x() + 6 * a[3] * p.y(); });
    mean(1, 0) = mean(0, 1);
    mean /= cell.geometry.area;
    const Mat2 h = weak_hessian_of(mesh, qh_interpolate(mesh, cubic), 0);
    CHECK((h - mean).cwiseAbs().maxCoeff() < 1e-11);
  }
}
