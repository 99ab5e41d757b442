#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wgmorley/analysis.hpp"
#include "wgmorley/errors.hpp"
#include "wgmorley/local_cell.hpp"
#include "wgmorley/problems.hpp"
#include "wgmorley/study.hpp"

using namespace wgm;

TEST_CASE("rate fits") {
  const std::vector<double> h{1, 0.5, 0.25};
  const RateFit a = fit_rate(h, std::vector<double>{0.1, 0.05, 0.025});
  REQUIRE(a.least_squares);
  CHECK(*a.least_squares == doctest::Approx(1.0));
  REQUIRE(a.pairwise.size() == 2);
  CHECK(*a.pairwise[1] == doctest::Approx(1.0));

  const RateFit b = fit_rate(std::vector<double>{0.5, 0.25}, std::vector<double>{0.04, 0.01});
  CHECK(*b.least_squares == doctest::Approx(2.0));

  const RateFit c = fit_rate(h, std::vector<double>{3, 3, 3});
  CHECK(*c.least_squares == doctest::Approx(0.0));

  const RateFit d = fit_rate(h, std::vector<double>{0.1, 0.0, 0.02});
  CHECK(!d.least_squares);
  CHECK(!d.pairwise[0]);
  CHECK(!d.pairwise[1]);

  CHECK(!fit_rate(std::vector<double>{0.5}, std::vector<double>{0.1}).least_squares);
  CHECK(!fit_rate(std::vector<double>{0.5, 0.5}, std::vector<double>{0.1, 0.2}).least_squares);
  CHECK_THROWS_AS(fit_rate(h, std::vector<double>{1, 2}), InvalidArgument);
}

TEST_CASE("boundary norms count every cell-edge-endpoint") {
  const PolyMesh unit = gen_uniform_rectangular(1);
  WGField f = WGField::zeros(unit);
  CHECK(boundary_norms(unit, f).eb == 0.0);
  for (double& v : f.vertex_values) v = 1.0;
  const BoundaryNorms b = boundary_norms(unit, f);
  CHECK(b.eb == doctest::Approx(4.0)); // h_T^2 = 2, 4 edges x 2 endpoints
  CHECK(b.en == 0.0);
  CHECK(b.wgrad_eb == doctest::Approx(0.0));

  WGField g = WGField::zeros(unit);
  for (double& v : g.edge_normals) v = 1.0;
  CHECK(boundary_norms(unit, g).en == doctest::Approx(std::sqrt(4.0 * std::sqrt(2.0))));

  WGField t = WGField::zeros(unit);
  t.vertex_values[1] = 1.0; // (1,0): two incident unit edges, tangential slope 1 on each
  CHECK(boundary_norms(unit, t).wgrad_eb == doctest::Approx(std::sqrt(2.0 * std::sqrt(2.0))));
}

TEST_CASE("energy parts and homogeneity") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> n01;
  for (MeshKind kind : test::kAllKinds) {
    const PolyMesh mesh = generate_mesh(kind, 3);
    WGField f = WGField::zeros(mesh);
    for (auto& c : f.interior)
      for (int k = 0; k < 6; ++k) c(k) = n01(rng);
    for (double& v : f.vertex_values) v = n01(rng);
    for (double& v : f.edge_normals) v = n01(rng);

    const EnergyParts parts = energy_parts(mesh, f);
    CHECK(parts.hessian >= 0.0);
    CHECK(parts.stabilizer > 0.0);
    CHECK(energy_norm(mesh, f) == doctest::Approx(std::sqrt(parts.total())));

    const double alpha = -0.3 - std::abs(n01(rng));
    const WGField g = alpha * f;
    const BoundaryNorms bf = boundary_norms(mesh, f), bg = boundary_norms(mesh, g);
    const std::array<double, 5> a{energy_norm(mesh, f), l2_norm_e0(mesh, f), bf.eb, bf.en, bf.wgrad_eb};
    const std::array<double, 5> b{energy_norm(mesh, g), l2_norm_e0(mesh, g), bg.eb, bg.en, bg.wgrad_eb};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(b[i] - std::abs(alpha) * a[i]) < 1e-12 * b[i]);
    const auto grad0 = [](const Vec2&) { return Vec2(0, 0); };
    CHECK(h1_interior_error(mesh, grad0, g) ==
          doctest::Approx(std::abs(alpha) * h1_interior_error(mesh, grad0, f)).epsilon(1e-12));
  }
}

TEST_CASE("interpolation errors vanish for quadratics") {
  const PolyMesh mesh = gen_hexagonal(4);
  const ManufacturedProblem q = quadratic_patch({0.5, 1, -2, 3, 0.25, -1});
  const WGField qh = qh_interpolate(mesh, q);
  CHECK(h1_interior_error(mesh, q.grad, qh) < 1e-12);
  CHECK(l2_error_u0(mesh, q.u, qh) < 1e-12);
  const ErrorNorms e = compute_errors(mesh, q, qh);
  for (double m : e.metrics) CHECK(m < 1e-12);
}

TEST_CASE("energy error halves between n = 16 and n = 32") {
  const ManufacturedProblem p = smooth2d();
  const double e16 = solve_problem(gen_uniform_triangular(16), p).norms.energy();
  const double e32 = solve_problem(gen_uniform_triangular(32), p).norms.energy();
  CHECK(e16 / e32 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("convergence driver and reports") {
  StudyConfig cfg;
  cfg.ns = {4, 8};
  cfg.levels = {1, 2};
  std::vector<int> seen;
  const auto records = run_convergence(cfg, smooth2d(), [&](const ConvergenceRecord& r) { seen.push_back(r.n); });
  CHECK(seen == std::vector<int>{4, 8});
  REQUIRE(records.size() == 2);
  CHECK(records[1].h == doctest::Approx(records[0].h / 2));
  CHECK(csv_header() == "level,h,ndof,energy,l2_e0,eb,en,wgrad_eb,h1_u0\n");
  CHECK(csv_row(records[0]).rfind("1,", 0) == 0);
  CHECK(csv_rate_row(std::span(records).first(1)) == "rate,,,n/a,n/a,n/a,n/a,n/a,n/a\n");
  const std::string svg = render_svg(records, "demo");
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t polylines = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1))
    ++polylines;
  CHECK(polylines == 6);

  cfg.ns = {8, 4};
  CHECK_THROWS_AS(run_convergence(cfg, smooth2d()), InvalidArgument);
  CHECK(level_to_n(1) == 4);
  CHECK(level_to_n(5) == 64);
  CHECK_THROWS_AS(level_to_n(0), InvalidArgument);
}
