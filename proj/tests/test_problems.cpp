#include <doctest.h>

#include <random>

#include "wgmorley/errors.hpp"
#include "wgmorley/mesh.hpp"
#include "wgmorley/problems.hpp"

using namespace wgm;

namespace {

using Field = std::function<double(const Vec2&)>;

double laplacian_fd(const Field& u, const Vec2& p, double h) {
  const Vec2 ex(h, 0), ey(0, h);
  return (u(p + ex) + u(p - ex) + u(p + ey) + u(p - ey) - 4 * u(p)) / (h * h);
}

// Richardson-extrapolated 5-point Laplacian, O(h^4).
double laplacian(const Field& u, const Vec2& p, double h) {
  return (4 * laplacian_fd(u, p, h / 2) - laplacian_fd(u, p, h)) / 3;
}

double bilaplacian(const Field& u, const Vec2& p, double h) {
  const Field lap = [&](const Vec2& x) { return laplacian(u, x, h); };
  return laplacian(lap, p, 4 * h);
}

} // namespace

TEST_CASE("smooth problem values") {
  const ManufacturedProblem p = smooth2d();
  CHECK(p.u(Vec2(0.5, 0.5)) == doctest::Approx(0.0));
  const Vec2 g = p.grad(Vec2(0, 0.5));
  CHECK(g.x() == doctest::Approx(0.0));
  CHECK(g.y() == doctest::Approx(2 * std::cos(1.0)));
}

TEST_CASE("smooth load is the bilaplacian") {
  const ManufacturedProblem p = smooth2d();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const Vec2 x(d(rng), d(rng));
    CHECK(p.f(x) == doctest::Approx(25 * p.u(x)).epsilon(1e-14));
    CHECK(std::abs(bilaplacian(p.u, x, 1e-2) - p.f(x)) < 1e-6);
  }
}

TEST_CASE("singular problem is harmonic") {
  const ManufacturedProblem p = singular2d();
  CHECK(p.u(Vec2(1, 0)) == doctest::Approx(0.0));
  CHECK(p.u(Vec2(0, 1)) == doctest::Approx(0.5));
  CHECK(p.u(Vec2(0, 0)) == 0.0);
  CHECK(p.grad(Vec2(0, 0)).norm() == 0.0);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> d(0.05, 1.0);
  for (int i = 0; i < 10; ++i) {
    const Vec2 x(d(rng), d(rng));
    CHECK(std::abs(laplacian(p.u, x, 1e-3)) < 1e-6);
    CHECK(p.f(x) == 0.0);
  }
}

TEST_CASE("gradients match finite differences") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> d(0.05, 1.0);
  const double h = 1e-5;
  for (const auto& name : problem_names()) {
    const ManufacturedProblem p = problem_by_name(name);
    for (int i = 0; i < 10; ++i) {
      const Vec2 x(d(rng), d(rng));
      const Vec2 fd((p.u(x + Vec2(h, 0)) - p.u(x - Vec2(h, 0))) / (2 * h),
                    (p.u(x + Vec2(0, h)) - p.u(x - Vec2(0, h))) / (2 * h));
      CHECK((fd - p.grad(x)).norm() < 1e-7);
    }
  }
}

TEST_CASE("boundary normal derivative matches a difference across each boundary edge") {
  const PolyMesh mesh = gen_uniform_triangular(4);
  const double eps = 1e-5;
  for (const auto& name : problem_names()) {
    const ManufacturedProblem p = problem_by_name(name);
    for (const Edge& e : mesh.edges()) {
      if (!e.on_boundary()) continue;
      const Vec2 m = 0.5 * (mesh.vertex(e.tail) + mesh.vertex(e.head));
      const double fd = (p.u(m + eps * e.normal) - p.u(m - eps * e.normal)) / (2 * eps);
      CHECK(std::abs(fd - p.grad(m).dot(e.normal)) < 1e-6);
    }
  }
}

TEST_CASE("quadratic patch and catalog") {
  const ManufacturedProblem sq = quadratic_patch({0, 0, 0, 1, 0, 0});
  CHECK(sq.u(Vec2(0.3, 0.9)) == doctest::Approx(0.09));
  CHECK(sq.f(Vec2(0.3, 0.9)) == 0.0);
  const ManufacturedProblem lin = quadratic_patch({0, 1, 2, 0, 0, 0});
  CHECK((lin.grad(Vec2(0.7, 0.1)) - Vec2(1, 2)).norm() == 0.0);

  CHECK(problem_names() == std::vector<std::string>{"smooth2d", "singular2d", "quadratic", "zero"});
  CHECK(problem_by_name("quadratic").u(Vec2(0, 0)) == 1.0);
  CHECK_THROWS_AS(problem_by_name("cubic"), InvalidArgument);
}
