#include "wgmorley/problems.hpp"

#include <cmath>

#include "wgmorley/errors.hpp"

namespace wgm {

ManufacturedProblem smooth2d() {
  ManufacturedProblem p;
  p.name = "smooth2d";
  p.u = [](const Vec2& x) { return std::cos(x.x() + 1.0) * std::sin(2.0 * x.y() - 1.0); };
  p.grad = [](const Vec2& x) {
    const double a = x.x() + 1.0;
    const double b = 2.0 * x.y() - 1.0;
    return Vec2(-std::sin(a) * std::sin(b), 2.0 * std::cos(a) * std::cos(b));
  };
  // Delta u = -5 u, so Delta^2 u = 25 u.
  p.f = [](const Vec2& x) { return 25.0 * std::cos(x.x() + 1.0) * std::sin(2.0 * x.y() - 1.0); };
  p.regularity = "analytic";
  return p;
}

ManufacturedProblem singular2d() {
  ManufacturedProblem p;
  p.name = "singular2d";
  p.u = [](const Vec2& x) {
    const double r = x.norm();
    if (r == 0.0) return 0.0;
    return std::pow(r, 5.0 / 3.0) * std::sin(5.0 / 3.0 * std::atan2(x.y(), x.x()));
  };
  // u = Im z^{5/3}; grad u = (Im g, Re g) with g = (5/3) z^{2/3}.
  p.grad = [](const Vec2& x) {
    const double r = x.norm();
    if (r == 0.0) return Vec2(0.0, 0.0);
    const double t = std::atan2(x.y(), x.x());
    const double s = 5.0 / 3.0 * std::pow(r, 2.0 / 3.0);
    return Vec2(s * std::sin(2.0 / 3.0 * t), s * std::cos(2.0 / 3.0 * t));
  };
  p.f = [](const Vec2&) { return 0.0; };
  p.regularity = "H^{8/3-eps}: second derivatives blow up like r^{-1/3} at the origin";
  return p;
}

ManufacturedProblem quadratic_patch(const std::array<double, 6>& c) {
  ManufacturedProblem p;
  p.name = "quadratic";
  p.u = [c](const Vec2& x) {
    return c[0] + c[1] * x.x() + c[2] * x.y() + c[3] * x.x() * x.x() + c[4] * x.x() * x.y() +
           c[5] * x.y() * x.y();
  };
  p.grad = [c](const Vec2& x) {
    return Vec2(c[1] + 2.0 * c[3] * x.x() + c[4] * x.y(), c[2] + c[4] * x.x() + 2.0 * c[5] * x.y());
  };
  p.f = [](const Vec2&) { return 0.0; };
  p.regularity = "polynomial";
  return p;
}

ManufacturedProblem zero_problem() {
  ManufacturedProblem p = quadratic_patch({0, 0, 0, 0, 0, 0});
  p.name = "zero";
  return p;
}

ManufacturedProblem problem_by_name(std::string_view name) {
  if (name == "smooth2d") return smooth2d();
  if (name == "singular2d") return singular2d();
  if (name == "quadratic") return quadratic_patch(kDefaultPatchCoefficients);
  if (name == "zero") return zero_problem();
  throw InvalidArgument("unknown problem '" + std::string(name) +
                        "' (expected smooth2d, singular2d, quadratic or zero)");
}

std::vector<std::string> problem_names() { return {"smooth2d", "singular2d", "quadratic", "zero"}; }

} // namespace wgm
