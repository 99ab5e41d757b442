#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wgmorley/mesh.hpp"

namespace wgm {

/// Exact solution of Delta^2 u = f on the unit square. Boundary data
/// g = u and nu = grad u . n are always derived from `u` and `grad`.
struct ManufacturedProblem {
  std::string name;
  std::function<double(const Vec2&)> u;
  std::function<Vec2(const Vec2&)> grad;
  std::function<double(const Vec2&)> f;
  std::string regularity;
};

/// u = cos(x+1) sin(2y-1), f = 25 u.
ManufacturedProblem smooth2d();
/// u = r^{5/3} sin(5 theta / 3), harmonic, f = 0.
ManufacturedProblem singular2d();
/// u = c0 + c1 x + c2 y + c3 x^2 + c4 xy + c5 y^2, f = 0.
ManufacturedProblem quadratic_patch(const std::array<double, 6>& c);
/// u = 0.
ManufacturedProblem zero_problem();

/// Coefficients used by the "quadratic" CLI problem: 1 + 2x - y + x^2 - xy + 3y^2.
inline constexpr std::array<double, 6> kDefaultPatchCoefficients{1.0, 2.0, -1.0, 1.0, -1.0, 3.0};

/// Looks up smooth2d, singular2d, quadratic or zero.
ManufacturedProblem problem_by_name(std::string_view name);
std::vector<std::string> problem_names();

} // namespace wgm
