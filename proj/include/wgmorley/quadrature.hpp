#pragma once

#include <array>
#include <span>
#include <vector>

#include "wgmorley/mesh.hpp"

namespace wgm {

inline constexpr int kDefaultCellDegree = 6;
inline constexpr int kDefaultEdgeDegree = 7; // 4 Gauss-Legendre nodes
inline constexpr int kMaxCellDegree = 10;
inline constexpr int kMaxEdgeDegree = 9;

/// Reference-domain rule. Triangle rules live on (0,0),(1,0),(0,1) with
/// weights summing to 1/2; Gauss-Legendre rules live on [0,1] (x component
/// only) with weights summing to 1.
struct QuadratureRule {
  std::vector<Vec2> points;
  std::vector<double> weights;
  int exactness_degree = 1;
};

/// Symmetric Gauss rule exact to at least `degree` (tabulated 2,4,6,8,10).
const QuadratureRule& triangle_rule(int degree);
/// Gauss-Legendre rule on [0,1] exact to at least `degree` (1..5 nodes).
const QuadratureRule& gauss_legendre_rule(int degree);

using Triangle = std::array<Vec2, 3>;

double triangle_area(const Triangle& t);

/// Tiles a counter-clockwise cell with triangles: the cell itself for
/// triangles, a centroid fan when every fan triangle has positive area, ear
/// clipping otherwise. Throws GeometryError when ear clipping gets stuck.
std::vector<Triangle> triangulate_cell(std::span<const Vec2> loop);

/// Physical quadrature points and weights.
struct QuadraturePoints {
  std::vector<Vec2> points;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t q = 0; q < points.size(); ++q) sum += weights[q] * f(points[q]);
    return sum;
  }
};

QuadraturePoints cell_quadrature(std::span<const Vec2> loop, int degree = kDefaultCellDegree);
QuadraturePoints edge_quadrature(const Vec2& a, const Vec2& b, int degree = kDefaultEdgeDegree);

template <class F>
double integrate_cell(std::span<const Vec2> loop, F&& f, int degree = kDefaultCellDegree) {
  return cell_quadrature(loop, degree).integrate(f);
}

template <class F>
double integrate_edge(const Vec2& a, const Vec2& b, F&& f, int degree = kDefaultEdgeDegree) {
  return edge_quadrature(a, b, degree).integrate(f);
}

} // namespace wgm
