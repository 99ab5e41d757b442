#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "wgmorley/mesh.hpp"

namespace wgm::test {

inline const std::vector<MeshKind> kAllKinds{MeshKind::Triangular, MeshKind::Rectangular,
                                             MeshKind::RandomQuad, MeshKind::Hexagonal};

/// Random convex polygon: sorted angles on a jittered circle.
inline std::vector<Vec2> random_convex_polygon(std::mt19937_64& rng, int k) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> angles(k);
  for (int i = 0; i < k; ++i)
    angles[i] = 2.0 * M_PI * (i + 0.15 + 0.7 * unit(rng)) / k;
  const double scale = 0.1 + unit(rng);
  const Vec2 shift(unit(rng) - 0.5, unit(rng) - 0.5);
  std::vector<Vec2> pts;
  for (double a : angles) pts.push_back(shift + scale * Vec2(std::cos(a), std::sin(a)));
  return pts;
}

/// Single-cell mesh from a counter-clockwise loop.
inline PolyMesh single_cell(const std::vector<Vec2>& pts) {
  std::vector<int> loop(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) loop[i] = static_cast<int>(i);
  return PolyMesh(pts, {loop});
}

/// L-shaped hexagon made of three unit squares.
inline std::vector<Vec2> l_shape() {
  return {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
}

} // namespace wgm::test
