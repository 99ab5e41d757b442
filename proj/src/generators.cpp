#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "wgmorley/errors.hpp"
#include "wgmorley/mesh.hpp"

namespace wgm {

namespace {

int grid_index(int n, int i, int j) { return j * (n + 1) + i; }

std::vector<Vec2> grid_vertices(int n) {
  std::vector<Vec2> v;
  v.reserve((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      v.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
  return v;
}

std::vector<std::vector<int>> grid_quads(int n) {
  std::vector<std::vector<int>> cells;
  cells.reserve(n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      cells.push_back({grid_index(n, i, j), grid_index(n, i + 1, j), grid_index(n, i + 1, j + 1),
                       grid_index(n, i, j + 1)});
  return cells;
}

// splitmix64
struct SplitMix {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [-1, 1].
  double symmetric() { return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0; }
};

bool strictly_convex(const std::vector<Vec2>& v, const std::vector<int>& loop) {
  const std::size_t k = loop.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2& a = v[loop[i]];
    const Vec2& b = v[loop[(i + 1) % k]];
    const Vec2& c = v[loop[(i + 2) % k]];
    const Vec2 ab = b - a;
    const Vec2 bc = c - b;
    if (ab.x() * bc.y() - ab.y() * bc.x() <= 0.0) return false;
  }
  return true;
}

} // namespace

PolyMesh gen_uniform_triangular(int n) {
  if (n < 1) throw InvalidArgument("triangular mesh needs n >= 1, got " + std::to_string(n));
  std::vector<std::vector<int>> cells;
  cells.reserve(2 * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int p00 = grid_index(n, i, j);
      const int p10 = grid_index(n, i + 1, j);
      const int p11 = grid_index(n, i + 1, j + 1);
      const int p01 = grid_index(n, i, j + 1);
      cells.push_back({p00, p10, p11});
      cells.push_back({p00, p11, p01});
    }
  }
  return PolyMesh(grid_vertices(n), std::move(cells));
}

PolyMesh gen_uniform_rectangular(int n) {
  if (n < 1) throw InvalidArgument("rectangular mesh needs n >= 1, got " + std::to_string(n));
  return PolyMesh(grid_vertices(n), grid_quads(n));
}

PolyMesh gen_randomized_quadrilateral(int n, std::uint64_t seed, double jitter) {
  if (n < 2) throw InvalidArgument("randomized quadrilateral mesh needs n >= 2");
  if (!(jitter >= 0.0) || jitter > 0.3)
    throw InvalidArgument("jitter must lie in [0, 0.3], got " + std::to_string(jitter));

  // Draw the offsets once; retries only rescale them.
  SplitMix rng{seed};
  std::vector<Vec2> offsets((n + 1) * (n + 1), Vec2::Zero());
  for (int j = 1; j < n; ++j)
    for (int i = 1; i < n; ++i) {
      const double dx = rng.symmetric();
      const double dy = rng.symmetric();
      offsets[grid_index(n, i, j)] = Vec2(dx, dy) * (jitter / n);
    }

  const auto base = grid_vertices(n);
  const auto cells = grid_quads(n);
  std::vector<double> row_scale(n + 1, 1.0);
  std::vector<Vec2> vertices = base;
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n; ++i) {
        const int v = grid_index(n, i, j);
        vertices[v] = base[v] + row_scale[j] * offsets[v];
      }
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      bool row_ok = true;
      for (int i = 0; i < n && row_ok; ++i) row_ok = strictly_convex(vertices, cells[j * n + i]);
      if (!row_ok) {
        ok = false;
        row_scale[j] *= 0.5;
        row_scale[j + 1] *= 0.5;
      }
    }
    if (ok) return PolyMesh(std::move(vertices), cells);
  }
  throw GeometryError("randomized quadrilateral mesh: could not untangle cells");
}

PolyMesh gen_hexagonal(int n) {
  if (n < 2) throw InvalidArgument("hexagonal mesh needs n >= 2, got " + std::to_string(n));

  // Vertex lines j = 0..n sit at y = j/n and zigzag by +-amp at the half-steps
  // x = k/(2n), k = 0..2n. A cell of row r spans lines r and r+1 and is
  // centred on half-step kc where kc + r is odd; its bottom tip dips and its
  // top tip rises. Lines 0 and n stay flat so the square is covered exactly.
  const double w = 1.0 / n;
  const double amp = w * std::sqrt(3.0) / 12.0;
  const int nk = 2 * n + 1;

  std::vector<int> id((n + 1) * nk, -1);
  std::vector<Vec2> vertices;
  auto vertex = [&](int j, int k) {
    int& slot = id[j * nk + k];
    if (slot < 0) {
      double y = static_cast<double>(j) / n;
      if (j > 0 && j < n) y += ((k + j) % 2 == 1) ? -amp : amp;
      slot = static_cast<int>(vertices.size());
      vertices.emplace_back(0.5 * w * k, y);
    }
    return slot;
  };

  std::vector<std::vector<int>> cells;
  for (int r = 0; r < n; ++r) {
    for (int kc = (r % 2 == 0) ? 1 : 0; kc <= 2 * n; kc += 2) {
      std::vector<int> loop;
      const int lo = std::max(kc - 1, 0);
      const int hi = std::min(kc + 1, 2 * n);
      // Bottom line r, left to right; the middle vertex is dropped on the
      // flat boundary line unless it is a corner of a clipped half cell.
      for (int k = lo; k <= hi; ++k) {
        const bool interior_mid = (k == kc && lo < kc && kc < hi);
        if (r == 0 && interior_mid) continue;
        loop.push_back(vertex(r, k));
      }
      for (int k = hi; k >= lo; --k) {
        const bool interior_mid = (k == kc && lo < kc && kc < hi);
        if (r + 1 == n && interior_mid) continue;
        loop.push_back(vertex(r + 1, k));
      }
      cells.push_back(std::move(loop));
    }
  }
  return PolyMesh(std::move(vertices), std::move(cells));
}

MeshKind parse_mesh_kind(std::string_view name) {
  if (name == "tri") return MeshKind::Triangular;
  if (name == "rect") return MeshKind::Rectangular;
  if (name == "quad-rand") return MeshKind::RandomQuad;
  if (name == "hex") return MeshKind::Hexagonal;
  throw InvalidArgument("unknown mesh kind '" + std::string(name) +
                        "' (expected tri, rect, quad-rand or hex)");
}

std::string_view mesh_kind_name(MeshKind kind) {
  switch (kind) {
  case MeshKind::Triangular: return "tri";
  case MeshKind::Rectangular: return "rect";
  case MeshKind::RandomQuad: return "quad-rand";
  case MeshKind::Hexagonal: return "hex";
  }
  return "?";
}

PolyMesh generate_mesh(MeshKind kind, int n, std::uint64_t seed, double jitter) {
  switch (kind) {
  case MeshKind::Triangular: return gen_uniform_triangular(n);
  case MeshKind::Rectangular: return gen_uniform_rectangular(n);
  case MeshKind::RandomQuad: return gen_randomized_quadrilateral(n, seed, jitter);
  case MeshKind::Hexagonal: return gen_hexagonal(n);
  }
  throw InvalidArgument("unknown mesh kind");
}

} // namespace wgm
