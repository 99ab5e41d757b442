#include "wgmorley/quadrature.hpp"

#include <cmath>
#include <string>

#include "wgmorley/errors.hpp"

namespace wgm {

namespace {

// Dunavant symmetric rules, weights normalised to a triangle of unit area.
struct Orbit {
  int size; // 1, 3 or 6
  double a;
  double b;
  double weight;
};

QuadratureRule expand(int degree, std::initializer_list<Orbit> orbits) {
  QuadratureRule rule;
  rule.exactness_degree = degree;
  auto add = [&](double l1, double l2, double w) {
    // barycentric (l0, l1, l2) -> reference (x, y) = (l1, l2)
    rule.points.emplace_back(l1, l2);
    rule.weights.push_back(0.5 * w);
  };
  for (const Orbit& o : orbits) {
    if (o.size == 1) {
      add(1.0 / 3.0, 1.0 / 3.0, o.weight);
    } else if (o.size == 3) {
      const double c = 1.0 - 2.0 * o.a;
      add(o.a, o.a, o.weight);
      add(o.a, c, o.weight);
      add(c, o.a, o.weight);
    } else {
      const double c = 1.0 - o.a - o.b;
      add(o.a, o.b, o.weight);
      add(o.b, o.a, o.weight);
      add(o.a, c, o.weight);
      add(c, o.a, o.weight);
      add(o.b, c, o.weight);
      add(c, o.b, o.weight);
    }
  }
  return rule;
}

const std::array<QuadratureRule, 5>& triangle_tables() {
  static const std::array<QuadratureRule, 5> tables = {
      expand(2, {{3, 1.0 / 6.0, 0.0, 1.0 / 3.0}}),
      expand(4, {{3, 0.44594849091596488631832925388305, 0.0, 0.22338158967801146569500700843312},
                 {3, 0.09157621350977074345957146340220, 0.0, 0.10995174365532186763832632490021}}),
      expand(6, {{3, 0.24928674517091042129163855310702, 0.0, 0.11678627572637936602528961138558},
                 {3, 0.06308901449150222834033160287082, 0.0, 0.05084490637020681692093680910686},
                 {6, 0.31035245103378440541660773395655, 0.63650249912139864723014259441205,
                  0.08285107561837357519355345642044}}),
      expand(8, {{1, 0.0, 0.0, 0.14431560767778716825109111048906},
                 {3, 0.17056930775176020662229350149146, 0.0, 0.10321737053471825028179155029212},
                 {3, 0.05054722831703097545842355059660, 0.0, 0.03245849762319808031092592834178},
                 {3, 0.45929258829272315602881551449417, 0.0, 0.09509163426728462479389610438858},
                 {6, 0.26311282963463811342178578628464, 0.72849239295540428124100037917606,
                  0.02723031417443499426484469007390}}),
      expand(10, {{1, 0.0, 0.0, 0.0908179903827535800952866},
                  {3, 0.4855776333836573773675075, 0.0, 0.03672595775646670471700607},
                  {3, 0.1094815754850370547954586, 0.0, 0.04532105943552793478260564},
                  {6, 0.1417072194148799547566833, 0.307939838764120950165155,
                   0.07275791684542010860431518},
                  {6, 0.02500353476268638607398848, 0.2466725606399026939172765,
                   0.02832724253105748483673706},
                  {6, 0.00954081540029945758015281, 0.06680325101220026577354021,
                   0.009421666963732823459927471}}),
  };
  return tables;
}

QuadratureRule legendre(int nodes) {
  // Nodes/weights on [-1,1] in closed form, mapped to [0,1].
  std::vector<std::pair<double, double>> sym; // (x >= 0, weight)
  switch (nodes) {
  case 1: sym = {{0.0, 2.0}}; break;
  case 2: sym = {{1.0 / std::sqrt(3.0), 1.0}}; break;
  case 3: sym = {{0.0, 8.0 / 9.0}, {std::sqrt(0.6), 5.0 / 9.0}}; break;
  case 4: {
    const double r = 2.0 / 7.0 * std::sqrt(6.0 / 5.0);
    sym = {{std::sqrt(3.0 / 7.0 - r), (18.0 + std::sqrt(30.0)) / 36.0},
           {std::sqrt(3.0 / 7.0 + r), (18.0 - std::sqrt(30.0)) / 36.0}};
    break;
  }
  default: {
    const double r = 2.0 * std::sqrt(10.0 / 7.0);
    sym = {{0.0, 128.0 / 225.0},
           {std::sqrt(5.0 - r) / 3.0, (322.0 + 13.0 * std::sqrt(70.0)) / 900.0},
           {std::sqrt(5.0 + r) / 3.0, (322.0 - 13.0 * std::sqrt(70.0)) / 900.0}};
  }
  }
  QuadratureRule rule;
  rule.exactness_degree = 2 * nodes - 1;
  for (auto [x, w] : sym) {
    if (x == 0.0) {
      rule.points.emplace_back(0.5, 0.0);
      rule.weights.push_back(0.5 * w);
    } else {
      rule.points.emplace_back(0.5 * (1.0 - x), 0.0);
      rule.weights.push_back(0.5 * w);
      rule.points.emplace_back(0.5 * (1.0 + x), 0.0);
      rule.weights.push_back(0.5 * w);
    }
  }
  return rule;
}

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

bool inside_or_on(const Triangle& t, const Vec2& p) {
  const double d0 = cross(t[1] - t[0], p - t[0]);
  const double d1 = cross(t[2] - t[1], p - t[1]);
  const double d2 = cross(t[0] - t[2], p - t[2]);
  return d0 >= 0 && d1 >= 0 && d2 >= 0;
}

std::vector<Triangle> ear_clip(std::span<const Vec2> loop) {
  std::vector<int> ring(loop.size());
  for (std::size_t i = 0; i < loop.size(); ++i) ring[i] = static_cast<int>(i);
  std::vector<Triangle> tris;

  auto try_clip = [&](bool allow_flat) {
    const std::size_t k = ring.size();
    for (std::size_t i = 0; i < k; ++i) {
      const int ip = ring[(i + k - 1) % k];
      const int ic = ring[i];
      const int in = ring[(i + 1) % k];
      const Triangle t{loop[ip], loop[ic], loop[in]};
      const double turn = cross(t[1] - t[0], t[2] - t[1]);
      if (turn < 0 || (turn == 0 && !allow_flat)) continue;
      bool blocked = false;
      for (int j : ring) {
        if (j == ip || j == ic || j == in) continue;
        const Vec2& p = loop[j];
        if (p == t[0] || p == t[1] || p == t[2]) continue;
        if (inside_or_on(t, p)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (turn > 0) tris.push_back(t);
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      return true;
    }
    return false;
  };

  while (ring.size() > 3) {
    if (!try_clip(false) && !try_clip(true))
      throw GeometryError("ear clipping failed: polygon is not simple");
  }
  const Triangle last{loop[ring[0]], loop[ring[1]], loop[ring[2]]};
  if (cross(last[1] - last[0], last[2] - last[0]) > 0) tris.push_back(last);
  return tris;
}

} // namespace

const QuadratureRule& triangle_rule(int degree) {
  if (degree < 0 || degree > kMaxCellDegree)
    throw InvalidArgument("cell quadrature degree " + std::to_string(degree) +
                          " unsupported (max 10)");
  const int slot = degree <= 2 ? 0 : (degree + 1) / 2 - 1;
  return triangle_tables()[slot];
}

const QuadratureRule& gauss_legendre_rule(int degree) {
  if (degree < 0 || degree > kMaxEdgeDegree)
    throw InvalidArgument("edge quadrature degree " + std::to_string(degree) +
                          " unsupported (max 9)");
  static const std::array<QuadratureRule, 5> rules = {legendre(1), legendre(2), legendre(3),
                                                      legendre(4), legendre(5)};
  const int nodes = degree <= 1 ? 1 : (degree + 2) / 2;
  return rules[nodes - 1];
}

double triangle_area(const Triangle& t) { return 0.5 * cross(t[1] - t[0], t[2] - t[0]); }

std::vector<Triangle> triangulate_cell(std::span<const Vec2> loop) {
  if (loop.size() < 3) throw GeometryError("cannot triangulate fewer than 3 vertices");
  if (loop.size() == 3) return {Triangle{loop[0], loop[1], loop[2]}};

  const Vec2 c = cell_geometry(loop).centroid;
  std::vector<Triangle> fan;
  fan.reserve(loop.size());
  bool star = true;
  for (std::size_t i = 0; i < loop.size() && star; ++i) {
    fan.push_back({c, loop[i], loop[(i + 1) % loop.size()]});
    star = triangle_area(fan.back()) > 0.0;
  }
  if (star) return fan;
  return ear_clip(loop);
}

QuadraturePoints cell_quadrature(std::span<const Vec2> loop, int degree) {
  const QuadratureRule& ref = triangle_rule(degree);
  QuadraturePoints out;
  for (const Triangle& t : triangulate_cell(loop)) {
    const Vec2 e1 = t[1] - t[0];
    const Vec2 e2 = t[2] - t[0];
    const double jac = 2.0 * triangle_area(t);
    for (std::size_t q = 0; q < ref.points.size(); ++q) {
      out.points.push_back(t[0] + ref.points[q].x() * e1 + ref.points[q].y() * e2);
      out.weights.push_back(jac * ref.weights[q]);
    }
  }
  return out;
}

QuadraturePoints edge_quadrature(const Vec2& a, const Vec2& b, int degree) {
  const QuadratureRule& ref = gauss_legendre_rule(degree);
  const double len = (b - a).norm();
  QuadraturePoints out;
  for (std::size_t q = 0; q < ref.points.size(); ++q) {
    out.points.push_back(a + ref.points[q].x() * (b - a));
    out.weights.push_back(len * ref.weights[q]);
  }
  return out;
}

} // namespace wgm
