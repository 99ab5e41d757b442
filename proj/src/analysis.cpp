#include "wgmorley/analysis.hpp"

#include <cmath>

#include "wgmorley/errors.hpp"
#include "wgmorley/weak_ops.hpp"

namespace wgm {

EnergyParts energy_parts(const PolyMesh& mesh, const WGField& field) {
  EnergyParts parts;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const LocalCell cell = make_local_cell(mesh, c);
    const LocalEnergy e = local_energy(local_operators(mesh, cell), restrict_to_cell(field, mesh, cell));
    parts.hessian += e.hessian;
    parts.stabilizer += e.stabilizer;
  }
  return parts;
}

double energy_norm(const PolyMesh& mesh, const WGField& field) {
  return std::sqrt(energy_parts(mesh, field).total());
}

double l2_norm_e0(const PolyMesh& mesh, const WGField& field) {
  double sum = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const LocalCell cell = make_local_cell(mesh, c);
    const P2Coefficients& v = field.interior[c];
    sum += cell.quadrature.integrate([&](const Vec2& x) {
      const double s = cell.basis.evaluate(v, x);
      return s * s;
    });
  }
  return std::sqrt(sum);
}

double l2_error_u0(const PolyMesh& mesh, const ScalarField& u, const WGField& field) {
  double sum = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const LocalCell cell = make_local_cell(mesh, c);
    const P2Coefficients& v = field.interior[c];
    sum += cell.quadrature.integrate([&](const Vec2& x) {
      const double s = u(x) - cell.basis.evaluate(v, x);
      return s * s;
    });
  }
  return std::sqrt(sum);
}

BoundaryNorms boundary_norms(const PolyMesh& mesh, const WGField& field) {
  double eb = 0.0, en = 0.0, wg = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const double h = mesh.geometry(c).diameter;
    const auto loop = mesh.cell(c);
    const auto incident = mesh.cell_edges(c);
    const std::size_t k = loop.size();
    double cell_eb = 0.0, cell_en = 0.0, cell_wg = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const Edge& edge = mesh.edge(incident[i].edge);
      const double tail = field.vertex_values[edge.tail];
      const double head = field.vertex_values[edge.head];
      cell_eb += tail * tail + head * head;
      const double n = field.edge_normals[incident[i].edge];
      cell_en += edge.length * n * n;
      cell_wg += edge.length * tangential_weak_gradient(edge, tail, head).squaredNorm();
    }
    eb += h * h * cell_eb;
    en += h * cell_en;
    wg += h * cell_wg;
  }
  return {std::sqrt(eb), std::sqrt(en), std::sqrt(wg)};
}

double h1_interior_error(const PolyMesh& mesh, const std::function<Vec2(const Vec2&)>& grad_u,
                         const WGField& field) {
  double sum = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const LocalCell cell = make_local_cell(mesh, c);
    const P2Coefficients& v = field.interior[c];
    sum += cell.quadrature.integrate(
        [&](const Vec2& x) { return (grad_u(x) - cell.basis.gradient(v, x)).squaredNorm(); });
  }
  return std::sqrt(sum);
}

ErrorNorms compute_errors(const PolyMesh& mesh, const ManufacturedProblem& problem,
                          const WGField& solution) {
  const WGField error = qh_interpolate(mesh, problem) - solution;
  const BoundaryNorms b = boundary_norms(mesh, error);
  ErrorNorms out;
  out.metrics = {energy_norm(mesh, error),
                 l2_norm_e0(mesh, error),
                 b.eb,
                 b.en,
                 b.wgrad_eb,
                 h1_interior_error(mesh, problem.grad, solution)};
  out.l2_u_minus_u0 = l2_error_u0(mesh, problem.u, solution);
  return out;
}

RateFit fit_rate(std::span<const double> h, std::span<const double> errors) {
  if (h.size() != errors.size()) throw InvalidArgument("fit_rate: size mismatch");
  RateFit fit;
  bool positive = true;
  for (double e : errors) positive = positive && e > 0.0 && std::isfinite(e);
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    if (errors[i] > 0.0 && errors[i + 1] > 0.0 && h[i] != h[i + 1])
      fit.pairwise.emplace_back(std::log(errors[i] / errors[i + 1]) / std::log(h[i] / h[i + 1]));
    else
      fit.pairwise.emplace_back(std::nullopt);
  }
  if (!positive || h.size() < 2) return fit;

  const double n = static_cast<double>(h.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    sx += std::log(h[i]);
    sy += std::log(errors[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double dx = std::log(h[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(errors[i]) - my);
  }
  if (sxx > 0.0) fit.least_squares = sxy / sxx;
  return fit;
}

std::array<RateFit, kNumMetrics> fit_rates(std::span<const ConvergenceRecord> records) {
  std::vector<double> h;
  for (const auto& r : records) h.push_back(r.h);
  std::array<RateFit, kNumMetrics> fits;
  for (int m = 0; m < kNumMetrics; ++m) {
    std::vector<double> e;
    for (const auto& r : records) e.push_back(r.norms.metrics[m]);
    fits[m] = fit_rate(h, e);
  }
  return fits;
}

} // namespace wgm
