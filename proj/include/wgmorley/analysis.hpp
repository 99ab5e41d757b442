#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wgmorley/assembly.hpp"
#include "wgmorley/mesh.hpp"
#include "wgmorley/problems.hpp"
#include "wgmorley/projections.hpp"

namespace wgm {

/// a(v, v) split into its two non-negative parts.
struct EnergyParts {
  double hessian = 0.0;
  double stabilizer = 0.0;

  double total() const { return hessian + stabilizer; }
};

EnergyParts energy_parts(const PolyMesh& mesh, const WGField& field);
/// |||v||| = sqrt(a(v, v)).
double energy_norm(const PolyMesh& mesh, const WGField& field);

/// (sum_T int_T v_0^2)^{1/2}; applied to e_h this is |Q_0 u - u_0|.
double l2_norm_e0(const PolyMesh& mesh, const WGField& field);
/// |u - u_0| by cell quadrature.
double l2_error_u0(const PolyMesh& mesh, const ScalarField& u, const WGField& field);

struct BoundaryNorms {
  double eb = 0.0;       ///< (sum_T h_T^2 sum_{F in dT} sum_{p in dF} e_b(p)^2)^{1/2}
  double en = 0.0;       ///< (sum_T h_T sum_{F in dT} |F| e_n(F)^2)^{1/2}
  double wgrad_eb = 0.0; ///< (sum_T h_T sum_{F in dT} |F| |grad_{w,F} e_b|^2)^{1/2}
};

BoundaryNorms boundary_norms(const PolyMesh& mesh, const WGField& field);

/// (sum_T |grad(u - u_0)|_T^2)^{1/2}.
double h1_interior_error(const PolyMesh& mesh, const std::function<Vec2(const Vec2&)>& grad_u,
                         const WGField& field);

inline constexpr int kNumMetrics = 6;
inline constexpr std::array<std::string_view, kNumMetrics> kMetricNames{
    "energy", "l2_e0", "eb", "en", "wgrad_eb", "h1_u0"};

/// The six reported norms plus the |u - u_0| diagnostic.
struct ErrorNorms {
  std::array<double, kNumMetrics> metrics{}; ///< order of kMetricNames
  double l2_u_minus_u0 = 0.0;

  double energy() const { return metrics[0]; }
};

/// Norms of e_h = Q_h u - u_h.
ErrorNorms compute_errors(const PolyMesh& mesh, const ManufacturedProblem& problem,
                          const WGField& solution);

struct ConvergenceRecord {
  int level = 0;
  int n = 0;
  double h = 0.0;
  int ndof = 0; ///< condensed system size
  ErrorNorms norms;
};

struct RateFit {
  std::optional<double> least_squares;
  std::vector<std::optional<double>> pairwise; ///< between successive entries
};

/// Least-squares slope of log(error) against log(h). Undefined when any
/// error is not strictly positive or fewer than two distinct h are given.
RateFit fit_rate(std::span<const double> h, std::span<const double> errors);

/// One fit per metric over all records.
std::array<RateFit, kNumMetrics> fit_rates(std::span<const ConvergenceRecord> records);

} // namespace wgm
