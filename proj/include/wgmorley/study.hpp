#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wgmorley/analysis.hpp"
#include "wgmorley/assembly.hpp"
#include "wgmorley/mesh.hpp"
#include "wgmorley/problems.hpp"
#include "wgmorley/solver.hpp"

namespace wgm {

/// Level k of a convergence study uses n = 4 * 2^(k-1) subdivisions.
int level_to_n(int level);

struct SolveOutcome {
  WGField solution;
  SolveReport report;
  ErrorNorms norms;
  int ndof = 0; ///< condensed system size
  double h = 0.0;
};

/// Condensed assembly, skeleton solve, interior recovery and error norms.
SolveOutcome solve_problem(const PolyMesh& mesh, const ManufacturedProblem& problem,
                           const SolveOptions& options = {});

/// Same pipeline through the full (uncondensed) system.
WGField solve_full(const PolyMesh& mesh, const ManufacturedProblem& problem,
                   const SolveOptions& options = {});

struct StudyConfig {
  MeshKind kind = MeshKind::Triangular;
  std::vector<int> ns; ///< subdivisions per level, strictly increasing
  std::vector<int> levels; ///< level labels, same length as ns
  std::uint64_t seed = 1;
  double jitter = kDefaultJitter;
  SolveOptions solver;
};

/// Runs every level in order. `on_record` fires after each level so callers
/// can flush partial results before a later level fails.
std::vector<ConvergenceRecord> run_convergence(
    const StudyConfig& config, const ManufacturedProblem& problem,
    const std::function<void(const ConvergenceRecord&)>& on_record = {});

// Reporting

std::string csv_header();
std::string csv_row(const ConvergenceRecord& record);
/// Least-squares rates over all records, or "n/a" entries when undefined.
std::string csv_rate_row(std::span<const ConvergenceRecord> records);

/// Self-contained log-log plot: one polyline per metric.
std::string render_svg(std::span<const ConvergenceRecord> records, const std::string& title);

/// Solution document: u_0 coefficients per cell, u_b per vertex, u_n per edge.
std::string format_solution(const PolyMesh& mesh, const WGField& field);

} // namespace wgm
