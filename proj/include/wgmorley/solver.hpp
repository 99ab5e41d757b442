#pragma once

#include <string>

#include <Eigen/Core>

#include "wgmorley/assembly.hpp"

namespace wgm {

enum class SolveMethod {
  Cholesky, ///< sparse LL^T with AMD ordering plus iterative refinement
  Pcg,      ///< conjugate gradients with diagonal preconditioning
};

struct SolveOptions {
  SolveMethod method = SolveMethod::Cholesky;
  double tolerance = 1e-10; ///< on |Kx - b| / |b|
  int max_iterations = 0;   ///< PCG iterations / refinement sweeps; 0 picks a default
};

struct SolveReport {
  std::string method;
  int iterations = 0; ///< 0 for a direct solve without refinement
  double relative_residual = 0.0;
  double seconds = 0.0;
};

struct SolveResult {
  Eigen::VectorXd x;
  SolveReport report;
};

/// |Kx - b| / |b|, or |Kx - b| when b = 0.
double relative_residual(const SparseMatrix& k, const Eigen::VectorXd& x, const Eigen::VectorXd& b);

/// Solves a sparse symmetric positive definite system. The reported residual
/// is recomputed from K, x and b after the solve. Throws SolverError on a
/// non-positive pivot or curvature, or when the tolerance is not reached.
SolveResult solve_spd(const SparseMatrix& k, const Eigen::VectorXd& b, const SolveOptions& options = {});
SolveResult solve_spd(const AssembledSystem& system, const SolveOptions& options = {});

} // namespace wgm
