#include "wgmorley/solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <Eigen/OrderingMethods>
#include <Eigen/SparseCholesky>

#include "wgmorley/errors.hpp"

namespace wgm {

namespace {

using Clock = std::chrono::steady_clock;

std::string format_residual(double r) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << r;
  return s.str();
}

SolveResult solve_cholesky(const SparseMatrix& k, const Eigen::VectorXd& b, const SolveOptions& opt) {
  const Eigen::SparseMatrix<double> kc = k; // column-major copy for the factorization
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Lower, Eigen::AMDOrdering<int>> llt;
  llt.compute(kc);
  if (llt.info() != Eigen::Success)
    throw SolverError("sparse Cholesky broke down: matrix is not positive definite "
                      "(non-positive pivot)",
                      std::nan(""));

  SolveResult out;
  out.report.method = "cholesky";
  out.x = llt.solve(b);
  double res = relative_residual(k, out.x, b);
  const int sweeps = opt.max_iterations > 0 ? opt.max_iterations : 3;
  for (int it = 0; it < sweeps && res > opt.tolerance; ++it) {
    out.x += llt.solve(b - k * out.x);
    res = relative_residual(k, out.x, b);
    out.report.iterations = it + 1;
  }
  if (!(res <= opt.tolerance))
    throw SolverError("sparse Cholesky: residual " + format_residual(res) + " above tolerance " +
                          format_residual(opt.tolerance),
                      res);
  return out;
}

SolveResult solve_pcg(const SparseMatrix& k, const Eigen::VectorXd& b, const SolveOptions& opt) {
  const Eigen::Index n = b.size();
  const Eigen::VectorXd diag = k.diagonal();
  for (Eigen::Index i = 0; i < n; ++i)
    if (!(diag(i) > 0.0))
      throw SolverError("PCG: non-positive diagonal entry at row " + std::to_string(i), std::nan(""));
  const Eigen::VectorXd inv_diag = diag.cwiseInverse();

  const double bnorm = b.norm();
  const double scale = bnorm > 0.0 ? bnorm : 1.0;
  const int max_it = opt.max_iterations > 0 ? opt.max_iterations : static_cast<int>(10 * n + 100);

  SolveResult out;
  out.report.method = "pcg-jacobi";
  out.x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd r = b;
  Eigen::VectorXd z = inv_diag.cwiseProduct(r);
  Eigen::VectorXd p = z;
  double rz = r.dot(z);
  int it = 0;
  while (r.norm() / scale > opt.tolerance) {
    if (it == max_it)
      throw SolverError("PCG did not converge in " + std::to_string(max_it) +
                            " iterations; residual " + format_residual(r.norm() / scale),
                        r.norm() / scale);
    const Eigen::VectorXd kp = k * p;
    const double curvature = p.dot(kp);
    if (!(curvature > 0.0))
      throw SolverError("PCG: non-positive curvature at iteration " + std::to_string(it),
                        r.norm() / scale);
    const double alpha = rz / curvature;
    out.x += alpha * p;
    r -= alpha * kp;
    z = inv_diag.cwiseProduct(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
    ++it;
  }
  out.report.iterations = it;
  return out;
}

} // namespace

double relative_residual(const SparseMatrix& k, const Eigen::VectorXd& x, const Eigen::VectorXd& b) {
  const double r = (k * x - b).norm();
  const double bn = b.norm();
  return bn > 0.0 ? r / bn : r;
}

SolveResult solve_spd(const SparseMatrix& k, const Eigen::VectorXd& b, const SolveOptions& options) {
  if (k.rows() != k.cols() || k.rows() != b.size())
    throw InvalidArgument("solve_spd: dimension mismatch");
  if (!b.allFinite()) throw InvalidArgument("solve_spd: right-hand side is not finite");

  const auto start = Clock::now();
  SolveResult out = options.method == SolveMethod::Cholesky ? solve_cholesky(k, b, options)
                                                            : solve_pcg(k, b, options);
  out.report.relative_residual = relative_residual(k, out.x, b);
  if (!(out.report.relative_residual <= options.tolerance))
    throw SolverError("solution residual " + format_residual(out.report.relative_residual) +
                          " above tolerance",
                      out.report.relative_residual);
  out.report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

SolveResult solve_spd(const AssembledSystem& system, const SolveOptions& options) {
  return solve_spd(system.matrix, system.rhs, options);
}

} // namespace wgm
