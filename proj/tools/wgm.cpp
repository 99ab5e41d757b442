// Command-line front end: mesh generation, single solves, convergence studies.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wgmorley/errors.hpp"
#include "wgmorley/mesh.hpp"
#include "wgmorley/problems.hpp"
#include "wgmorley/study.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitValidation = 4;

const std::vector<std::string> kKindNames{"tri", "rect", "quad-rand", "hex"};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wgm::InvalidArgument("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw wgm::InvalidArgument("failed writing '" + path + "'");
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

struct MeshArgs {
  std::string kind = "tri";
  int n = 4;
  std::uint64_t seed = 1;
  double jitter = wgm::kDefaultJitter;
};

struct SolveArgs {
  std::string mesh_file;
  std::string kind;
  int n = 0;
  std::uint64_t seed = 1;
  double jitter = wgm::kDefaultJitter;
  std::string problem = "smooth2d";
  std::string out;
  std::string report;
  double tol = 1e-10;
  bool pcg = false;
  bool quiet = false;
};

struct ConvergeArgs {
  std::string kind = "tri";
  std::vector<int> levels;
  std::vector<int> ns;
  std::uint64_t seed = 1;
  double jitter = wgm::kDefaultJitter;
  std::string problem = "smooth2d";
  std::string csv;
  std::string svg;
  double tol = 1e-10;
  bool pcg = false;
  bool quiet = false;
};

wgm::SolveOptions solver_options(double tol, bool pcg) {
  wgm::SolveOptions opt;
  opt.tolerance = tol;
  opt.method = pcg ? wgm::SolveMethod::Pcg : wgm::SolveMethod::Cholesky;
  return opt;
}

int run_mesh(const MeshArgs& a, const std::string& out) {
  const wgm::PolyMesh mesh =
      wgm::generate_mesh(wgm::parse_mesh_kind(a.kind), a.n, a.seed, a.jitter);
  const std::string text = wgm::format_mesh(mesh);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  std::cerr << "vertices " << mesh.num_vertices() << ", edges " << mesh.num_edges() << ", cells "
            << mesh.num_cells() << ", h " << sci(mesh.meshsize()) << "\n";
  return 0;
}

int run_solve(const SolveArgs& a) {
  std::vector<std::string> warnings;
  const wgm::PolyMesh mesh =
      a.mesh_file.empty()
          ? wgm::generate_mesh(wgm::parse_mesh_kind(a.kind), a.n, a.seed, a.jitter)
          : wgm::import_mesh(a.mesh_file, &warnings);
  if (!a.quiet)
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  const wgm::ManufacturedProblem problem = wgm::problem_by_name(a.problem);
  const wgm::SolveOutcome outcome = wgm::solve_problem(mesh, problem, solver_options(a.tol, a.pcg));
  if (!a.quiet)
    std::cerr << "solved " << outcome.ndof << " skeleton unknowns with " << outcome.report.method
              << ", residual " << sci(outcome.report.relative_residual) << "\n";

  if (!a.out.empty()) write_file(a.out, wgm::format_solution(mesh, outcome.solution));

  wgm::ConvergenceRecord rec;
  rec.level = 0;
  rec.n = a.n;
  rec.h = outcome.h;
  rec.ndof = outcome.ndof;
  rec.norms = outcome.norms;
  const std::string report = wgm::csv_header() + wgm::csv_row(rec);
  if (a.report.empty())
    std::cout << report;
  else
    write_file(a.report, report);
  return 0;
}

int run_converge(const ConvergeArgs& a) {
  wgm::StudyConfig config;
  config.kind = wgm::parse_mesh_kind(a.kind);
  config.seed = a.seed;
  config.jitter = a.jitter;
  config.solver = solver_options(a.tol, a.pcg);
  if (!a.ns.empty()) {
    config.ns = a.ns;
    for (std::size_t i = 0; i < a.ns.size(); ++i) config.levels.push_back(static_cast<int>(i) + 1);
  } else {
    config.levels = a.levels.empty() ? std::vector<int>{1, 2, 3} : a.levels;
    for (int level : config.levels) config.ns.push_back(wgm::level_to_n(level));
  }
  for (std::size_t i = 1; i < config.ns.size(); ++i)
    if (config.ns[i] <= config.ns[i - 1])
      throw wgm::InvalidArgument("levels must be strictly increasing");

  const wgm::ManufacturedProblem problem = wgm::problem_by_name(a.problem);

  std::ofstream csv_file;
  if (!a.csv.empty()) {
    csv_file.open(a.csv, std::ios::binary);
    if (!csv_file) throw wgm::InvalidArgument("cannot open '" + a.csv + "' for writing");
  }
  std::ostream& csv = a.csv.empty() ? std::cout : csv_file;
  csv << wgm::csv_header() << std::flush;

  std::vector<wgm::ConvergenceRecord> records;
  auto flush_partial = [&] {
    if (!a.svg.empty() && !records.empty())
      write_file(a.svg, wgm::render_svg(records, problem.name + " on " + a.kind));
  };
  try {
    wgm::run_convergence(config, problem, [&](const wgm::ConvergenceRecord& r) {
      records.push_back(r);
      csv << wgm::csv_row(r) << std::flush;
      if (!a.quiet)
        std::cerr << "level " << r.level << " (n=" << r.n << "): energy " << sci(r.norms.energy())
                  << "\n";
    });
  } catch (...) {
    flush_partial();
    throw;
  }
  csv << wgm::csv_rate_row(records) << std::flush;
  flush_partial();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak Galerkin Morley solver for the biharmonic equation"};
  app.require_subcommand(1);

  MeshArgs mesh_args;
  std::string mesh_out;
  auto* mesh_cmd = app.add_subcommand("mesh", "Generate a mesh of the unit square");
  mesh_cmd->add_option("--kind", mesh_args.kind, "tri, rect, quad-rand or hex")
      ->check(CLI::IsMember(kKindNames));
  mesh_cmd->add_option("--n", mesh_args.n, "Subdivisions per side")->required();
  mesh_cmd->add_option("--seed", mesh_args.seed, "Seed for quad-rand offsets");
  mesh_cmd->add_option("--jitter", mesh_args.jitter, "Offset amplitude for quad-rand, in [0, 0.3]");
  mesh_cmd->add_option("--out", mesh_out, "Output JSON file (default: stdout)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one problem on one mesh");
  auto* mesh_file_opt = solve_cmd->add_option("--mesh", solve_args.mesh_file, "Mesh JSON file");
  auto* kind_opt = solve_cmd->add_option("--kind", solve_args.kind, "Generated mesh kind")
                       ->check(CLI::IsMember(kKindNames));
  auto* n_opt = solve_cmd->add_option("--n", solve_args.n, "Generated mesh subdivisions");
  mesh_file_opt->excludes(kind_opt)->excludes(n_opt);
  kind_opt->needs(n_opt);
  n_opt->needs(kind_opt);
  solve_cmd->add_option("--seed", solve_args.seed, "Seed for quad-rand offsets");
  solve_cmd->add_option("--jitter", solve_args.jitter, "Offset amplitude for quad-rand");
  solve_cmd->add_option("--problem", solve_args.problem, "Manufactured problem")
      ->check(CLI::IsMember(wgm::problem_names()));
  solve_cmd->add_option("--out", solve_args.out, "Solution JSON file");
  solve_cmd->add_option("--report", solve_args.report, "Error report CSV (default: stdout)");
  solve_cmd->add_option("--tol", solve_args.tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--pcg", solve_args.pcg, "Use Jacobi-preconditioned CG");
  solve_cmd->add_flag("--quiet", solve_args.quiet, "No progress on standard error");

  ConvergeArgs conv_args;
  auto* conv_cmd = app.add_subcommand("converge", "Run a convergence study");
  conv_cmd->add_option("--kind", conv_args.kind, "Mesh kind")->check(CLI::IsMember(kKindNames));
  auto* levels_opt = conv_cmd->add_option("--levels", conv_args.levels,
                                          "Levels, n = 4 * 2^(level-1)")
                         ->delimiter(',')
                         ->check(CLI::Range(1, 12));
  auto* ns_opt = conv_cmd->add_option("--ns", conv_args.ns, "Explicit subdivisions per level")
                     ->delimiter(',')
                     ->check(CLI::PositiveNumber);
  levels_opt->excludes(ns_opt);
  conv_cmd->add_option("--seed", conv_args.seed, "Seed for quad-rand offsets");
  conv_cmd->add_option("--jitter", conv_args.jitter, "Offset amplitude for quad-rand");
  conv_cmd->add_option("--problem", conv_args.problem, "Manufactured problem")
      ->check(CLI::IsMember(wgm::problem_names()));
  conv_cmd->add_option("--csv", conv_args.csv, "Output CSV (default: stdout)");
  conv_cmd->add_option("--svg", conv_args.svg, "Log-log plot output");
  conv_cmd->add_option("--tol", conv_args.tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber);
  conv_cmd->add_flag("--pcg", conv_args.pcg, "Use Jacobi-preconditioned CG");
  conv_cmd->add_flag("--quiet", conv_args.quiet, "No progress on standard error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*mesh_cmd) return run_mesh(mesh_args, mesh_out);
    if (*solve_cmd) {
      if (solve_args.mesh_file.empty() && solve_args.kind.empty()) {
        std::cerr << "error: solve needs either --mesh or --kind with --n\n";
        return kExitUsage;
      }
      return run_solve(solve_args);
    }
    return run_converge(conv_args);
  } catch (const wgm::SolverError& e) {
    std::cerr << "solver error: " << e.what() << " (residual " << sci(e.residual()) << ")\n";
    return kExitSolver;
  } catch (const wgm::ParseError& e) {
    std::cerr << "mesh error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const wgm::ValidationError& e) {
    std::cerr << "mesh error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const wgm::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const wgm::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
