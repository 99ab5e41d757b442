#include "wgmorley/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "wgmorley/errors.hpp"

namespace wgm {

int level_to_n(int level) {
  if (level < 1 || level > 12) throw InvalidArgument("level must lie in 1..12");
  return 4 << (level - 1);
}

SolveOutcome solve_problem(const PolyMesh& mesh, const ManufacturedProblem& problem,
                           const SolveOptions& options) {
  const CondensedSystem condensed = assemble_condensed(mesh, problem);
  SolveResult result = solve_spd(condensed.system, options);
  SolveOutcome out;
  out.solution = recover_field(mesh, condensed, result.x);
  out.report = result.report;
  out.norms = compute_errors(mesh, problem, out.solution);
  out.ndof = static_cast<int>(condensed.system.free_dofs.size());
  out.h = mesh.meshsize();
  return out;
}

WGField solve_full(const PolyMesh& mesh, const ManufacturedProblem& problem,
                   const SolveOptions& options) {
  const AssembledSystem system = assemble_full(mesh, problem);
  const SolveResult result = solve_spd(system, options);
  return field_from_full(DofMap(mesh), result.x);
}

std::vector<ConvergenceRecord> run_convergence(
    const StudyConfig& config, const ManufacturedProblem& problem,
    const std::function<void(const ConvergenceRecord&)>& on_record) {
  if (config.ns.size() != config.levels.size())
    throw InvalidArgument("run_convergence: levels and ns differ in length");
  for (std::size_t i = 1; i < config.ns.size(); ++i)
    if (config.ns[i] <= config.ns[i - 1])
      throw InvalidArgument("convergence levels must be strictly increasing");

  std::vector<ConvergenceRecord> records;
  for (std::size_t i = 0; i < config.ns.size(); ++i) {
    const PolyMesh mesh = generate_mesh(config.kind, config.ns[i], config.seed, config.jitter);
    const SolveOutcome outcome = solve_problem(mesh, problem, config.solver);
    ConvergenceRecord rec;
    rec.level = config.levels[i];
    rec.n = config.ns[i];
    rec.h = outcome.h;
    rec.ndof = outcome.ndof;
    rec.norms = outcome.norms;
    records.push_back(rec);
    if (on_record) on_record(rec);
  }
  return records;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

} // namespace

std::string csv_header() {
  std::string s = "level,h,ndof";
  for (auto name : kMetricNames) {
    s += ',';
    s += name;
  }
  return s + "\n";
}

std::string csv_row(const ConvergenceRecord& r) {
  std::string s = std::to_string(r.level) + "," + sci(r.h) + "," + std::to_string(r.ndof);
  for (double m : r.norms.metrics) s += "," + sci(m);
  return s + "\n";
}

std::string csv_rate_row(std::span<const ConvergenceRecord> records) {
  std::string s = "rate,,";
  const auto fits = fit_rates(records);
  for (const auto& fit : fits) s += "," + (fit.least_squares ? fixed4(*fit.least_squares) : "n/a");
  return s + "\n";
}

std::string render_svg(std::span<const ConvergenceRecord> records, const std::string& title) {
  constexpr double width = 640, height = 480;
  constexpr double left = 80, right = 150, top = 40, bottom = 60;
  static const char* colors[kNumMetrics] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                            "#d62728", "#9467bd", "#8c564b"};

  double hmin = INFINITY, hmax = -INFINITY, emin = INFINITY, emax = -INFINITY;
  for (const auto& r : records) {
    hmin = std::min(hmin, r.h);
    hmax = std::max(hmax, r.h);
    for (double e : r.norms.metrics)
      if (e > 0) {
        emin = std::min(emin, e);
        emax = std::max(emax, e);
      }
  }
  if (!(hmin < hmax)) {
    hmin = records.empty() ? 0.1 : records.front().h / 2;
    hmax = hmin * 4;
  }
  if (!(emin < emax)) {
    emin = 1e-12;
    emax = 1.0;
  }
  const double x0 = std::floor(std::log10(hmin)), x1 = std::ceil(std::log10(hmax));
  const double y0 = std::floor(std::log10(emin)), y1 = std::ceil(std::log10(emax));
  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double h) { return left + (std::log10(h) - x0) / (x1 - x0) * pw; };
  auto py = [&](double e) { return top + (y1 - std::log10(e)) / (y1 - y0) * ph; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << left + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
    << title << "</text>\n";
  s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double d = x0; d <= x1; d += 1) {
    const double x = left + (d - x0) / (x1 - x0) * pw;
    s << "<line x1=\"" << x << "\" y1=\"" << top + ph << "\" x2=\"" << x << "\" y2=\"" << top
      << "\" stroke=\"#ddd\"/>\n";
    s << "<text x=\"" << x << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">1e" << d
      << "</text>\n";
  }
  for (double d = y0; d <= y1; d += 1) {
    const double y = top + (y1 - d) / (y1 - y0) * ph;
    s << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + pw << "\" y2=\"" << y
      << "\" stroke=\"#ddd\"/>\n";
    s << "<text x=\"" << left - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e" << d
      << "</text>\n";
  }
  s << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 16
    << "\" text-anchor=\"middle\">mesh size h</text>\n";
  s << "<text x=\"20\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
    << top + ph / 2 << ")\">error</text>\n";

  for (int m = 0; m < kNumMetrics; ++m) {
    s << "<polyline fill=\"none\" stroke=\"" << colors[m] << "\" stroke-width=\"2\" points=\"";
    for (const auto& r : records)
      if (r.norms.metrics[m] > 0) s << px(r.h) << "," << py(r.norms.metrics[m]) << " ";
    s << "\"/>\n";
    const double ly = top + 10 + 20 * m;
    s << "<line x1=\"" << left + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 36
      << "\" y2=\"" << ly << "\" stroke=\"" << colors[m] << "\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << left + pw + 42 << "\" y=\"" << ly + 4 << "\">" << kMetricNames[m]
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string format_solution(const PolyMesh& mesh, const WGField& field) {
  using nlohmann::json;
  json doc;
  doc["basis"] = "P2 scaled monomials 1, xi, eta, xi^2, xi*eta, eta^2 with "
                 "xi = (x - xc)/h_T, eta = (y - yc)/h_T";
  doc["layout"] = {{"interior_offset", "6 * cell"},
                   {"vertex_dof", "6 * num_cells + vertex"},
                   {"edge_dof", "6 * num_cells + num_vertices + edge"}};
  doc["num_cells"] = mesh.num_cells();
  doc["num_vertices"] = mesh.num_vertices();
  doc["num_edges"] = mesh.num_edges();
  json cells = json::array();
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const auto& g = mesh.geometry(c);
    const auto& v = field.interior[c];
    cells.push_back({{"centroid", {g.centroid.x(), g.centroid.y()}},
                     {"diameter", g.diameter},
                     {"u0", {v(0), v(1), v(2), v(3), v(4), v(5)}}});
  }
  doc["cells"] = std::move(cells);
  doc["u_b"] = field.vertex_values;
  json edges = json::array();
  for (const Edge& e : mesh.edges()) edges.push_back({e.tail, e.head});
  doc["edges"] = std::move(edges);
  doc["u_n"] = field.edge_normals;
  return doc.dump() + "\n";
}

} // namespace wgm
