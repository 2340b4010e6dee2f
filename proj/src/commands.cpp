#include "replab/commands.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <ostream>

#include "replab/basins.hpp"
#include "replab/equilibria.hpp"
#include "replab/errors.hpp"
#include "replab/io.hpp"
#include "replab/policy.hpp"
#include "replab/stability.hpp"

namespace replab {

namespace {

constexpr std::array<std::string_view, 8> kCommands = {
    "step", "simulate", "equilibria", "classify", "basins", "staircase", "policy", "sweep"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvCell eigen_cell(std::complex<double> z) {
  if (z.imag() == 0.0) return z.real();
  return num(z.real()) + (z.imag() < 0.0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

struct Context {
  const RunConfig& config;
  const DispatchOptions& opts;
  std::ostream& out;
  std::ostream& err;

  std::string path(const char* name) const {
    std::filesystem::path dir(opts.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + opts.out_dir + "': " + ec.message());
    return (dir / name).string();
  }

  void wrote(const std::string& file) const { out << "wrote " << file << '\n'; }
};

void run_step(const Context& ctx) {
  const RunConfig& c = ctx.config;
  if (c.has_model()) {
    const State next = step_full(c.model(), {c.eta1, c.eta2});
    ctx.out << num(next.eta1) << ',' << num(next.eta2) << '\n';
    return;
  }
  const Params1D p = c.model_1d();
  ctx.out << num(c.map == MapKind::Classic ? step_classic_1d(p, c.s0) : step_adjusted_1d(p, c.s0))
          << '\n';
}

void run_simulate(const Context& ctx) {
  const RunConfig& c = ctx.config;
  const Simulation sim = simulate(c.model(), {c.eta1, c.eta2}, c.max_iter, c.eps, true);
  CsvTable table{{"t", "eta1", "eta2"}, {}};
  for (std::size_t t = 0; t < sim.trajectory.size(); ++t) {
    table.rows.push_back({static_cast<std::int64_t>(t), sim.trajectory[t].eta1,
                          sim.trajectory[t].eta2});
  }
  const std::string file = ctx.path("trajectory.csv");
  write_csv(table, file);
  ctx.out << "outcome = " << to_string(sim.outcome.code) << '\n'
          << "iterations = " << sim.outcome.iterations_used << '\n';
  ctx.wrote(file);
}

EdgeId edge_id(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::EdgeEta0: return EdgeId::ZeroEdge;
    case EquilibriumKind::EdgeEta0Sym: return EdgeId::ZeroEdgeSym;
    case EquilibriumKind::EdgeEta1: return EdgeId::OneEdge;
    default: return EdgeId::OneEdgeSym;
  }
}

void run_equilibria(const Context& ctx) {
  const RunConfig& c = ctx.config;
  const ModelParams params = c.model();
  RootScan scan;
  scan.grid_cells = c.scan_resolution;
  scan.threads = ctx.opts.threads;

  CsvTable table{{"kind", "eta1", "eta2", "lambda1", "lambda2", "class"}, {}};
  auto add = [&](const Equilibrium& e, const StabilityReport& r) {
    table.rows.push_back({std::string(to_string(e.kind)), e.location.eta1, e.location.eta2,
                          eigen_cell(r.eigenvalues[0]), eigen_cell(r.eigenvalues[1]),
                          std::string(to_string(r.classification))});
  };

  const VertexStability v = vertex_eigenvalues(params);
  const auto vertices = vertex_equilibria();
  const StabilityReport* reports[] = {&v.v00, &v.v10, &v.v11, &v.v01};
  for (std::size_t k = 0; k < vertices.size(); ++k) add(vertices[k], *reports[k]);

  if (params.costs.any_positive()) {
    for (const Equilibrium& e : edge_equilibria(params)) {
      add(e, edge_eigenvalues(params, edge_id(e.kind)));
    }
  }

  const InnerSearch inner = find_inner_equilibria(params, scan);
  const double a = derived_coefficients(params).a;
  for (const Equilibrium& e : inner.equilibria) {
    if (e.kind == EquilibriumKind::DiagonalInner && a != 0.0) {
      add(e, diagonal_eigenvalues(params, e.location.eta1).report);
    } else {
      add(e, eigen_report(jacobian(params, e.location)));
    }
  }
  if (inner.dropped_candidates > 0) {
    ctx.err << "warning: " << inner.dropped_candidates
            << " scan cells did not converge and were dropped\n";
  }

  CsvTable cycles{{"eta_a", "eta_b", "residual"}, {}};
  for (const Cycle2& cyc : find_period2_diagonal(params, scan)) {
    cycles.rows.push_back({cyc.point_a, cyc.point_b, cyc.residual});
  }

  const std::string eq_file = ctx.path("equilibria.csv");
  const std::string cycle_file = ctx.path("cycles.csv");
  write_csv(table, eq_file);
  write_csv(cycles, cycle_file);
  ctx.out << render_csv(table);
  ctx.out << "period-2 cycles: " << cycles.rows.size() << '\n';
  ctx.wrote(eq_file);
  ctx.wrote(cycle_file);
}

void run_classify(const Context& ctx) {
  const ModelParams params = ctx.config.model();
  const ScenarioId id = classify_scenario(params);
  const Discriminants d = scenario_discriminants(params);
  ctx.out << to_string(id) << '\n'
          << "d1 = " << num(d.d1) << '\n'
          << "d2 = " << num(d.d2) << '\n'
          << "d3 = " << num(d.d3) << '\n'
          << "d4 = " << num(d.d4) << '\n';
}

void run_basins(const Context& ctx) {
  const RunConfig& c = ctx.config;
  const BasinRaster raster =
      compute_basins(c.model(), {c.resolution, c.eps, c.max_iter, ctx.opts.threads});
  const auto areas = basin_areas(raster);

  CsvTable table{{"outcome", "fraction"}, {}};
  for (OutcomeCode code : {OutcomeCode::ToGG, OutcomeCode::ToBB, OutcomeCode::ToGB,
                           OutcomeCode::ToBG, OutcomeCode::NonConvergent}) {
    table.rows.push_back({std::string(to_string(code)), area_of(areas, code)});
  }
  const std::string ppm = ctx.path("basins.ppm");
  const std::string csv = ctx.path("basin_areas.csv");
  write_basin_ppm(raster, ppm);
  write_csv(table, csv);
  ctx.out << render_csv(table);
  ctx.wrote(ppm);
  ctx.wrote(csv);
}

void run_staircase(const Context& ctx) {
  const RunConfig& c = ctx.config;
  const auto steps = staircase(c.model_1d(), c.map, c.s0, c.n_steps);
  CsvTable table{{"t", "eta", "eta_next"}, {}};
  for (std::size_t t = 0; t < steps.size(); ++t) {
    table.rows.push_back({static_cast<std::int64_t>(t), steps[t].eta, steps[t].next});
  }
  const std::string file = ctx.path("staircase.csv");
  write_csv(table, file);
  ctx.wrote(file);
}

std::string set_text(const ScenarioSet& set) {
  std::string s;
  for (ScenarioId id : set) {
    if (!s.empty()) s += ' ';
    s += to_string(id);
  }
  return s;
}

void run_policy(const Context& ctx) {
  const RunConfig& c = ctx.config;
  bool any = false;
  if (c.has_model_1d()) {
    const TaxThresholds t = tax_thresholds_1d(c.model_1d());
    ctx.out << "tau1 = " << num(t.tau1) << '\n'
            << "tau2 = " << num(t.tau2) << '\n'
            << "tau3 = " << num(t.tau3) << '\n';
    any = true;
  }
  if (c.has_model()) {
    const ModelParams params = c.model();
    const ModelParams taxed = apply_brown_tax(params, c.tau, c.tax_mode);
    const TaxSearch s9 = find_s9_tax(params);
    ctx.out << "scenario = " << to_string(classify_scenario(params)) << '\n'
            << "feasible = " << set_text(feasible_scenarios(StructureFlags::from(params.payoffs)))
            << '\n'
            << "ordering = " << set_text(ordering_scenarios(params)) << '\n'
            << "taxed_scenario = " << to_string(classify_scenario(taxed)) << '\n'
            << "s9_tax = " << num(s9.tau) << '\n'
            << "s9_tax_bound = " << num(s9_tax_bound(params)) << '\n';
    any = true;
  }
  if (c.pi_hat_b) {
    if (!c.pi_gb || !c.c_g) throw ValidationError("pi_hat_b needs pi_gb and c_g");
    ctx.out << "required_transition_risk = "
            << num(required_transition_risk(*c.pi_hat_b, *c.pi_gb, *c.c_g)) << '\n';
    any = true;
  }
  if (!any) throw ValidationError("policy needs 1D model keys, 2D model keys or pi_hat_b");
}

void run_sweep(const Context& ctx) {
  const RunConfig& c = ctx.config;
  if (!c.sweep_key) throw ValidationError("sweep needs sweep_key");
  if (*c.sweep_key == "pi_g" || *c.sweep_key == "pi_b") {
    throw ValidationError("sweep_key must be a 2D model key");
  }
  CsvTable table{{*c.sweep_key, "scenario", "d1", "d2", "d3", "d4"}, {}};
  for (int k = 0; k < c.sweep_steps; ++k) {
    const double t = c.sweep_steps == 1 ? 0.0 : static_cast<double>(k) / (c.sweep_steps - 1);
    const double value = c.sweep_from + t * (c.sweep_to - c.sweep_from);
    RunConfig point = c;
    set_model_key(point, *c.sweep_key, value);
    const ModelParams params = point.model();
    const Discriminants d = scenario_discriminants(params);
    table.rows.push_back(
        {value, std::string(to_string(classify_scenario(params))), d.d1, d.d2, d.d3, d.d4});
  }
  const std::string file = ctx.path("sweep.csv");
  write_csv(table, file);
  ctx.out << render_csv(table);
  ctx.wrote(file);
}

}  // namespace

std::span<const std::string_view> command_names() { return kCommands; }

std::string usage() {
  std::string s = "usage: replicator-lab <command> --config <path> [--out <dir>]\ncommands:";
  for (std::string_view name : kCommands) {
    s += ' ';
    s += name;
  }
  s += '\n';
  return s;
}

int dispatch(std::string_view command, const RunConfig& config, const DispatchOptions& opts,
             std::ostream& out, std::ostream& err) {
  const Context ctx{config, opts, out, err};
  try {
    if (command == "step") {
      run_step(ctx);
    } else if (command == "simulate") {
      run_simulate(ctx);
    } else if (command == "equilibria") {
      run_equilibria(ctx);
    } else if (command == "classify") {
      run_classify(ctx);
    } else if (command == "basins") {
      run_basins(ctx);
    } else if (command == "staircase") {
      run_staircase(ctx);
    } else if (command == "policy") {
      run_policy(ctx);
    } else if (command == "sweep") {
      run_sweep(ctx);
    } else {
      err << "unknown command '" << command << "'\n" << usage();
      return kExitValidation;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace replab
