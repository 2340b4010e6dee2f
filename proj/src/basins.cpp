#include "replab/basins.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "parallel.hpp"
#include "replab/errors.hpp"

namespace replab {

std::string_view to_string(OutcomeCode code) {
  switch (code) {
    case OutcomeCode::ToGG: return "ToGG";
    case OutcomeCode::ToBB: return "ToBB";
    case OutcomeCode::ToGB: return "ToGB";
    case OutcomeCode::ToBG: return "ToBG";
    case OutcomeCode::NonConvergent: return "NonConvergent";
  }
  return "?";
}

OutcomeCode swap_code(OutcomeCode code) {
  if (code == OutcomeCode::ToGB) return OutcomeCode::ToBG;
  if (code == OutcomeCode::ToBG) return OutcomeCode::ToGB;
  return code;
}

namespace {

struct Target {
  State vertex;
  OutcomeCode code;
};

constexpr std::array<Target, 4> kTargets{{{{1.0, 1.0}, OutcomeCode::ToGG},
                                          {{0.0, 0.0}, OutcomeCode::ToBB},
                                          {{1.0, 0.0}, OutcomeCode::ToGB},
                                          {{0.0, 1.0}, OutcomeCode::ToBG}}};

OutcomeCode nearby_vertex(const State& s, double eps) {
  for (const Target& t : kTargets) {
    if (std::abs(s.eta1 - t.vertex.eta1) < eps && std::abs(s.eta2 - t.vertex.eta2) < eps) {
      return t.code;
    }
  }
  return OutcomeCode::NonConvergent;
}

void check_budget(int max_iter, double eps) {
  if (max_iter < 1) throw ValidationError("max_iter must be >= 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ValidationError("eps must be > 0");
}

Outcome run(const ModelParams& params, const Coefficients& c, State s, int max_iter, double eps,
            std::vector<State>* trajectory) {
  if (trajectory) trajectory->push_back(s);
  for (int it = 0;; ++it) {
    const OutcomeCode code = nearby_vertex(s, eps);
    if (code != OutcomeCode::NonConvergent) return {code, it};
    if (it == max_iter) return {OutcomeCode::NonConvergent, max_iter};
    s = kernel::full_step(params, c, s);
    if (trajectory) trajectory->push_back(s);
  }
}

}  // namespace

Simulation simulate(const ModelParams& params, const State& s0, int max_iter, double eps,
                    bool record_trajectory) {
  check_dynamics(params);
  check_budget(max_iter, eps);
  const State start = checked_state(s0);
  Simulation sim;
  sim.outcome = run(params, derived_coefficients(params), start, max_iter, eps,
                    record_trajectory ? &sim.trajectory : nullptr);
  return sim;
}

BasinRaster compute_basins(const ModelParams& params, const BasinSettings& settings) {
  check_dynamics(params);
  check_budget(settings.max_iter, settings.eps);
  if (settings.resolution < 16) throw ValidationError("resolution must be >= 16");

  const int res = settings.resolution;
  const Coefficients c = derived_coefficients(params);
  BasinRaster raster{res, std::vector<OutcomeCode>(static_cast<std::size_t>(res) * res), params,
                     settings.eps, settings.max_iter};

  // One task per row keeps the work units large enough to amortize scheduling.
  detail::parallel_for(
      static_cast<std::size_t>(res), settings.threads,
      [&](std::size_t i) {
        const double x = (static_cast<double>(i) + 0.5) / res;
        for (int j = 0; j < res; ++j) {
          const double y = (j + 0.5) / res;
          raster.cells[i * res + j] =
              run(params, c, {x, y}, settings.max_iter, settings.eps, nullptr).code;
        }
      },
      1);
  return raster;
}

std::map<OutcomeCode, double> basin_areas(const BasinRaster& raster) {
  std::array<std::size_t, 5> counts{};
  for (OutcomeCode code : raster.cells) ++counts[static_cast<std::size_t>(code)];
  std::map<OutcomeCode, double> areas;
  const double total = static_cast<double>(raster.cells.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] > 0) areas[static_cast<OutcomeCode>(k)] = counts[k] / total;
  }
  return areas;
}

double area_of(const std::map<OutcomeCode, double>& areas, OutcomeCode code) {
  const auto it = areas.find(code);
  return it == areas.end() ? 0.0 : it->second;
}

std::string_view to_string(MapKind kind) {
  return kind == MapKind::Classic ? "classic" : "adjusted";
}

std::vector<CobwebStep> staircase(const Params1D& p, MapKind kind, double s0, int n_steps) {
  check_dynamics(p);
  if (n_steps < 0) throw ValidationError("n_steps must be >= 0");
  double eta = checked_probability(s0, "s0");
  std::vector<CobwebStep> steps;
  steps.reserve(static_cast<std::size_t>(n_steps));
  for (int t = 0; t < n_steps; ++t) {
    const double next =
        kind == MapKind::Classic ? step_classic_1d(p, eta) : step_adjusted_1d(p, eta);
    steps.push_back({eta, next});
    eta = next;
  }
  return steps;
}

}  // namespace replab
