#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "replab/model.hpp"

namespace replab {

/// Long-run outcome of a trajectory. ToGB is the vertex (1,0), ToBG is (0,1).
enum class OutcomeCode : std::uint8_t { ToGG, ToBB, ToGB, ToBG, NonConvergent };

std::string_view to_string(OutcomeCode code);

/// Code of the mirrored trajectory (firms relabelled).
OutcomeCode swap_code(OutcomeCode code);

struct Outcome {
  OutcomeCode code = OutcomeCode::NonConvergent;
  int iterations_used = 0;
};

struct Simulation {
  Outcome outcome;
  std::vector<State> trajectory;  ///< s0 included; empty unless recorded
};

/// Iterates the full map until the state is within eps (max-norm) of a
/// vertex, or max_iter steps have been taken.
Simulation simulate(const ModelParams& params, const State& s0, int max_iter, double eps,
                    bool record_trajectory = false);

struct BasinRaster {
  int resolution = 0;
  std::vector<OutcomeCode> cells;  ///< index i * resolution + j
  ModelParams params_used;
  double eps = 0.0;
  int max_iter = 0;

  /// Outcome from the start ((i + 0.5) / res, (j + 0.5) / res).
  OutcomeCode at(int i, int j) const { return cells[static_cast<std::size_t>(i) * resolution + j]; }
};

struct BasinSettings {
  int resolution = 400;
  double eps = 1e-6;
  int max_iter = 5000;
  int threads = 0;  ///< 0 = hardware concurrency
};

/// Raster of outcomes at cell centres. resolution must be >= 16. The result
/// does not depend on the thread count.
BasinRaster compute_basins(const ModelParams& params, const BasinSettings& settings = {});

/// Fraction of cells per outcome; codes that never occur are omitted.
std::map<OutcomeCode, double> basin_areas(const BasinRaster& raster);

/// Fraction for one code, 0 when absent.
double area_of(const std::map<OutcomeCode, double>& areas, OutcomeCode code);

enum class MapKind { Classic, Adjusted };

std::string_view to_string(MapKind kind);

struct CobwebStep {
  double eta = 0.0;
  double next = 0.0;
};

/// Successive (eta_t, eta_{t+1}) pairs of a 1D map starting from s0.
std::vector<CobwebStep> staircase(const Params1D& p, MapKind kind, double s0, int n_steps);

}  // namespace replab
