#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "replab/model.hpp"

namespace replab {

enum class EquilibriumKind {
  Vertex00,
  Vertex10,
  Vertex11,
  Vertex01,
  EdgeEta0,     ///< (0, eta*) on the edge eta1 = 0
  EdgeEta0Sym,  ///< (eta*, 0)
  EdgeEta1,     ///< (1, eta+) on the edge eta1 = 1
  EdgeEta1Sym,  ///< (eta+, 1)
  DiagonalInner,
  OffDiagonalInner,
};

std::string_view to_string(EquilibriumKind kind);

struct Equilibrium {
  State location;
  EquilibriumKind kind = EquilibriumKind::Vertex00;
  double residual = 0.0;  ///< max-norm of step_full(location) - location
};

/// Period-2 orbit of the diagonal restriction, point_a < point_b.
struct Cycle2 {
  double point_a = 0.0;
  double point_b = 0.0;
  double residual = 0.0;
};

/// Scan and refinement settings for the numerical finders.
struct RootScan {
  int diagonal_points = 1024;  ///< 1D scan resolution
  int grid_cells = 256;        ///< 2D scan cells per axis
  double merge_distance = 1e-6;
  int newton_max_iter = 100;
  int threads = 0;  ///< 0 = hardware concurrency
};

/// Max-norm fixed-point defect of the full map at s.
double fixed_point_residual(const ModelParams& params, const State& s);

std::array<Equilibrium, 4> vertex_equilibria();

/// Edge-equilibrium abscissae from their closed forms. They are only
/// equilibria when the matching existence test holds.
double eta_star(const ModelParams& params);
double eta_plus(const ModelParams& params);
bool eta_star_exists(const ModelParams& params);  ///< pi_gb + c_b > pi_bb > pi_gb - c_g
bool eta_plus_exists(const ModelParams& params);  ///< pi_bg + c_g > pi_gg > pi_bg - c_b

std::vector<Equilibrium> edge_equilibria(const ModelParams& params);

/// Unique interior fixed point of the 1D adjusted map, present iff
/// pi_g + c_b > pi_b > pi_g - c_g.
std::optional<double> inner_equilibrium_1d(const Params1D& p);

struct InnerLimits {
  double beta_zero = 0.0;  ///< (pi_b - pi_g + c_g) / (c_b + c_g)
  double beta_inf = 0.0;   ///< 0 or 1
};

/// Limits of the 1D inner equilibrium as beta -> 0+ and beta -> infinity.
/// Throws ValidationError outside the existence region and KnifeEdgeError
/// when 2(pi_g - pi_b) + c_b - c_g == 0.
InnerLimits eta_in_limits(const Params1D& p);

/// Interior fixed points of the diagonal restriction, sorted ascending.
std::vector<Equilibrium> find_diagonal_equilibria(const ModelParams& params,
                                                  const RootScan& scan = {});

struct InnerSearch {
  std::vector<Equilibrium> equilibria;  ///< sorted by (eta1, eta2)
  int dropped_candidates = 0;           ///< scan cells whose Newton run did not converge
};

/// All equilibria in the open box (0,1)^2, diagonal ones included.
/// scan.grid_cells must be >= 64.
InnerSearch find_inner_equilibria(const ModelParams& params, const RootScan& scan = {});

std::vector<Cycle2> find_period2_diagonal(const ModelParams& params, const RootScan& scan = {});

}  // namespace replab
