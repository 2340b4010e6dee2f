#pragma once

// Generalized exponential replicator dynamics with adjustment costs.
//
// Two firms each hold a probability eta of producing green. A firm that
// switches technology pays a one-off adjustment cost (c_g to go green,
// c_b to go brown), which lowers the expected profit of the technology it
// does not currently hold. The full model is a 2D map on the unit box; with
// opponent-independent payoffs it decouples into a 1D "adjusted" map, and
// with zero costs that reduces to the classical exponential replicator.

#include <utility>

namespace replab {

struct PayoffMatrix {
  double gg = 0.0;  ///< green firm, green opponent
  double gb = 0.0;  ///< green firm, brown opponent
  double bg = 0.0;  ///< brown firm, green opponent
  double bb = 0.0;  ///< brown firm, brown opponent

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;
};

struct AdjustmentCosts {
  double green = 0.0;  ///< c_g, paid when switching brown -> green
  double brown = 0.0;  ///< c_b, paid when switching green -> brown

  bool any_positive() const noexcept { return green > 0.0 || brown > 0.0; }

  friend bool operator==(const AdjustmentCosts&, const AdjustmentCosts&) = default;
};

/// Interaction coefficients of the rewritten 2D map. The exponent gap seen
/// by a firm whose opponent plays green with probability y is a*y + b.
struct Coefficients {
  double a = 0.0;
  double b = 0.0;
};

struct ModelParams {
  PayoffMatrix payoffs;
  AdjustmentCosts costs;
  double beta = 1.0;  ///< intensity of choice

  /// Validating factory: all four payoffs > 0, costs >= 0, beta > 0.
  static ModelParams create(const PayoffMatrix& payoffs, const AdjustmentCosts& costs,
                            double beta);

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Parameters of the decoupled one-dimensional maps.
struct Params1D {
  double pi_g = 0.0;
  double pi_b = 0.0;
  AdjustmentCosts costs;
  double beta = 1.0;

  static Params1D create(double pi_g, double pi_b, const AdjustmentCosts& costs, double beta);

  friend bool operator==(const Params1D&, const Params1D&) = default;
};

/// Point of the unit box: green-adoption probabilities of firm 1 and firm 2.
struct State {
  double eta1 = 0.0;
  double eta2 = 0.0;

  State swapped() const noexcept { return {eta2, eta1}; }

  friend bool operator==(const State&, const State&) = default;
};

/// Throws ValidationError unless payoffs and costs are finite, costs >= 0 and
/// beta > 0. Payoff signs are not checked here (see ModelParams::create).
void check_dynamics(const ModelParams& params);
void check_dynamics(const Params1D& params);

/// Additionally requires at least one strictly positive adjustment cost, the
/// standing assumption of the adjusted-model analytics.
void check_adjusted(const ModelParams& params);
void check_adjusted(const Params1D& params);

/// Snaps values within 1e-12 of [0,1] onto the boundary; throws DomainError otherwise.
double checked_probability(double eta, const char* what = "probability");
State checked_state(const State& s);

Coefficients derived_coefficients(const ModelParams& params);

/// Expected profit of playing green / brown next period for a firm whose
/// current technology is green (own_is_green) or brown. The technology not
/// currently held is charged its adjustment cost.
struct ExpectedProfits {
  double green = 0.0;
  double brown = 0.0;
};
ExpectedProfits expected_profits(const ModelParams& params, bool own_is_green,
                                 double eta_opponent);

State step_full(const ModelParams& params, const State& s);
double step_adjusted_1d(const Params1D& p, double eta);
double step_classic_1d(const Params1D& p, double eta);

namespace kernel {

inline constexpr double kExponentLimit = 700.0;

/// exp(beta * gap) with the argument clamped to [-700, 700].
double clamped_exp(double beta, double gap);

/// One adjusted replicator update of a single firm:
///   eta * eta / (eta + (1-eta) e^{beta(gap - c_b)})
///     + (1-eta) * eta / (eta + (1-eta) e^{beta(gap + c_g)}).
/// No validation; eta must already lie in [0,1].
double adjusted_update(double eta, double gap, double beta, const AdjustmentCosts& costs);

/// Unchecked full-map step. Both coordinates use the same code path so the
/// result is exactly swap-equivariant.
State full_step(const ModelParams& params, const Coefficients& c, const State& s);

/// Unchecked diagonal restriction g(eta) = full_step((eta, eta)).eta1.
double diagonal_step(const ModelParams& params, const Coefficients& c, double eta);

/// Root in (0,1) of the linear equilibrium equation shared by the 1D inner
/// equilibrium and the edge equilibria:
///   expm1(beta u) / (expm1(beta u) + expm1(beta v)).
/// Computed in ratio form so it neither cancels for small beta nor overflows
/// for large beta.
double interior_root(double u, double v, double beta);

}  // namespace kernel

}  // namespace replab
