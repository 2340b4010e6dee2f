#pragma once

#include <set>

#include "replab/model.hpp"
#include "replab/stability.hpp"

namespace replab {

/// Minimum brown taxes in the 1D adjusted model.
struct TaxThresholds {
  double tau1 = 0.0;  ///< max(pi_b - pi_g + c_g, 0): green from everywhere but 0
  double tau2 = 0.0;  ///< max(pi_b - pi_g - c_b, 0)
  double tau3 = 0.0;  ///< max(pi_b - pi_g - (c_b - c_g) / 2, 0)
};

TaxThresholds tax_thresholds_1d(const Params1D& p);

/// Transition-risk level that keeps green profitable whatever the share of
/// brown firms: max(pi_hat_b - pi_gb + c_g, 0). pi_hat_b is the brown profit
/// without transition risk and is not part of the payoff matrix.
double required_transition_risk(double pi_hat_b, double pi_gb, double c_g);

struct StructureFlags {
  bool green_progress = false;  ///< pi_gg > pi_gb
  bool dynamic_risk = false;    ///< pi_bg > pi_bb

  static StructureFlags from(const PayoffMatrix& m) { return {m.gg > m.gb, m.bg > m.bb}; }

  friend bool operator==(const StructureFlags&, const StructureFlags&) = default;
};

using ScenarioSet = std::set<ScenarioId>;

ScenarioSet all_scenarios();

/// Scenarios that can occur given the two structural properties. A false
/// flag stands for equality (pi_gg == pi_gb, pi_bg == pi_bb).
ScenarioSet feasible_scenarios(StructureFlags flags);

/// Scenarios compatible with the payoff ordering and adjustment costs.
/// Payoffs outside the covered orderings get all nine.
ScenarioSet ordering_scenarios(const ModelParams& params);

enum class TaxMode { BothStates, BBOnly };

/// Subtracts tau from pi_bb (BBOnly) or from pi_bb and pi_bg (BothStates).
/// Taxed brown payoffs may drop to zero or below; only differences enter the
/// dynamics. Throws InvalidTaxError for negative or non-finite tau.
ModelParams apply_brown_tax(const ModelParams& params, double tau, TaxMode mode);

/// Closed-form infimum of the BothStates taxes that yield Scenario 9:
/// max(d1, d3, -d2, -d4, 0) evaluated at tau = 0.
double s9_tax_bound(const ModelParams& params);

struct TaxSearch {
  double tau = 0.0;
  ModelParams taxed;
};

/// Smallest BothStates tax (to bisection precision) whose taxed parameters
/// classify as Scenario 9. Every discriminant moves toward the Scenario 9
/// pattern as tau grows, so the predicate is monotone.
TaxSearch find_s9_tax(const ModelParams& params, double tolerance = 1e-9);

}  // namespace replab
