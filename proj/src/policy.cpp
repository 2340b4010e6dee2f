#include "replab/policy.hpp"

#include <algorithm>
#include <cmath>

#include "replab/errors.hpp"

namespace replab {

TaxThresholds tax_thresholds_1d(const Params1D& p) {
  check_dynamics(p);
  const double gap = p.pi_b - p.pi_g;
  return {std::max(gap + p.costs.green, 0.0), std::max(gap - p.costs.brown, 0.0),
          std::max(gap - 0.5 * (p.costs.brown - p.costs.green), 0.0)};
}

double required_transition_risk(double pi_hat_b, double pi_gb, double c_g) {
  if (!(pi_hat_b > 0.0) || !std::isfinite(pi_hat_b)) throw ValidationError("pi_hat_b must be > 0");
  if (!(pi_gb > 0.0) || !std::isfinite(pi_gb)) throw ValidationError("pi_gb must be > 0");
  if (!(c_g >= 0.0) || !std::isfinite(c_g)) throw ValidationError("c_g must be >= 0");
  return std::max(pi_hat_b - pi_gb + c_g, 0.0);
}

ScenarioSet all_scenarios() {
  ScenarioSet all;
  for (int n = 1; n <= 9; ++n) all.insert(scenario_from_number(n));
  return all;
}

namespace {

ScenarioSet numbers(std::initializer_list<int> ns) {
  ScenarioSet out;
  for (int n : ns) out.insert(scenario_from_number(n));
  return out;
}

ScenarioSet all_except(std::initializer_list<int> ns) {
  ScenarioSet out = all_scenarios();
  for (int n : ns) out.erase(scenario_from_number(n));
  return out;
}

}  // namespace

ScenarioSet feasible_scenarios(StructureFlags flags) {
  if (!flags.green_progress && !flags.dynamic_risk) return numbers({1, 5, 9});
  if (!flags.green_progress) return all_except({2, 3, 6});
  if (!flags.dynamic_risk) return all_except({4, 7, 8});
  return all_scenarios();
}

ScenarioSet ordering_scenarios(const ModelParams& params) {
  check_dynamics(params);
  const auto& m = params.payoffs;
  const double cg = params.costs.green;
  const double cb = params.costs.brown;

  if (m.gg > m.gb && m.gb > m.bg && m.bg > m.bb) {
    if (cg == 0.0) return numbers({9});
    const double bound = std::max(m.gb - m.bb, m.gg - m.bg);
    if (cg > bound) return numbers({1});
    if (cg == bound) return {ScenarioId::Degenerate};
    // d1 < 0 < d3 is possible only when a > 0, d3 < 0 < d1 only when a < 0.
    const double a = derived_coefficients(params).a;
    if (a < 0.0) return numbers({1, 6, 9});
    if (a > 0.0) return numbers({1, 7, 9});
    return numbers({1, 9});
  }
  if (m.bg > m.bb && m.bb > m.gg && m.gg > m.gb) {
    if (cb == 0.0) return numbers({5});
    const double bound = std::max(m.bg - m.gg, m.bb - m.gb);
    if (cb > bound) return numbers({1});
    if (cb == bound) return {ScenarioId::Degenerate};
    return numbers({1, 2, 4, 5});
  }
  if (m.gg < m.gb || m.bg < m.bb) return all_scenarios();
  return feasible_scenarios(StructureFlags::from(m));
}

ModelParams apply_brown_tax(const ModelParams& params, double tau, TaxMode mode) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw InvalidTaxError("tax must be finite and >= 0");
  ModelParams taxed = params;
  taxed.payoffs.bb -= tau;
  if (mode == TaxMode::BothStates) taxed.payoffs.bg -= tau;
  if (!std::isfinite(taxed.payoffs.bb) || !std::isfinite(taxed.payoffs.bg)) {
    throw InvalidTaxError("taxed payoffs are not finite");
  }
  return taxed;
}

double s9_tax_bound(const ModelParams& params) {
  const Discriminants d = scenario_discriminants(params);
  return std::max({d.d1, d.d3, -d.d2, -d.d4, 0.0});
}

TaxSearch find_s9_tax(const ModelParams& params, double tolerance) {
  check_dynamics(params);
  auto reaches = [&](double tau) {
    return classify_scenario(apply_brown_tax(params, tau, TaxMode::BothStates), tolerance) ==
           ScenarioId::S9;
  };
  if (reaches(0.0)) return {0.0, params};

  double lo = 0.0;
  double hi = 1.0;
  while (!reaches(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15) throw InternalError("no finite tax reaches Scenario 9");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    (reaches(mid) ? hi : lo) = mid;
  }
  return {hi, apply_brown_tax(params, hi, TaxMode::BothStates)};
}

}  // namespace replab
