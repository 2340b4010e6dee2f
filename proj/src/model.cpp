#include "replab/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "replab/errors.hpp"

namespace replab {

namespace {

constexpr double kBoxSlack = 1e-12;

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void check_common(const AdjustmentCosts& costs, double beta) {
  require(std::isfinite(costs.green) && std::isfinite(costs.brown), "costs must be finite");
  require(costs.green >= 0.0, "c_g must be >= 0");
  require(costs.brown >= 0.0, "c_b must be >= 0");
  require(std::isfinite(beta), "beta must be finite");
  require(beta > 0.0, "beta must be > 0");
}

}  // namespace

ModelParams ModelParams::create(const PayoffMatrix& payoffs, const AdjustmentCosts& costs,
                                double beta) {
  ModelParams p{payoffs, costs, beta};
  check_dynamics(p);
  require(payoffs.gg > 0.0, "pi_gg must be > 0");
  require(payoffs.gb > 0.0, "pi_gb must be > 0");
  require(payoffs.bg > 0.0, "pi_bg must be > 0");
  require(payoffs.bb > 0.0, "pi_bb must be > 0");
  return p;
}

Params1D Params1D::create(double pi_g, double pi_b, const AdjustmentCosts& costs, double beta) {
  Params1D p{pi_g, pi_b, costs, beta};
  check_dynamics(p);
  require(pi_g > 0.0, "pi_g must be > 0");
  require(pi_b > 0.0, "pi_b must be > 0");
  return p;
}

void check_dynamics(const ModelParams& params) {
  const auto& m = params.payoffs;
  require(std::isfinite(m.gg) && std::isfinite(m.gb) && std::isfinite(m.bg) &&
              std::isfinite(m.bb),
          "payoffs must be finite");
  check_common(params.costs, params.beta);
}

void check_dynamics(const Params1D& params) {
  require(std::isfinite(params.pi_g) && std::isfinite(params.pi_b), "payoffs must be finite");
  check_common(params.costs, params.beta);
}

void check_adjusted(const ModelParams& params) {
  check_dynamics(params);
  require(params.costs.any_positive(), "at least one of c_g, c_b must be > 0");
}

void check_adjusted(const Params1D& params) {
  check_dynamics(params);
  require(params.costs.any_positive(), "at least one of c_g, c_b must be > 0");
}

double checked_probability(double eta, const char* what) {
  if (!(eta >= -kBoxSlack && eta <= 1.0 + kBoxSlack)) {
    throw DomainError(std::string(what) + " outside [0,1]: " + std::to_string(eta));
  }
  return std::clamp(eta, 0.0, 1.0);
}

State checked_state(const State& s) {
  return {checked_probability(s.eta1, "eta1"), checked_probability(s.eta2, "eta2")};
}

Coefficients derived_coefficients(const ModelParams& params) {
  const auto& m = params.payoffs;
  // Grouped as (dynamic risk) - (green progress) so that a is exactly zero
  // when both structural effects are absent.
  return {(m.bg - m.bb) - (m.gg - m.gb), m.bb - m.gb};
}

ExpectedProfits expected_profits(const ModelParams& params, bool own_is_green,
                                 double eta_opponent) {
  check_dynamics(params);
  const double y = checked_probability(eta_opponent, "eta_opponent");
  const auto& m = params.payoffs;
  ExpectedProfits out{m.gg * y + m.gb * (1.0 - y), m.bg * y + m.bb * (1.0 - y)};
  if (own_is_green) {
    out.brown -= params.costs.brown;
  } else {
    out.green -= params.costs.green;
  }
  return out;
}

namespace kernel {

double clamped_exp(double beta, double gap) {
  return std::exp(std::clamp(beta * gap, -kExponentLimit, kExponentLimit));
}

double adjusted_update(double eta, double gap, double beta, const AdjustmentCosts& costs) {
  if (eta <= 0.0) return 0.0;
  if (eta >= 1.0) return 1.0;
  const double rest = 1.0 - eta;
  const double stay = clamped_exp(beta, gap - costs.brown);
  const double enter = clamped_exp(beta, gap + costs.green);
  const double next = eta * (eta / (eta + rest * stay)) + rest * (eta / (eta + rest * enter));
  return std::clamp(next, 0.0, 1.0);
}

State full_step(const ModelParams& params, const Coefficients& c, const State& s) {
  return {adjusted_update(s.eta1, c.a * s.eta2 + c.b, params.beta, params.costs),
          adjusted_update(s.eta2, c.a * s.eta1 + c.b, params.beta, params.costs)};
}

double diagonal_step(const ModelParams& params, const Coefficients& c, double eta) {
  return adjusted_update(eta, c.a * eta + c.b, params.beta, params.costs);
}

double interior_root(double u, double v, double beta) {
  const double num = std::expm1(std::clamp(beta * u, -kExponentLimit, kExponentLimit));
  const double other = std::expm1(std::clamp(beta * v, -kExponentLimit, kExponentLimit));
  if (std::abs(num) >= std::abs(other)) return 1.0 / (1.0 + other / num);
  const double r = num / other;
  return r / (r + 1.0);
}

}  // namespace kernel

State step_full(const ModelParams& params, const State& s) {
  check_dynamics(params);
  return kernel::full_step(params, derived_coefficients(params), checked_state(s));
}

double step_adjusted_1d(const Params1D& p, double eta) {
  check_dynamics(p);
  return kernel::adjusted_update(checked_probability(eta), p.pi_b - p.pi_g, p.beta, p.costs);
}

double step_classic_1d(const Params1D& p, double eta) {
  check_dynamics(p);
  const double x = checked_probability(eta);
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x / (x + (1.0 - x) * kernel::clamped_exp(p.beta, p.pi_b - p.pi_g));
}

}  // namespace replab
