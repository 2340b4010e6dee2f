#include "replab/stability.hpp"

#include <cmath>
#include <string>

#include "replab/equilibria.hpp"
#include "replab/errors.hpp"

namespace replab {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Attractor: return "attractor";
    case Classification::Saddle: return "saddle";
    case Classification::Repellor: return "repellor";
    case Classification::NonHyperbolic: return "non-hyperbolic";
  }
  return "?";
}

std::string_view to_string(BifurcationDirection d) {
  return d == BifurcationDirection::AlongDiagonal ? "along-diagonal" : "transverse-to-diagonal";
}

std::string_view to_string(ScenarioId id) {
  static constexpr std::string_view names[] = {"S1", "S2", "S3", "S4", "S5",
                                               "S6", "S7", "S8", "S9", "Degenerate"};
  return names[static_cast<int>(id)];
}

int scenario_number(ScenarioId id) {
  return id == ScenarioId::Degenerate ? 0 : static_cast<int>(id) + 1;
}

ScenarioId scenario_from_number(int n) {
  if (n < 1 || n > 9) return ScenarioId::Degenerate;
  return static_cast<ScenarioId>(n - 1);
}

Classification classify_magnitudes(double m1, double m2, double tol) {
  if (std::abs(m1 - 1.0) <= tol || std::abs(m2 - 1.0) <= tol) {
    return Classification::NonHyperbolic;
  }
  const int inside = (m1 < 1.0) + (m2 < 1.0);
  if (inside == 2) return Classification::Attractor;
  if (inside == 0) return Classification::Repellor;
  return Classification::Saddle;
}

StabilityReport make_report(double lambda1, double lambda2, double tol) {
  StabilityReport r;
  r.eigenvalues = {std::complex<double>(lambda1), std::complex<double>(lambda2)};
  r.magnitudes = {std::abs(lambda1), std::abs(lambda2)};
  r.classification = classify_magnitudes(r.magnitudes[0], r.magnitudes[1], tol);
  return r;
}

StabilityReport eigen_report(const Matrix2& m, double tol) {
  const double half_trace = 0.5 * (m.m11 + m.m22);
  const double det = m.m11 * m.m22 - m.m12 * m.m21;
  const double disc = half_trace * half_trace - det;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    return make_report(half_trace + root, half_trace - root, tol);
  }
  StabilityReport r;
  const double im = std::sqrt(-disc);
  r.eigenvalues = {std::complex<double>(half_trace, im), std::complex<double>(half_trace, -im)};
  r.magnitudes = {std::abs(r.eigenvalues[0]), std::abs(r.eigenvalues[1])};
  r.classification = classify_magnitudes(r.magnitudes[0], r.magnitudes[1], tol);
  return r;
}

namespace kernel {

namespace {

// Partial derivatives of one coordinate of the map, f(x, y), with x the
// firm's own probability and y the opponent's.
struct Partials {
  double own = 0.0;
  double opponent = 0.0;
};

Partials coordinate_partials(const ModelParams& params, const Coefficients& c, double x,
                             double y) {
  const double beta = params.beta;
  const double gap = c.a * y + c.b;
  const double stay = clamped_exp(beta, gap - params.costs.brown);
  const double enter = clamped_exp(beta, gap + params.costs.green);
  const double rest = 1.0 - x;
  const double d_stay = x + rest * stay;
  const double d_enter = x + rest * enter;

  Partials p;
  p.own = (x * x + x * (2.0 - x) * stay) / d_stay / d_stay +
          (rest * rest * enter - x * x) / d_enter / d_enter;
  p.opponent = -beta * c.a *
               (x * x * rest * stay / d_stay / d_stay + x * rest * rest * enter / d_enter / d_enter);
  return p;
}

}  // namespace

Matrix2 jacobian(const ModelParams& params, const Coefficients& c, const State& s) {
  const Partials first = coordinate_partials(params, c, s.eta1, s.eta2);
  const Partials second = coordinate_partials(params, c, s.eta2, s.eta1);
  return {first.own, first.opponent, second.opponent, second.own};
}

}  // namespace kernel

Matrix2 jacobian(const ModelParams& params, const State& s) {
  check_dynamics(params);
  return kernel::jacobian(params, derived_coefficients(params), checked_state(s));
}

VertexStability vertex_eigenvalues(const ModelParams& params) {
  check_dynamics(params);
  const auto [a, b] = derived_coefficients(params);
  const double beta = params.beta;
  const double cg = params.costs.green;
  const double cb = params.costs.brown;
  using kernel::clamped_exp;

  const double origin = clamped_exp(beta, -(b + cg));
  const double green = clamped_exp(beta, a + b - cb);
  const double along_first = clamped_exp(beta, b - cb);
  const double along_second = clamped_exp(beta, -(a + b + cg));

  return {make_report(origin, origin), make_report(along_first, along_second),
          make_report(green, green), make_report(along_second, along_first)};
}

StabilityReport edge_eigenvalues(const ModelParams& params, EdgeId which) {
  check_adjusted(params);
  const Coefficients c = derived_coefficients(params);
  const double beta = params.beta;
  const bool zero_edge = which == EdgeId::ZeroEdge || which == EdgeId::ZeroEdgeSym;

  if (zero_edge ? !eta_star_exists(params) : !eta_plus_exists(params)) {
    throw NotAnEquilibriumError(zero_edge ? "edge equilibrium (0, eta*) does not exist"
                                          : "edge equilibrium (1, eta+) does not exist");
  }

  double transverse = 0.0;
  double along = 0.0;
  if (zero_edge) {
    const double e = eta_star(params);
    transverse = kernel::clamped_exp(beta, -(c.a * e + c.b + params.costs.green));
    along = kernel::jacobian(params, c, {e, 0.0}).m11;
  } else {
    const double e = eta_plus(params);
    transverse = kernel::clamped_exp(beta, c.a * e + c.b - params.costs.brown);
    along = kernel::jacobian(params, c, {e, 1.0}).m11;
  }
  return make_report(transverse, along);
}

DiagonalStability diagonal_eigenvalues(const ModelParams& params, double eta_bar) {
  check_dynamics(params);
  const double x = checked_probability(eta_bar, "eta_bar");
  const double residual = fixed_point_residual(params, {x, x});
  if (residual > 1e-8) {
    throw NotAnEquilibriumError("(" + std::to_string(x) + ", " + std::to_string(x) +
                                ") is not a diagonal equilibrium, residual " +
                                std::to_string(residual));
  }
  const auto [a, b] = derived_coefficients(params);
  if (a == 0.0) {
    throw UndefinedDirectionError("bifurcation direction is undefined for a == 0");
  }

  const double beta = params.beta;
  const double rest = 1.0 - x;
  const double stay = kernel::clamped_exp(beta, a * x + b - params.costs.brown);
  const double enter = kernel::clamped_exp(beta, a * x + b + params.costs.green);
  const double d_stay = x + rest * stay;
  const double d_enter = x + rest * enter;
  const double coupling = beta * a * x;

  auto eigenvalue = [&](double sign) {
    return (x * x + x * ((2.0 - x) + sign * coupling * rest) * stay) / (d_stay * d_stay) +
           ((1.0 + sign * coupling) * rest * rest * enter - x * x) / (d_enter * d_enter);
  };

  DiagonalStability out;
  out.report = make_report(eigenvalue(-1.0), eigenvalue(+1.0));
  out.direction = a > 0.0 ? BifurcationDirection::TransverseToDiagonal
                          : BifurcationDirection::AlongDiagonal;
  return out;
}

Discriminants scenario_discriminants(const ModelParams& params) {
  const auto& m = params.payoffs;
  const double cg = params.costs.green;
  const double cb = params.costs.brown;
  return {m.bb - (m.gb - cg), m.gg - (m.bg - cb), m.bg - (m.gg - cg), m.gb - (m.bb - cb)};
}

ScenarioId classify_scenario(const ModelParams& params, double tolerance) {
  check_dynamics(params);
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be > 0");
  const Discriminants d = scenario_discriminants(params);
  for (double v : {d.d1, d.d2, d.d3, d.d4}) {
    if (std::abs(v) < tolerance) return ScenarioId::Degenerate;
  }

  // Sign pattern as bits: d1 d2 d3 d4, set when positive.
  const int pattern = (d.d1 > 0) << 3 | (d.d2 > 0) << 2 | (d.d3 > 0) << 1 | (d.d4 > 0);
  switch (pattern) {
    case 0b1111: return ScenarioId::S1;
    case 0b1110: return ScenarioId::S2;
    case 0b1100: return ScenarioId::S3;
    case 0b1011: return ScenarioId::S4;
    case 0b1010: return ScenarioId::S5;
    case 0b1101: return ScenarioId::S6;
    case 0b0111: return ScenarioId::S7;
    case 0b0011: return ScenarioId::S8;
    case 0b0101: return ScenarioId::S9;
    default: break;
  }
  throw InternalError("impossible discriminant sign pattern " + std::to_string(pattern) +
                      " (requires a negative adjustment cost)");
}

}  // namespace replab
