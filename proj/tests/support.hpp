#pragma once

// Parameter sets shared by the unit and acceptance tests.

#include <array>
#include <random>

#include "replab/model.hpp"

namespace replab::testing {

inline ModelParams make(double gg, double gb, double bg, double bb, double cg, double cb,
                        double beta = 1.0) {
  return ModelParams::create({gg, gb, bg, bb}, {cg, cb}, beta);
}

/// Reference sets for scenarios 1 through 9, all with beta = 1.
inline std::array<ModelParams, 9> scenario_sets() {
  return {make(2.75, 2.3, 2.5, 2.2, 0.3, 0.4),  make(2.75, 2.2, 2.5, 2.4, 0.3, 0.1),
          make(2.75, 2.05, 2.5, 2.2, 0.2, 0.1), make(2.0, 2.3, 2.5, 2.2, 0.3, 0.4),
          make(1.0, 1.0, 2.5, 2.0, 0.5, 0.4),   make(2.75, 2.2, 2.5, 2.2, 0.2, 0.1),
          make(2.4, 2.3, 2.5, 1.9, 0.3, 0.4),   make(2.3, 2.3, 2.5, 2.1, 0.1, 0.1),
          make(2.75, 2.3, 2.5, 2.0, 0.2, 0.4)};
}

inline ModelParams scenario(int n) { return scenario_sets()[n - 1]; }

/// Sets with several interior equilibria or a diagonal 2-cycle.
inline ModelParams many_inner() { return make(2.75, 1.7, 2.5, 1.9, 0.3, 0.4, 5.0); }
inline ModelParams three_diagonal() { return make(5.3, 1.95, 5.1, 1.0, 1.2, 0.01, 4.0); }
inline ModelParams diagonal_cycle() { return make(4.0, 1.95, 5.1, 0.8, 0.1, 0.01, 4.0); }

/// 1D sets a, b and c.
inline Params1D one_d(char which) {
  const double pi_b = which == 'a' ? 1.3 : which == 'b' ? 1.0 : 0.6;
  return Params1D::create(0.95, pi_b, {0.3, 0.3}, 4.0);
}

/// Random positive payoffs, costs (at least one positive) and beta.
inline ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pay(0.5, 3.0);
  std::uniform_real_distribution<double> cost(0.0, 1.0);
  std::uniform_real_distribution<double> beta(0.2, 6.0);
  const double gg = pay(rng), gb = pay(rng), bg = pay(rng), bb = pay(rng);
  double cg = cost(rng);
  const double cb = cost(rng);
  if (cg == 0.0 && cb == 0.0) cg = 0.1;
  return ModelParams::create({gg, gb, bg, bb}, {cg, cb}, beta(rng));
}

inline State random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {u(rng), u(rng)};
}

}  // namespace replab::testing
