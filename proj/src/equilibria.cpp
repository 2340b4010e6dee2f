#include "replab/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "replab/errors.hpp"
#include "replab/stability.hpp"

namespace replab {

std::string_view to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::Vertex00: return "vertex_00";
    case EquilibriumKind::Vertex10: return "vertex_10";
    case EquilibriumKind::Vertex11: return "vertex_11";
    case EquilibriumKind::Vertex01: return "vertex_01";
    case EquilibriumKind::EdgeEta0: return "edge_eta0";
    case EquilibriumKind::EdgeEta0Sym: return "edge_eta0_sym";
    case EquilibriumKind::EdgeEta1: return "edge_eta1";
    case EquilibriumKind::EdgeEta1Sym: return "edge_eta1_sym";
    case EquilibriumKind::DiagonalInner: return "diagonal_inner";
    case EquilibriumKind::OffDiagonalInner: return "off_diagonal_inner";
  }
  return "?";
}

double fixed_point_residual(const ModelParams& params, const State& s) {
  const State next = step_full(params, s);
  return std::max(std::abs(next.eta1 - s.eta1), std::abs(next.eta2 - s.eta2));
}

std::array<Equilibrium, 4> vertex_equilibria() {
  return {{{{0.0, 0.0}, EquilibriumKind::Vertex00, 0.0},
           {{1.0, 0.0}, EquilibriumKind::Vertex10, 0.0},
           {{1.0, 1.0}, EquilibriumKind::Vertex11, 0.0},
           {{0.0, 1.0}, EquilibriumKind::Vertex01, 0.0}}};
}

double eta_star(const ModelParams& params) {
  const auto [a, b] = derived_coefficients(params);
  return kernel::interior_root(b + params.costs.green, -b + params.costs.brown, params.beta);
}

double eta_plus(const ModelParams& params) {
  const auto [a, b] = derived_coefficients(params);
  return kernel::interior_root(a + b + params.costs.green, -(a + b) + params.costs.brown,
                               params.beta);
}

bool eta_star_exists(const ModelParams& params) {
  const auto& m = params.payoffs;
  return m.gb + params.costs.brown > m.bb && m.bb > m.gb - params.costs.green;
}

bool eta_plus_exists(const ModelParams& params) {
  const auto& m = params.payoffs;
  return m.bg + params.costs.green > m.gg && m.gg > m.bg - params.costs.brown;
}

std::vector<Equilibrium> edge_equilibria(const ModelParams& params) {
  check_adjusted(params);
  std::vector<Equilibrium> out;
  auto add = [&](State s, EquilibriumKind kind) {
    out.push_back({s, kind, fixed_point_residual(params, s)});
  };
  if (eta_star_exists(params)) {
    const double e = eta_star(params);
    add({0.0, e}, EquilibriumKind::EdgeEta0);
    add({e, 0.0}, EquilibriumKind::EdgeEta0Sym);
  }
  if (eta_plus_exists(params)) {
    const double e = eta_plus(params);
    add({1.0, e}, EquilibriumKind::EdgeEta1);
    add({e, 1.0}, EquilibriumKind::EdgeEta1Sym);
  }
  return out;
}

std::optional<double> inner_equilibrium_1d(const Params1D& p) {
  check_adjusted(p);
  if (!(p.pi_g + p.costs.brown > p.pi_b && p.pi_b > p.pi_g - p.costs.green)) {
    return std::nullopt;
  }
  const double root = kernel::interior_root(p.pi_b - p.pi_g + p.costs.green,
                                            p.pi_g - p.pi_b + p.costs.brown, p.beta);
  return std::clamp(root, std::numeric_limits<double>::min(), std::nextafter(1.0, 0.0));
}

InnerLimits eta_in_limits(const Params1D& p) {
  check_adjusted(p);
  if (!(p.pi_g + p.costs.brown > p.pi_b && p.pi_b > p.pi_g - p.costs.green)) {
    throw ValidationError("eta_in limits require pi_g + c_b > pi_b > pi_g - c_g");
  }
  const double knife = 2.0 * (p.pi_g - p.pi_b) + p.costs.brown - p.costs.green;
  if (knife == 0.0) {
    throw KnifeEdgeError("2(pi_g - pi_b) + c_b - c_g == 0: beta -> infinity limit undefined");
  }
  return {(p.pi_b - p.pi_g + p.costs.green) / (p.costs.brown + p.costs.green),
          knife < 0.0 ? 1.0 : 0.0};
}

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Bisection on a bracketing interval where sign(fn(lo)) == lo_sign and the
// sign at hi is opposite. Runs to adjacent doubles.
template <typename Fn>
double bisect(Fn&& fn, double lo, double hi, int lo_sign) {
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of(fn(mid));
    if (s == 0) return mid;
    if (s == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo <= 0.0) return hi;
  if (hi >= 1.0) return lo;
  return std::abs(fn(lo)) <= std::abs(fn(hi)) ? lo : hi;
}

// All sign changes of fn on (0,1) from a uniform scan. The signs just inside
// the endpoints come from the vertex eigenvalues since fn vanishes at 0 and 1.
template <typename Fn>
std::vector<double> scan_roots(Fn&& fn, int points, int sign_near_zero, int sign_near_one) {
  std::vector<double> roots;
  const double step = 1.0 / points;
  double prev_x = 0.0;
  int prev_sign = sign_near_zero;
  for (int k = 1; k <= points; ++k) {
    const double x = k == points ? 1.0 : k * step;
    const int s = k == points ? sign_near_one : sign_of(fn(x));
    if (s == 0) {
      if (k < points) roots.push_back(x);
      prev_sign = 0;
      prev_x = x;
      continue;
    }
    if (prev_sign != 0 && s != prev_sign) roots.push_back(bisect(fn, prev_x, x, prev_sign));
    prev_sign = s;
    prev_x = x;
  }
  return roots;
}

std::vector<double> merge_sorted(std::vector<double> xs, double distance) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (out.empty() || x - out.back() > distance) out.push_back(x);
  }
  return out;
}

struct EndpointSigns {
  int near_zero = 0;
  int near_one = 0;
};

// Sign of g(eta) - eta just inside 0 and 1. g'(0) and g'(1) are the vertex
// eigenvalues exp(-beta(b + c_g)) and exp(beta(a + b - c_b)).
EndpointSigns diagonal_endpoint_signs(const ModelParams& params, const Coefficients& c) {
  return {sign_of(-(c.b + params.costs.green)), -sign_of(c.a + c.b - params.costs.brown)};
}

std::vector<double> diagonal_roots(const ModelParams& params, const Coefficients& c,
                                   const RootScan& scan) {
  auto defect = [&](double x) { return kernel::diagonal_step(params, c, x) - x; };
  const EndpointSigns ends = diagonal_endpoint_signs(params, c);
  auto roots = scan_roots(defect, scan.diagonal_points, ends.near_zero, ends.near_one);
  return merge_sorted(std::move(roots), scan.merge_distance);
}

}  // namespace

std::vector<Equilibrium> find_diagonal_equilibria(const ModelParams& params,
                                                  const RootScan& scan) {
  check_dynamics(params);
  if (scan.diagonal_points < 2) throw ValidationError("diagonal scan needs >= 2 points");
  const Coefficients c = derived_coefficients(params);
  std::vector<double> roots = diagonal_roots(params, c, scan);

  // (0.5, 0.5) is an equilibrium exactly when
  // pi_gg - c_g - pi_bg == pi_bb - c_b - pi_gb.
  const auto& m = params.payoffs;
  const double midpoint_gap =
      (m.gg - params.costs.green - m.bg) - (m.bb - params.costs.brown - m.gb);
  if (std::abs(midpoint_gap) <= 1e-12) {
    const bool listed = std::any_of(roots.begin(), roots.end(),
                                    [](double r) { return std::abs(r - 0.5) <= 1e-9; });
    if (!listed && std::abs(kernel::diagonal_step(params, c, 0.5) - 0.5) <= 1e-12) {
      roots.push_back(0.5);
      std::sort(roots.begin(), roots.end());
    }
  }

  std::vector<Equilibrium> out;
  for (double r : roots) {
    out.push_back({{r, r}, EquilibriumKind::DiagonalInner, fixed_point_residual(params, {r, r})});
  }
  return out;
}

std::vector<Cycle2> find_period2_diagonal(const ModelParams& params, const RootScan& scan) {
  check_dynamics(params);
  const Coefficients c = derived_coefficients(params);
  auto g = [&](double x) { return kernel::diagonal_step(params, c, x); };
  auto defect = [&](double x) { return g(g(x)) - x; };

  const std::vector<double> fixed = diagonal_roots(params, c, scan);
  // (g o g)'(v) = g'(v)^2 at a vertex, so the endpoint signs match those of g.
  const EndpointSigns ends = diagonal_endpoint_signs(params, c);
  std::vector<double> roots =
      merge_sorted(scan_roots(defect, scan.diagonal_points, ends.near_zero, ends.near_one),
                   scan.merge_distance);

  std::erase_if(roots, [&](double r) {
    return std::any_of(fixed.begin(), fixed.end(),
                       [&](double f) { return std::abs(f - r) <= scan.merge_distance; });
  });

  std::vector<Cycle2> cycles;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const double a = roots[i];
    const double b = g(a);
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - b) <= scan.merge_distance) used[j] = true;
    }
    if (std::abs(a - b) <= scan.merge_distance) continue;
    const double residual = std::max(std::abs(g(a) - b), std::abs(g(b) - a));
    if (residual > 1e-10) continue;
    cycles.push_back({std::min(a, b), std::max(a, b), residual});
  }
  return cycles;
}

namespace {

struct NewtonResult {
  State point;
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
};

double defect_norm(const ModelParams& params, const Coefficients& c, const State& s) {
  const State next = kernel::full_step(params, c, s);
  return std::max(std::abs(next.eta1 - s.eta1), std::abs(next.eta2 - s.eta2));
}

// Damped Newton on F(s) = step(s) - s, halving the step until the defect
// decreases and the iterate stays inside the open box.
NewtonResult newton_fixed_point(const ModelParams& params, const Coefficients& c, State s,
                                int max_iter) {
  NewtonResult result;
  double norm = defect_norm(params, c, s);
  for (int it = 0; it < max_iter && norm > 1e-14; ++it) {
    const State next = kernel::full_step(params, c, s);
    const double f1 = next.eta1 - s.eta1;
    const double f2 = next.eta2 - s.eta2;
    const Matrix2 j = kernel::jacobian(params, c, s);
    const double m11 = j.m11 - 1.0;
    const double m22 = j.m22 - 1.0;
    const double det = m11 * m22 - j.m12 * j.m21;
    if (det == 0.0 || !std::isfinite(det)) break;
    const double dx = (-f1 * m22 + f2 * j.m12) / det;
    const double dy = (-f2 * m11 + f1 * j.m21) / det;

    double scale = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 40; ++halving, scale *= 0.5) {
      const State trial{s.eta1 + scale * dx, s.eta2 + scale * dy};
      if (!(trial.eta1 > 0.0 && trial.eta1 < 1.0 && trial.eta2 > 0.0 && trial.eta2 < 1.0)) {
        continue;
      }
      const double trial_norm = defect_norm(params, c, trial);
      if (trial_norm < norm) {
        s = trial;
        norm = trial_norm;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  result.point = s;
  result.residual = norm;
  result.converged = norm <= 1e-10;
  return result;
}

}  // namespace

InnerSearch find_inner_equilibria(const ModelParams& params, const RootScan& scan) {
  check_dynamics(params);
  if (scan.grid_cells < 64) throw ValidationError("scan_resolution must be >= 64");
  const Coefficients c = derived_coefficients(params);
  const int n = scan.grid_cells;
  const int nodes = n - 1;  // interior nodes k / n, k = 1 .. n-1

  std::vector<double> f1(static_cast<std::size_t>(nodes) * nodes);
  std::vector<double> f2(f1.size());
  detail::parallel_for(static_cast<std::size_t>(nodes), scan.threads, [&](std::size_t i) {
    const double x = static_cast<double>(i + 1) / n;
    for (int j = 0; j < nodes; ++j) {
      const double y = static_cast<double>(j + 1) / n;
      const State next = kernel::full_step(params, c, {x, y});
      f1[i * nodes + j] = next.eta1 - x;
      f2[i * nodes + j] = next.eta2 - y;
    }
  });

  auto straddles = [&](const std::vector<double>& f, int i, int j) {
    const double v[] = {f[i * nodes + j], f[(i + 1) * nodes + j], f[i * nodes + j + 1],
                        f[(i + 1) * nodes + j + 1]};
    return *std::min_element(std::begin(v), std::end(v)) <= 0.0 &&
           *std::max_element(std::begin(v), std::end(v)) >= 0.0;
  };

  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i + 1 < nodes; ++i) {
    for (int j = 0; j + 1 < nodes; ++j) {
      if (straddles(f1, i, j) && straddles(f2, i, j)) cells.emplace_back(i, j);
    }
  }

  std::vector<NewtonResult> solved(cells.size());
  detail::parallel_for(cells.size(), scan.threads, [&](std::size_t k) {
    const auto [i, j] = cells[k];
    const double x0 = static_cast<double>(i + 1) / n;
    const double y0 = static_cast<double>(j + 1) / n;
    const double h = 1.0 / n;
    // Cell centre first, then the corners.
    const State starts[] = {{x0 + 0.5 * h, y0 + 0.5 * h},
                            {x0, y0},
                            {x0 + h, y0},
                            {x0, y0 + h},
                            {x0 + h, y0 + h}};
    for (const State& s0 : starts) {
      solved[k] = newton_fixed_point(params, c, s0, scan.newton_max_iter);
      if (solved[k].converged) break;
    }
  });

  const double margin = scan.merge_distance;
  auto interior = [&](const State& s) {
    return s.eta1 > margin && s.eta1 < 1.0 - margin && s.eta2 > margin && s.eta2 < 1.0 - margin;
  };
  auto near = [&](const State& p, const State& q, double d) {
    return std::abs(p.eta1 - q.eta1) <= d && std::abs(p.eta2 - q.eta2) <= d;
  };

  InnerSearch out;
  std::vector<Equilibrium>& found = out.equilibria;
  for (const Equilibrium& e : find_diagonal_equilibria(params, scan)) {
    if (interior(e.location)) found.push_back(e);
  }
  auto add = [&](const State& s) {
    const bool known = std::any_of(found.begin(), found.end(), [&](const Equilibrium& e) {
      return near(e.location, s, margin);
    });
    if (known) return;
    const bool diagonal = std::abs(s.eta1 - s.eta2) <= margin;
    found.push_back({s, diagonal ? EquilibriumKind::DiagonalInner
                                 : EquilibriumKind::OffDiagonalInner,
                     fixed_point_residual(params, s)});
  };

  for (const NewtonResult& r : solved) {
    if (!r.converged) {
      ++out.dropped_candidates;
      continue;
    }
    if (interior(r.point)) add(r.point);
  }
  // The map commutes with the coordinate swap, so mirror images are equilibria too.
  const std::size_t before = found.size();
  for (std::size_t k = 0; k < before; ++k) {
    if (found[k].kind == EquilibriumKind::OffDiagonalInner) add(found[k].location.swapped());
  }

  std::sort(found.begin(), found.end(), [](const Equilibrium& p, const Equilibrium& q) {
    if (p.location.eta1 != q.location.eta1) return p.location.eta1 < q.location.eta1;
    return p.location.eta2 < q.location.eta2;
  });
  return out;
}

}  // namespace replab
