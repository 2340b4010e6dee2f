#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "replab/equilibria.hpp"
#include "replab/errors.hpp"
#include "support.hpp"

using namespace replab;
using replab::testing::make;
using replab::testing::scenario;

namespace {

// Plain bisection on the adjusted 1D map, independent of the library finders.
double bisect_1d(const Params1D& p, double lo, double hi) {
  auto h = [&](double x) { return step_adjusted_1d(p, x) - x; };
  const bool lo_negative = h(lo) < 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((h(mid) < 0.0) == lo_negative ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("vertices") {
  const auto v = vertex_equilibria();
  CHECK(v[0].location == State{0, 0});
  CHECK(v[1].location == State{1, 0});
  CHECK(v[2].location == State{1, 1});
  CHECK(v[3].location == State{0, 1});
  for (const ModelParams& p : testing::scenario_sets()) {
    for (const auto& e : v) {
      CHECK(e.residual == 0.0);
      CHECK(step_full(p, e.location) == e.location);
    }
  }
}

TEST_CASE("edge equilibria, scenario 1") {
  const ModelParams p = scenario(1);
  CHECK(eta_star(p) == doctest::Approx(0.25444965409145937331).epsilon(1e-14));
  CHECK(eta_plus(p) == doctest::Approx(0.053031096358628539651).epsilon(1e-13));
  const auto edges = edge_equilibria(p);
  REQUIRE(edges.size() == 4);
  CHECK(edges[0].kind == EquilibriumKind::EdgeEta0);
  CHECK(edges[0].location.eta1 == 0.0);
  CHECK(edges[1].location == edges[0].location.swapped());
  CHECK(edges[2].kind == EquilibriumKind::EdgeEta1);
  CHECK(edges[2].location.eta1 == 1.0);
  for (const auto& e : edges) CHECK(e.residual < 1e-12);
}

TEST_CASE("edge equilibria, scenario 5 and the boundary case") {
  const ModelParams p = scenario(5);
  const auto edges = edge_equilibria(p);
  CHECK(edges.size() == 2u * (eta_star_exists(p) + eta_plus_exists(p)));
  for (const auto& e : edges) CHECK(e.residual <= 1e-10);

  // pi_bb == pi_gb - c_g: the strict existence inequality fails.
  const ModelParams edge_case = make(2.75, 2.5, 2.6, 2.25, 0.25, 0.4);
  CHECK_FALSE(eta_star_exists(edge_case));
  for (const auto& e : edge_equilibria(edge_case)) {
    CHECK(e.kind != EquilibriumKind::EdgeEta0);
    CHECK(e.kind != EquilibriumKind::EdgeEta0Sym);
  }
  CHECK_THROWS_AS(edge_equilibria(make(1, 1, 1, 1, 0, 0)), ValidationError);
}

TEST_CASE("edge closed forms are interior exactly when they exist") {
  std::mt19937_64 rng(99);
  int mismatches = 0;
  int checked = 0;
  for (int k = 0; k < 20000; ++k) {
    const ModelParams p = testing::random_params(rng);
    const auto& m = p.payoffs;
    const double cg = p.costs.green, cb = p.costs.brown;
    const double star_margin = std::min(m.gb + cb - m.bb, m.bb - (m.gb - cg));
    const double plus_margin = std::min(m.bg + cg - m.gg, m.gg - (m.bg - cb));
    if (std::abs(star_margin) > 1e-9) {
      const double e = eta_star(p);
      const bool interior = e > 0.0 && e < 1.0;
      mismatches += interior != eta_star_exists(p);
      ++checked;
      if (eta_star_exists(p) && fixed_point_residual(p, {0.0, e}) > 1e-10) ++mismatches;
    }
    if (std::abs(plus_margin) > 1e-9) {
      const double e = eta_plus(p);
      const bool interior = e > 0.0 && e < 1.0;
      mismatches += interior != eta_plus_exists(p);
      ++checked;
      if (eta_plus_exists(p) && fixed_point_residual(p, {1.0, e}) > 1e-10) ++mismatches;
    }
  }
  CHECK(checked > 30000);
  CHECK(mismatches == 0);
}

TEST_CASE("1D inner equilibrium") {
  const Params1D b = testing::one_d('b');
  const auto eta = inner_equilibrium_1d(b);
  REQUIRE(eta.has_value());
  CHECK(*eta == doctest::Approx(0.64003595234205412557).epsilon(1e-14));
  CHECK(std::abs(*eta - bisect_1d(b, 0.01, 0.99)) < 1e-9);
  CHECK_FALSE(inner_equilibrium_1d(testing::one_d('a')).has_value());
  CHECK_FALSE(inner_equilibrium_1d(testing::one_d('c')).has_value());
}

TEST_CASE("1D closed form agrees with bisection over random draws") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  double worst = 0.0;
  for (int k = 0; k < 3000; ++k) {
    const double pg = 1.5 + u(rng), cg = 0.05 + u(rng), cb = 0.05 + u(rng);
    const double pb = pg - cg + (cg + cb) * (0.05 + 0.9 * u(rng));
    const Params1D p = Params1D::create(pg, pb, {cg, cb}, 0.2 + 5.0 * u(rng));
    const auto eta = inner_equilibrium_1d(p);
    REQUIRE(eta.has_value());
    REQUIRE(*eta > 0.0);
    REQUIRE(*eta < 1.0);
    // The inner root is a repellor of the 1D map; bracket it by the map's
    // direction just inside 0 and 1.
    worst = std::max(worst, std::abs(*eta - bisect_1d(p, 1e-9, 1.0 - 1e-9)));
    ++checked;
  }
  CHECK(checked == 3000);
  CHECK(worst < 1e-9);
}

TEST_CASE("beta limits of the 1D inner equilibrium") {
  const Params1D b = testing::one_d('b');
  const InnerLimits lim = eta_in_limits(b);
  CHECK(lim.beta_zero == doctest::Approx(0.35 / 0.6).epsilon(1e-14));
  CHECK(lim.beta_inf == 1.0);

  const Params1D knife = Params1D::create(1.0, 1.0, {0.3, 0.3}, 2.0);
  CHECK_THROWS_AS(eta_in_limits(knife), KnifeEdgeError);
  CHECK_THROWS_AS(eta_in_limits(testing::one_d('a')), ValidationError);

  Params1D tiny = b;
  tiny.beta = 1e-6;
  CHECK(std::abs(*inner_equilibrium_1d(tiny) - lim.beta_zero) < 1e-4);
  Params1D huge = b;
  huge.beta = 200.0;
  CHECK(std::abs(*inner_equilibrium_1d(huge) - lim.beta_inf) < 1e-3);
}

TEST_CASE("eta_in is monotone in beta with the sign given by the knife-edge quantity") {
  // 2(pi_g - pi_b) + c_b - c_g < 0 here, so eta_in rises toward 1.
  Params1D up = testing::one_d('b');
  // Swapping the gaps gives the decreasing case.
  Params1D down = Params1D::create(1.0, 0.95, {0.3, 0.3}, 1.0);
  double prev_up = 0.0, prev_down = 1.0;
  for (double beta = 0.05; beta < 30.0; beta *= 1.3) {
    up.beta = beta;
    down.beta = beta;
    const double u = *inner_equilibrium_1d(up);
    const double d = *inner_equilibrium_1d(down);
    CHECK(u > prev_up);
    CHECK(d < prev_down);
    prev_up = u;
    prev_down = d;
  }
}

TEST_CASE("diagonal equilibria") {
  const auto s1 = find_diagonal_equilibria(scenario(1));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].location.eta1 == doctest::Approx(0.20784551250570168494).epsilon(1e-12));
  CHECK(s1[0].residual <= 1e-12);

  const auto s3 = find_diagonal_equilibria(scenario(3));
  CHECK(std::any_of(s3.begin(), s3.end(),
                    [](const Equilibrium& e) { return std::abs(e.location.eta1 - 0.5) <= 1e-9; }));

  CHECK(find_diagonal_equilibria(scenario(9)).empty());

  const auto tr = find_diagonal_equilibria(testing::three_diagonal());
  REQUIRE(tr.size() == 3);
  CHECK(tr[0].location.eta1 == doctest::Approx(0.0538).epsilon(1e-2));
  CHECK(tr[1].location.eta1 == doctest::Approx(0.4314).epsilon(1e-3));
  CHECK(tr[2].location.eta1 == doctest::Approx(0.9694).epsilon(1e-3));
  for (const auto& e : tr) CHECK(e.residual <= 1e-12);
}

TEST_CASE("inner equilibria") {
  const InnerSearch tl = find_inner_equilibria(testing::many_inner());
  CHECK(tl.dropped_candidates == 0);
  REQUIRE(tl.equilibria.size() == 3);
  const auto& eq = tl.equilibria;
  CHECK(eq[0].kind == EquilibriumKind::OffDiagonalInner);
  CHECK(eq[0].location.eta1 == doctest::Approx(0.051262593616856887).epsilon(1e-9));
  CHECK(eq[0].location.eta2 == doctest::Approx(0.82776642512642738).epsilon(1e-9));
  CHECK(eq[1].kind == EquilibriumKind::DiagonalInner);
  CHECK(eq[1].location.eta1 == doctest::Approx(0.40435927691087008).epsilon(1e-12));
  CHECK(eq[2].location.eta1 == doctest::Approx(eq[0].location.eta2).epsilon(1e-12));
  for (const auto& e : eq) CHECK(e.residual <= 1e-10);

  const InnerSearch s1 = find_inner_equilibria(scenario(1));
  CHECK(std::any_of(s1.equilibria.begin(), s1.equilibria.end(), [](const Equilibrium& e) {
    return e.kind == EquilibriumKind::DiagonalInner;
  }));

  RootScan coarse;
  coarse.grid_cells = 32;
  CHECK_THROWS_AS(find_inner_equilibria(scenario(1), coarse), ValidationError);
}

TEST_CASE("inner equilibria are swap closed and independent of thread count") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 25; ++k) {
    const ModelParams p = testing::random_params(rng);
    RootScan serial;
    serial.grid_cells = 96;
    serial.threads = 1;
    RootScan threaded = serial;
    threaded.threads = 4;
    const InnerSearch a = find_inner_equilibria(p, serial);
    const InnerSearch b = find_inner_equilibria(p, threaded);
    REQUIRE(a.equilibria.size() == b.equilibria.size());
    for (std::size_t i = 0; i < a.equilibria.size(); ++i) {
      CHECK(a.equilibria[i].location == b.equilibria[i].location);
    }
    for (const auto& e : a.equilibria) {
      CHECK(e.residual <= 1e-10);
      const State m = e.location.swapped();
      CHECK(std::any_of(a.equilibria.begin(), a.equilibria.end(), [&](const Equilibrium& f) {
        return std::abs(f.location.eta1 - m.eta1) <= 1e-9 &&
               std::abs(f.location.eta2 - m.eta2) <= 1e-9;
      }));
    }
  }
}

TEST_CASE("period-2 cycles on the diagonal") {
  const ModelParams bl = testing::diagonal_cycle();
  const auto cycles = find_period2_diagonal(bl);
  REQUIRE(cycles.size() == 1);
  const Cycle2& c = cycles[0];
  CHECK(c.point_a == doctest::Approx(0.283).epsilon(1e-2));
  CHECK(c.point_b == doctest::Approx(0.698).epsilon(1e-2));
  CHECK(c.point_b - c.point_a > 1e-6);
  const Coefficients k = derived_coefficients(bl);
  CHECK(std::abs(kernel::diagonal_step(bl, k, c.point_a) - c.point_b) <= 1e-10);
  CHECK(std::abs(kernel::diagonal_step(bl, k, c.point_b) - c.point_a) <= 1e-10);

  CHECK(find_period2_diagonal(scenario(1)).empty());
}
