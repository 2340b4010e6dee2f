#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "replab/errors.hpp"
#include "replab/model.hpp"
#include "support.hpp"

using namespace replab;
using replab::testing::make;
using replab::testing::scenario;

TEST_CASE("derived coefficients") {
  const auto [a, b] = derived_coefficients(scenario(1));
  CHECK(a == doctest::Approx(-0.15).epsilon(1e-14));
  CHECK(b == doctest::Approx(-0.1).epsilon(1e-14));

  const auto zero = derived_coefficients(make(2.0, 2.0, 1.7, 1.7, 0.1, 0.2));
  CHECK(zero.a == 0.0);

  const auto other = derived_coefficients(make(2.75, 2.3, 2.5, 2.0, 0.2, 0.4));
  CHECK(other.a == doctest::Approx(0.05).epsilon(1e-13));
  CHECK(other.b == doctest::Approx(-0.3).epsilon(1e-14));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make(0.0, 1, 1, 1, 0.1, 0.1), ValidationError);
  CHECK_THROWS_AS(make(1, 1, -1, 1, 0.1, 0.1), ValidationError);
  CHECK_THROWS_AS(make(1, 1, 1, 1, -0.1, 0.1), ValidationError);
  CHECK_THROWS_AS(make(1, 1, 1, 1, 0.1, 0.1, 0.0), ValidationError);
  CHECK_THROWS_AS(make(1, 1, 1, 1, 0.1, 0.1, std::nan("")), ValidationError);
  CHECK_THROWS_AS(Params1D::create(1, 1, {0.1, 0.1}, -1), ValidationError);
  CHECK_NOTHROW(make(1, 1, 1, 1, 0.0, 0.0));
  CHECK_THROWS_AS(check_adjusted(make(1, 1, 1, 1, 0.0, 0.0)), ValidationError);
}

TEST_CASE("probability checks snap within slack") {
  CHECK(checked_probability(-1e-13) == 0.0);
  CHECK(checked_probability(1.0 + 1e-13) == 1.0);
  CHECK(checked_probability(0.25) == 0.25);
  CHECK_THROWS_AS(checked_probability(-1e-9), DomainError);
  CHECK_THROWS_AS(checked_probability(1.1), DomainError);
  CHECK_THROWS_AS(checked_probability(std::nan("")), DomainError);
  CHECK_THROWS_AS(step_full(scenario(1), {0.5, 1.5}), DomainError);
  CHECK_THROWS_AS(step_adjusted_1d(testing::one_d('b'), -0.5), DomainError);
}

TEST_CASE("expected profits charge the technology not held") {
  const ModelParams p = scenario(1);
  const auto g1 = expected_profits(p, true, 1.0);
  CHECK(g1.green == doctest::Approx(2.75));
  CHECK(g1.brown == doctest::Approx(2.5 - 0.4));
  const auto b0 = expected_profits(p, false, 0.0);
  CHECK(b0.green == doctest::Approx(2.3 - 0.3));
  CHECK(b0.brown == doctest::Approx(2.2));
  const auto half = expected_profits(p, true, 0.5);
  CHECK(half.green == doctest::Approx(2.525).epsilon(1e-14));
  CHECK(half.brown == doctest::Approx(1.95).epsilon(1e-14));
  CHECK_THROWS_AS(expected_profits(p, true, 2.0), DomainError);
}

TEST_CASE("full step matches extended-precision values") {
  const ModelParams p = scenario(1);
  const State mid = step_full(p, {0.5, 0.5});
  CHECK(mid.eta1 == doctest::Approx(0.55435336168198894226).epsilon(1e-14));
  CHECK(mid.eta1 == mid.eta2);

  const State off = step_full(p, {0.3, 0.8});
  CHECK(off.eta1 == doctest::Approx(0.33145694721043685640).epsilon(1e-14));
  CHECK(off.eta2 == doctest::Approx(0.85352310098443903478).epsilon(1e-14));

  CHECK(step_full(p, {0.0, 0.0}) == State{0.0, 0.0});
  CHECK(step_full(p, {1.0, 1.0}) == State{1.0, 1.0});
  CHECK(step_full(p, {1.0, 0.0}) == State{1.0, 0.0});
}

TEST_CASE("1D maps") {
  const Params1D b = testing::one_d('b');
  CHECK(step_adjusted_1d(b, 0.0) == 0.0);
  CHECK(step_adjusted_1d(b, 1.0) == 1.0);
  CHECK(step_adjusted_1d(b, 0.64) == doctest::Approx(0.64).epsilon(1e-3));

  const Params1D classic = Params1D::create(1.0, 0.5, {0.0, 0.0}, 1.0);
  CHECK(step_classic_1d(classic, 0.5) == doctest::Approx(0.62245933120185456464).epsilon(1e-14));
  CHECK(step_classic_1d(classic, 0.0) == 0.0);

  const Params1D flat = Params1D::create(1.2, 1.2, {0.3, 0.1}, 2.0);
  for (double eta : {0.0, 0.1, 0.37, 0.9, 1.0}) CHECK(step_classic_1d(flat, eta) == eta);
}

TEST_CASE("extreme exponents stay finite and inside the box") {
  const ModelParams p = make(50.0, 0.01, 0.01, 50.0, 0.0, 0.5, 1e4);
  for (double x : {1e-300, 1e-12, 0.3, 1.0 - 1e-12}) {
    for (double y : {0.0, 0.5, 1.0}) {
      const State s = step_full(p, {x, y});
      CHECK(std::isfinite(s.eta1));
      CHECK(s.eta1 >= 0.0);
      CHECK(s.eta1 <= 1.0);
    }
  }
}

TEST_CASE("box invariance and swap equivariance over random draws") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failures = 0;
  for (int k = 0; k < 20000; ++k) {
    const ModelParams p = testing::random_params(rng);
    State s = testing::random_state(rng);
    if (k % 10 == 0) s.eta1 = u(rng) < 0.5 ? 0.0 : 1.0;
    const State f = step_full(p, s);
    const State g = step_full(p, s.swapped());
    if (!(f.eta1 >= 0.0 && f.eta1 <= 1.0 && f.eta2 >= 0.0 && f.eta2 <= 1.0)) ++failures;
    if (!(g == f.swapped())) ++failures;
    const State d = step_full(p, {s.eta1, s.eta1});
    if (d.eta1 != d.eta2) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("nesting: with a = 0 each coordinate follows the adjusted 1D map") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pay(0.5, 3.0);
  std::uniform_real_distribution<double> cost(0.01, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const double pg = pay(rng), pb = pay(rng), cg = cost(rng), cb = cost(rng);
    const double beta = 0.5 + 4.0 * cost(rng);
    const ModelParams p = make(pg, pg, pb, pb, cg, cb, beta);
    const Params1D q = Params1D::create(pg, pb, {cg, cb}, beta);
    const State s = testing::random_state(rng);
    const State f = step_full(p, s);
    worst = std::max(worst, std::abs(f.eta1 - step_adjusted_1d(q, s.eta1)));
    worst = std::max(worst, std::abs(f.eta2 - step_adjusted_1d(q, s.eta2)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("formula check: zero costs reduce the adjusted map to the classic one") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pay(0.5, 3.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const Params1D q = Params1D::create(pay(rng), pay(rng), {0.0, 0.0}, 0.1 + 5.0 * u(rng));
    const double eta = u(rng);
    worst = std::max(worst, std::abs(step_adjusted_1d(q, eta) - step_classic_1d(q, eta)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("classic map moves toward green when green pays more") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failures = 0;
  for (int k = 0; k < 5000; ++k) {
    const double pb = 0.5 + u(rng);
    const Params1D q = Params1D::create(pb + 0.01 + u(rng), pb, {0.0, 0.0}, 0.1 + 3.0 * u(rng));
    const double eta = 0.001 + 0.998 * u(rng);
    if (!(step_classic_1d(q, eta) > eta)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("interior root is accurate for tiny and huge beta") {
  // u = 0.35, v = 0.25 are the gaps of one_d('b').
  CHECK(kernel::interior_root(0.35, 0.25, 4.0) ==
        doctest::Approx(0.64003595234205412557).epsilon(1e-14));
  CHECK(kernel::interior_root(0.35, 0.25, 1e-6) ==
        doctest::Approx(0.58333334548611166811).epsilon(1e-12));
  CHECK(kernel::interior_root(0.35, 0.25, 200.0) ==
        doctest::Approx(0.99999999793884638181).epsilon(1e-14));
  const double big = kernel::interior_root(0.35, 0.25, 1e6);
  CHECK(std::isfinite(big));
  CHECK(big <= 1.0);
}
