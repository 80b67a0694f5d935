#include <doctest.h>

#include "entrogeo/errors.hpp"
#include "entrogeo/numerics.hpp"

#include <cmath>
#include <numbers>

using namespace entrogeo;
using namespace entrogeo::numerics;

TEST_CASE("quadrature reproduces elementary integrals") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0).value ==
        doctest::Approx(std::numbers::e - 1.0).epsilon(1e-13));
  // sqrt has an endpoint singularity in its derivative; adaptivity handles it.
  CHECK(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0).value ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("quadrature limits") {
  auto f = [](double x) { return x * x; };
  CHECK(integrate(f, 2.0, 0.0).value == doctest::Approx(-8.0 / 3.0).epsilon(1e-14));
  CHECK(integrate(f, 1.5, 1.5).value == 0.0);
}

TEST_CASE("evaluation budget is enforced") {
  auto spiky = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); };
  CHECK_THROWS_AS(integrate(spiky, 0.0, 1.0, {.max_evals = 100}), QuadratureFailure);

  EvalBudget shared(40);
  QuadratureOptions opts;
  opts.budget = &shared;
  integrate([](double x) { return x; }, 0.0, 1.0, opts);
  CHECK(shared.used() == 15);
  integrate([](double x) { return x; }, 0.0, 1.0, opts);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, opts), QuadratureFailure);
}

TEST_CASE("Dormand-Prince integrates the harmonic oscillator") {
  const Rhs2 rhs = [](double, const State2& y) { return State2{y[1], -y[0]}; };
  const auto nodes = integrate_dopri45(rhs, 0.0, {1.0, 0.0}, 10.0);
  CHECK(nodes.front().t == 0.0);
  CHECK(nodes.back().t == 10.0);
  CHECK(nodes.back().y[0] == doctest::Approx(std::cos(10.0)).epsilon(1e-8));
  double worst = 0.0;
  for (int i = 0; i <= 997; ++i) {
    const double t = 10.0 * i / 997.0;
    worst = std::max(worst, std::abs(hermite_eval(nodes, 0, t) - std::cos(t)));
    worst = std::max(worst, std::abs(hermite_eval(nodes, 1, t) + std::sin(t)));
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("Dormand-Prince reports breakdown near a blow-up") {
  // y' = y^2 with y(0) = 1 blows up at t = 1.
  const Rhs2 rhs = [](double, const State2& y) { return State2{y[0] * y[0], 0.0}; };
  CHECK_THROWS_AS(integrate_dopri45(rhs, 0.0, {1.0, 0.0}, 2.0), StepFailure);
}

TEST_CASE("Brent root") {
  CHECK(brent_root([](double x) { return std::cos(x); }, 0.0, 2.0) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
  CHECK(brent_root([](double x) { return x - 1.0; }, 1.0, 3.0) == 1.0);
  CHECK_THROWS_AS(brent_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoSignChange);
}
