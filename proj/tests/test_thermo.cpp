#include <doctest.h>

#include "entrogeo/errors.hpp"
#include "entrogeo/thermo.hpp"

#include <cmath>
#include <numbers>

using namespace entrogeo;
using namespace entrogeo::thermo;
using std::numbers::pi;

TEST_CASE("two-level entropy curve") {
  const TwoLevelEnsemble ens(0.5, 4);
  CHECK(ens.gap() == 1.0);
  CHECK(ens.max_energy() == 2.0);
  CHECK(std::abs(entropy_of_energy(ens, 0.0) - std::log(2.0)) <= 1e-14);
  CHECK(entropy_of_energy(ens, 2.0) == 0.0);
  CHECK(entropy_of_energy(ens, -2.0) == 0.0);
  // x = 1/4 of the elements excited.
  CHECK(entropy_of_energy(ens, 1.0) ==
        doctest::Approx(-(0.25 * std::log(0.25) + 0.75 * std::log(0.75))).epsilon(1e-14));
  CHECK_THROWS_AS(entropy_of_energy(ens, 2.5), DomainError);
}

TEST_CASE("temperature sign follows the slope of the entropy") {
  const TwoLevelEnsemble ens(1.0);
  CHECK(temperature_sign(ens, -0.5) == TemperatureSign::Positive);
  CHECK(temperature_sign(ens, 0.5) == TemperatureSign::NegativeT);
  CHECK(temperature_sign(ens, 0.0) == TemperatureSign::InfiniteT);
  CHECK_THROWS_AS(temperature_sign(ens, 1.0), DomainError);
}

TEST_CASE("Gibbs probabilities and variance") {
  const TwoLevelEnsemble ens(0.7);
  const auto [pl, pu] = gibbs_probabilities(ens, 1.3);
  CHECK(pl / pu == doctest::Approx(std::exp(2 * 1.3 * 0.7)));
  CHECK(pl + pu == doctest::Approx(1.0));
  CHECK(energy_variance(ens, 1.3) == doctest::Approx(0.49 / std::pow(std::cosh(1.3 * 0.7), 2)));
  // Deep in either tail nothing overflows.
  const auto cold = gibbs_probabilities(ens, 1e4);
  CHECK(cold.first == 1.0);
  CHECK(cold.second >= 0.0);
  const auto hot = gibbs_probabilities(ens, -1e4);
  CHECK(hot.second == 1.0);
  // Negative beta populates the upper level.
  CHECK(gibbs_probabilities(ens, -0.2).second > 0.5);
  CHECK(beta_from_upper_probability(ens, pu) == doctest::Approx(1.3).epsilon(1e-13));
  CHECK_THROWS_AS(beta_from_upper_probability(ens, 0.0), DomainError);
}

TEST_CASE("canonical route of the sin^2 path gives pi^2 for any level spacing") {
  for (double eps : {0.1, 1.0, 5.0}) {
    const TwoLevelEnsemble ens(eps);
    const auto beta = [&](double xi) {
      return beta_from_upper_probability(ens, std::pow(std::sin(pi / 2 * xi), 2));
    };
    CHECK(entropy_rate_canonical(ens, beta, 0.3) == doctest::Approx(pi * pi).epsilon(1e-9));
  }
}

TEST_CASE("reference points of the canonical ensemble") {
  const TwoLevelEnsemble ens(1.0);
  const auto mid = gibbs_probabilities(ens, 0.0);
  CHECK(mid.first == 0.5);
  CHECK(mid.second == 0.5);
  CHECK(gibbs_probabilities(ens, 100.0).first == doctest::Approx(1.0).epsilon(1e-15));
  const auto inv = gibbs_probabilities(ens, -1.0);
  CHECK(inv.second / inv.first == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
  CHECK(energy_variance(ens, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(energy_variance(ens, 0.8) == energy_variance(ens, -0.8));
  CHECK(entropy_rate_canonical(ens, [](double) { return 0.4; }, 0.5) == 0.0);
}
