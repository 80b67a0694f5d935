#include <doctest.h>

#include "entrogeo/efficiency.hpp"
#include "entrogeo/errors.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace entrogeo;

namespace {

// Root of (1 + u)^2 = e^u away from u = 0, by plain bisection.
double boundary_root() {
  double lo = 1.0, hi = 4.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((1 + mid) * (1 + mid) - std::exp(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<DrivingScheme> resonant_set(double lambda) {
  std::vector<DrivingScheme> out;
  for (SchemeKind k : kAllSchemes) out.push_back(DrivingScheme::resonant(k, lambda));
  return out;
}

}  // namespace

TEST_CASE("efficiency measures") {
  CHECK(eta1(1.0, 4.0) == doctest::Approx(0.75));
  CHECK(eta2(4.0, 1.0) == doctest::Approx(0.25));
  CHECK(eta_sym(1.0, 3.0) == doctest::Approx(0.5));
  CHECK(eta_sym(3.0, 1.0) == eta_sym(1.0, 3.0));
  CHECK(eta_sym(2.0, 2.0) == 1.0);
  CHECK_THROWS_AS(eta1(5.0, 4.0), DomainError);
  CHECK_THROWS_AS(eta2(0.5, 1.0), DomainError);
  CHECK_THROWS_AS(eta_sym(0.0, 1.0), DomainError);
}

TEST_CASE("all three measures rank rates the same way") {
  const std::vector<double> rates{3.0, 0.5, 7.0, 1.0};
  const std::vector<std::size_t> expected{1, 3, 0, 2};
  CHECK(efficiency_order(rates, EfficiencyMeasure::Asymmetric1) == expected);
  CHECK(efficiency_order(rates, EfficiencyMeasure::Symmetric) == expected);
  CHECK(check_ranking_preservation(rates));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> r(5);
    for (double& x : r) x = std::exp(u(rng));
    CHECK(check_ranking_preservation(r));
  }
  CHECK_THROWS_AS(efficiency_order(std::vector<double>{1.0}, EfficiencyMeasure::Symmetric), DomainError);
  CHECK_THROWS_AS(efficiency_order(std::vector<double>{1.0, -1.0}, EfficiencyMeasure::Symmetric), DomainError);
}

TEST_CASE("ranking at lambda = 18 follows the reference order") {
  const auto schemes = resonant_set(18.0);
  const EfficiencyRanking r = rank_schemes(schemes, 1.0, 1.0);
  CHECK(r.lambda_used == 18.0);
  CHECK(r.order_labels() == std::vector<std::string>{"exponential", "powerlaw", "oscillating", "constant"});
  CHECK(matches_reference_order(r));
  // Entries stay in input order: constant, oscillating, powerlaw, exponential.
  CHECK(r.entries[3].r_E < r.entries[2].r_E);
  CHECK(r.entries[2].r_E < r.entries[0].r_E);
  CHECK(r.entries[1].r_E / r.entries[0].r_E == doctest::Approx(std::pow(std::cos(18.0), 2)));
  CHECK(r.entries[0].eta_sym < r.entries[3].eta_sym);
  CHECK(r.entries[3].eta_sym == 1.0);
}

TEST_CASE("conformance flag") {
  CHECK_FALSE(matches_reference_order(rank_schemes(resonant_set(0.5), 1.0, 1.0)));
  const EfficiencyRanking far = rank_schemes(resonant_set(1000.0), 1.0, 1.0);
  CHECK(far.order_labels().front() == "exponential");

  const std::vector<DrivingScheme> twins{DrivingScheme::resonant(SchemeKind::Constant, 2.0),
                                         DrivingScheme::resonant(SchemeKind::Constant, 2.0)};
  const EfficiencyRanking tied = rank_schemes(twins, 1.0, 1.0);
  CHECK(tied.has_ties);
  CHECK_FALSE(matches_reference_order(tied));
}

TEST_CASE("exponential and power-law rates cross at lambda theta0 = u*") {
  const double u_star = boundary_root();
  CHECK(u_star == doctest::Approx(2.5128).epsilon(1e-4));
  const double lambda = rate_crossover(SchemeKind::Exponential, SchemeKind::PowerLaw, 1.0, 1.0, 4.0);
  CHECK(std::abs(lambda - u_star) < 1e-8);
  CHECK(std::abs(lambda - 2.51) <= 0.01);
  const double at_two = rate_crossover(SchemeKind::Exponential, SchemeKind::PowerLaw, 2.0, 0.5, 2.0);
  CHECK(std::abs(2.0 * at_two - u_star) < 1e-8);
  CHECK_THROWS_AS(rate_crossover(SchemeKind::Exponential, SchemeKind::PowerLaw, 1.0, 0.1, 1.0), NoSignChange);
  CHECK_THROWS_AS(rate_crossover(SchemeKind::Exponential, SchemeKind::PowerLaw, 1.0, 2.0, 1.0), DomainError);
}

TEST_CASE("limits of the measures") {
  CHECK(eta1(4.0, 4.0) == 0.0);
  CHECK(eta1(0.0, 2.0) == 1.0);
  CHECK(eta2(1.0, 1.0) == 1.0);
  CHECK(eta2(1e12, 1.0) <= 1e-12);
  const std::vector<double> flat{2.0, 2.0, 2.0};
  CHECK(check_ranking_preservation(flat));
  CHECK(efficiency_order(flat, EfficiencyMeasure::Symmetric) == std::vector<std::size_t>{0, 1, 2});
  const std::vector<double> doubling{8.0, 2.0, 4.0, 1.0};
  CHECK(efficiency_order(doubling, EfficiencyMeasure::Asymmetric2) == std::vector<std::size_t>{3, 1, 2, 0});
}

TEST_CASE("identical schemes tie in input order") {
  const std::vector<DrivingScheme> twins(2, DrivingScheme::resonant(SchemeKind::PowerLaw, 1.0));
  const EfficiencyRanking r = rank_schemes(twins, 1.0, 1.0);
  CHECK(r.has_ties);
  CHECK(r.entries[0].eta_sym == 1.0);
  CHECK(r.entries[1].eta_sym == 1.0);
  CHECK(r.order == std::vector<std::size_t>{0, 1});
}

TEST_CASE("power law ranks above exponential at small lambda") {
  const EfficiencyRanking r = rank_schemes(resonant_set(0.5), 1.0, 1.0);
  double re = 0, rp = 0;
  std::size_t pe = 0, pp = 0;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    const RankingEntry& e = r.entries[r.order[i]];
    if (e.kind == SchemeKind::Exponential) re = e.r_E, pe = i;
    if (e.kind == SchemeKind::PowerLaw) rp = e.r_E, pp = i;
  }
  CHECK(re / rp == doctest::Approx(std::exp(-1.0) * std::pow(1.5, 4)).epsilon(1e-13));
  CHECK(pp < pe);
}
