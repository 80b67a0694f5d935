#include "entrogeo/thermo.hpp"

#include "entrogeo/errors.hpp"

#include <cmath>

namespace entrogeo::thermo {

TwoLevelEnsemble::TwoLevelEnsemble(double epsilon, int n_elements, double k_b)
    : epsilon_(epsilon), n_elements_(n_elements), k_b_(k_b) {
  if (!(epsilon > 0.0)) throw DomainError("level half-gap epsilon must be positive");
  if (n_elements < 1) throw DomainError("ensemble needs at least one element");
  if (!(k_b > 0.0)) throw DomainError("Boltzmann constant must be positive");
}

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double entropy_of_energy(const TwoLevelEnsemble& ens, double energy) {
  const double top = ens.max_energy();
  if (!(std::abs(energy) <= top)) throw DomainError("internal energy outside [-N eps, N eps]");
  const double span = ens.n_elements() * ens.gap();
  const double lower = (top - energy) / span;   // (N eps2 - U) / (N delta eps)
  const double upper = (energy + top) / span;   // (U - N eps1) / (N delta eps)
  return -ens.k_b() * (xlogx(lower) + xlogx(upper));
}

TemperatureSign temperature_sign(const TwoLevelEnsemble& ens, double energy) {
  const double top = ens.max_energy();
  if (!(std::abs(energy) < top)) {
    throw DomainError("temperature sign is undefined at the energy endpoints");
  }
  if (std::abs(energy) <= 1e-12 * top) return TemperatureSign::InfiniteT;
  return energy < 0.0 ? TemperatureSign::Positive : TemperatureSign::NegativeT;
}

std::pair<double, double> gibbs_probabilities(const TwoLevelEnsemble& ens, double beta) {
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  // Ratio p_upper / p_lower = exp(-2 beta eps), normalized through the smaller weight.
  const double x = -2.0 * beta * ens.epsilon();
  if (x <= 0.0) {
    const double r = std::exp(x);
    return {1.0 / (1.0 + r), r / (1.0 + r)};
  }
  const double r = std::exp(-x);
  return {r / (1.0 + r), 1.0 / (1.0 + r)};
}

double energy_variance(const TwoLevelEnsemble& ens, double beta) {
  const auto [p_lower, p_upper] = gibbs_probabilities(ens, beta);
  const double eps = ens.epsilon();
  const double mean = -eps * p_lower + eps * p_upper;
  const double dl = -eps - mean;
  const double du = eps - mean;
  return p_lower * dl * dl + p_upper * du * du;
}

double beta_from_upper_probability(const TwoLevelEnsemble& ens, double p_upper) {
  if (!(p_upper > 0.0 && p_upper < 1.0)) {
    throw DomainError("upper-level probability must lie strictly inside (0, 1)");
  }
  return std::log((1.0 - p_upper) / p_upper) / ens.gap();
}

double entropy_rate_canonical(const TwoLevelEnsemble& ens,
                              const std::function<double(double)>& beta_of_xi, double xi) {
  constexpr double h = 1e-6;
  const double dbeta = (beta_of_xi(xi + h) - beta_of_xi(xi - h)) / (2.0 * h);
  return energy_variance(ens, beta_of_xi(xi)) * dbeta * dbeta;
}

}  // namespace entrogeo::thermo
