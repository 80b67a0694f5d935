#pragma once

// Canonical ensemble of N two-level elements with levels -epsilon (lower) and
// +epsilon (upper). Entropies are per element, in units of k_B.

#include <functional>
#include <utility>

namespace entrogeo::thermo {

class TwoLevelEnsemble {
 public:
  explicit TwoLevelEnsemble(double epsilon, int n_elements = 1, double k_b = 1.0);

  double epsilon() const { return epsilon_; }
  int n_elements() const { return n_elements_; }
  double k_b() const { return k_b_; }
  double gap() const { return 2.0 * epsilon_; }
  double max_energy() const { return n_elements_ * epsilon_; }

 private:
  double epsilon_;
  int n_elements_;
  double k_b_;
};

// sigma(U) for U in [-N eps, N eps]; 0 at both ends, log 2 at U = 0.
double entropy_of_energy(const TwoLevelEnsemble& ens, double energy);

enum class TemperatureSign { Positive, NegativeT, InfiniteT };

// Sign of d sigma / dU. Throws DomainError at or beyond the endpoints.
TemperatureSign temperature_sign(const TwoLevelEnsemble& ens, double energy);

// (p_lower, p_upper) = (e^{beta eps}, e^{-beta eps}) / Z, overflow-safe.
std::pair<double, double> gibbs_probabilities(const TwoLevelEnsemble& ens, double beta);

// Energy variance sum_i p_i (e_i - mean)^2, i.e. the Fisher information of the
// Gibbs family with respect to beta.
double energy_variance(const TwoLevelEnsemble& ens, double beta);

// beta such that the upper level holds probability p_upper (inverse logit).
double beta_from_upper_probability(const TwoLevelEnsemble& ens, double p_upper);

// delta E^2(beta(xi)) * (d beta / d xi)^2 with a central difference of step 1e-6.
double entropy_rate_canonical(const TwoLevelEnsemble& ens,
                              const std::function<double(double)>& beta_of_xi, double xi);

}  // namespace entrogeo::thermo
