#pragma once

// Data behind the rate/efficiency/complexity comparison figures.

#include "entrogeo/report.hpp"
#include "entrogeo/schemes.hpp"

#include <cstddef>
#include <vector>

namespace entrogeo::figures {

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;

  // Throws DomainError unless count >= 2 and stop > start.
  void validate() const;
  // count points from start to stop inclusive.
  std::vector<double> closed() const;
  // count points in (start, stop]: start + (stop - start) i / count, i = 1..count.
  std::vector<double> open_start() const;
};

// Scheme used at a sweep point: at lambda = 0 every profile reduces to the
// constant one, so the Constant scheme with the same gamma stands in.
DrivingScheme sweep_scheme(SchemeKind kind, double lambda, double gamma, double hbar);

struct Figure1Config {
  Grid lambda{0.0, 3.0, 301};
  Grid tau{0.0, 10.0, 101};
  double theta0 = 1.0;
  double thetadot0 = 0.1;
  double gamma = 1.0;
  double hbar = 1.0;
  double complexity_lambda = 0.5;
};

// Rescaled rates r~ = r_E / ((2 Gamma / hbar)^2 thetadot0^2) and eta_sym
// against the per-lambda minimum rate, per scheme.
report::Table figure1_rates(const Figure1Config& config);
// Rescaled complexity C~ = C / ((Gamma / hbar) thetadot0) versus tau.
report::Table figure1_complexity(const Figure1Config& config);

struct Figure2Config {
  Grid lambda{0.0, 6.0, 601};
  Grid region_theta0{0.0, 4.0, 201};
  Grid region_lambda{0.0, 6.0, 201};
  double theta0 = 1.0;
  double thetadot0 = 0.1;
  double gamma = 1.0;
  double hbar = 1.0;
};

// Exponential and power-law rates versus lambda with the ratios R_C and R_r.
report::Table figure2_rates(const Figure2Config& config);
// Indicator of r_E(exponential) <= r_E(power law) over the (theta0, lambda) grid.
report::Table figure2_region(const Figure2Config& config);

}  // namespace entrogeo::figures
