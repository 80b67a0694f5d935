#pragma once

// Thermodynamic length and divergence, entropic speed, entropy production rate
// and information geometric complexity along parametrized paths.

#include "entrogeo/geometry.hpp"
#include "entrogeo/numerics.hpp"
#include "entrogeo/schemes.hpp"

#include <functional>

namespace entrogeo {

// An arbitrary parametrization xi -> theta(xi) over [xi_start, xi_end].
struct ParamTrajectory {
  std::function<double(double)> theta;
  std::function<double(double)> thetadot;
  double xi_start = 0.0;
  double xi_end = 0.0;
};

ParamTrajectory trajectory(const Geodesic& geodesic, double xi_start, double xi_end);
ParamTrajectory trajectory(const NumericGeodesic& geodesic);

// sqrt(g(theta)) |thetadot| at xi. Throws DomainError outside the trajectory range.
double entropic_speed(const MetricField& metric, const ParamTrajectory& traj, double xi);

// g(theta) thetadot^2 at xi.
double entropy_rate_metric(const MetricField& metric, const ParamTrajectory& traj, double xi);

// sum_x p_x (d log p_x / d xi)^2 with the chain rule through a central
// difference in theta. Throws DegenerateDistribution at p_w in {0, 1}.
double entropy_rate_score(const ProbabilityPath& path, const ParamTrajectory& traj, double xi);

// Integral of the entropic speed over the trajectory range.
double thermodynamic_length(const MetricField& metric, const ParamTrajectory& traj,
                            const numerics::QuadratureOptions& opts = {});

// Integral of g(theta) thetadot^2 over the trajectory range.
double thermodynamic_divergence(const MetricField& metric, const ParamTrajectory& traj,
                                const numerics::QuadratureOptions& opts = {});

struct IgcResult {
  double value = 0.0;  // C(tau)
  double rate = 0.0;   // dC/dtau
};

// C(tau) = (1/tau) int_0^tau [ int_{tau0}^{tau0+s} sqrt(g) thetadot dxi ] ds by
// nested adaptive quadrature under one shared evaluation budget; the rate is
// (L(tau) - C(tau)) / tau, L being the inner integral at s = tau. tau = 0
// returns the limits C = 0, rate = v_E(tau0) / 2.
IgcResult igc(const MetricField& metric, const Geodesic& geodesic, double tau, double tau0,
              const numerics::QuadratureOptions& opts = {});

// Central-difference dC/dtau with step 1e-4 tau, used as a cross-check.
double igc_rate_central_difference(const MetricField& metric, const Geodesic& geodesic,
                                   double tau, double tau0);

// Entropy production rate of the closed-form geodesic launched at
// (0, theta0, thetadot0); constant along the geodesic.
double geodesic_entropy_rate(const DrivingScheme& scheme, double theta0, double thetadot0);

// log of geodesic_entropy_rate, evaluated analytically so that rates far below
// the double range still compare correctly.
double geodesic_log_entropy_rate(const DrivingScheme& scheme, double theta0, double thetadot0);
// (Gamma / hbar) thetadot0 |w(theta0)|: the long-time slope of C(tau).
double igc_asymptotic_slope(const DrivingScheme& scheme, double theta0, double thetadot0);

struct PathMetricsReport {
  double v_E = 0.0;
  double r_E = 0.0;
  double length = 0.0;
  double divergence = 0.0;
  double igc = 0.0;
  double igc_rate = 0.0;
  double tau = 0.0;
};

// All metrics of the closed-form geodesic of `scheme` launched at
// (xi0, theta0, thetadot0), over the window [tau0, tau0 + tau].
PathMetricsReport path_metrics(const DrivingScheme& scheme, double xi0, double theta0,
                               double thetadot0, double tau, double tau0);

}  // namespace entrogeo
