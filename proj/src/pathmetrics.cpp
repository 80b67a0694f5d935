#include "entrogeo/pathmetrics.hpp"

#include "entrogeo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entrogeo {

ParamTrajectory trajectory(const Geodesic& geodesic, double xi_start, double xi_end) {
  if (!(xi_end >= xi_start)) throw DomainError("trajectory range must be ordered");
  if (!geodesic.valid(xi_start) || !geodesic.valid(xi_end)) {
    throw OutOfValidity("trajectory range leaves the geodesic validity interval");
  }
  return {[geodesic](double xi) { return geodesic.theta(xi); },
          [geodesic](double xi) { return geodesic.thetadot(xi); }, xi_start, xi_end};
}

ParamTrajectory trajectory(const NumericGeodesic& geodesic) {
  return {[geodesic](double xi) { return geodesic.theta(xi); },
          [geodesic](double xi) { return geodesic.thetadot(xi); }, geodesic.xi_begin(),
          geodesic.xi_end()};
}

namespace {

void require_in_range(const ParamTrajectory& traj, double xi) {
  if (!(xi >= traj.xi_start && xi <= traj.xi_end)) {
    throw DomainError("xi=" + std::to_string(xi) + " outside the trajectory range");
  }
}

}  // namespace

double entropic_speed(const MetricField& metric, const ParamTrajectory& traj, double xi) {
  require_in_range(traj, xi);
  return std::sqrt(metric.g(traj.theta(xi))) * std::abs(traj.thetadot(xi));
}

double entropy_rate_metric(const MetricField& metric, const ParamTrajectory& traj, double xi) {
  require_in_range(traj, xi);
  const double v = traj.thetadot(xi);
  return metric.g(traj.theta(xi)) * v * v;
}

double entropy_rate_score(const ProbabilityPath& path, const ParamTrajectory& traj, double xi) {
  require_in_range(traj, xi);
  const double theta = traj.theta(xi);
  const double thetadot = traj.thetadot(xi);
  const double h = fisher_step(theta);
  if (!path.contains(theta - h) || !path.contains(theta + h)) {
    throw DomainError("theta +- h leaves the probability-path domain");
  }
  const auto [pw, pf] = path.probabilities(theta);
  if (std::min(pw, pf) < 1e-12) {
    throw DegenerateDistribution("probability path is degenerate at theta=" +
                                 std::to_string(theta));
  }
  const auto [pw_hi, pf_hi] = path.probabilities(theta + h);
  const auto [pw_lo, pf_lo] = path.probabilities(theta - h);
  // Total derivative d/dxi log p_x = (d/dtheta log p_x) * dtheta/dxi.
  const double dw = (std::log(pw_hi) - std::log(pw_lo)) / (2.0 * h) * thetadot;
  const double df = (std::log(pf_hi) - std::log(pf_lo)) / (2.0 * h) * thetadot;
  return pw * dw * dw + pf * df * df;
}

double thermodynamic_length(const MetricField& metric, const ParamTrajectory& traj,
                            const numerics::QuadratureOptions& opts) {
  auto speed = [&](double xi) {
    return std::sqrt(metric.g(traj.theta(xi))) * std::abs(traj.thetadot(xi));
  };
  return numerics::integrate(speed, traj.xi_start, traj.xi_end, opts).value;
}

double thermodynamic_divergence(const MetricField& metric, const ParamTrajectory& traj,
                                const numerics::QuadratureOptions& opts) {
  auto rate = [&](double xi) {
    const double v = traj.thetadot(xi);
    return metric.g(traj.theta(xi)) * v * v;
  };
  return numerics::integrate(rate, traj.xi_start, traj.xi_end, opts).value;
}

IgcResult igc(const MetricField& metric, const Geodesic& geodesic, double tau, double tau0,
              const numerics::QuadratureOptions& opts) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("tau must be non-negative");
  if (!geodesic.valid(tau0) || !geodesic.valid(tau0 + tau)) {
    throw OutOfValidity("IGC window [tau0, tau0 + tau] leaves the geodesic validity interval");
  }
  auto density = [&](double xi) {
    return std::sqrt(metric.g(geodesic.theta(xi))) * geodesic.thetadot(xi);
  };
  if (tau == 0.0) return {0.0, 0.5 * density(tau0)};

  numerics::EvalBudget budget(opts.max_evals);
  numerics::QuadratureOptions inner = opts;
  inner.budget = &budget;
  auto explored = [&](double s) { return numerics::integrate(density, tau0, tau0 + s, inner).value; };

  const double outer = numerics::integrate(explored, 0.0, tau, inner).value;
  const double value = outer / tau;
  const double rate = (explored(tau) - value) / tau;
  return {value, rate};
}

double igc_rate_central_difference(const MetricField& metric, const Geodesic& geodesic,
                                   double tau, double tau0) {
  if (!(tau > 0.0)) throw DomainError("tau must be positive");
  const double d = 1e-4 * tau;
  const double hi = igc(metric, geodesic, tau + d, tau0).value;
  const double lo = igc(metric, geodesic, tau - d, tau0).value;
  return (hi - lo) / (2.0 * d);
}

double geodesic_entropy_rate(const DrivingScheme& scheme, double theta0, double thetadot0) {
  const Geodesic geodesic = geodesic_closed_form(scheme, 0.0, theta0, thetadot0);
  return entropy_rate_metric(fisher_closed_form(scheme), trajectory(geodesic, 0.0, 0.0), 0.0);
}

double geodesic_log_entropy_rate(const DrivingScheme& scheme, double theta0, double thetadot0) {
  if (!(theta0 > 0.0)) throw DomainError("theta0 must be positive");
  if (!(thetadot0 > 0.0)) throw DomainError("thetadot0 must be positive");
  return 2.0 * (std::log(2.0 * scheme.gamma() / scheme.hbar()) + scheme.log_abs_profile(theta0) +
                std::log(thetadot0));
}

double igc_asymptotic_slope(const DrivingScheme& scheme, double theta0, double thetadot0) {
  if (!(theta0 >= 0.0)) throw DomainError("theta0 must be non-negative");
  if (!(thetadot0 > 0.0)) throw DomainError("thetadot0 must be positive");
  return scheme.gamma() / scheme.hbar() * thetadot0 * std::abs(scheme.profile(theta0));
}

PathMetricsReport path_metrics(const DrivingScheme& scheme, double xi0, double theta0,
                               double thetadot0, double tau, double tau0) {
  if (!(tau > 0.0)) throw DomainError("tau must be positive");
  const Geodesic geodesic = geodesic_closed_form(scheme, xi0, theta0, thetadot0);
  const MetricField metric = fisher_closed_form(scheme);
  const ParamTrajectory traj = trajectory(geodesic, tau0, tau0 + tau);

  PathMetricsReport report;
  report.tau = tau;
  report.v_E = entropic_speed(metric, traj, tau0);
  report.r_E = entropy_rate_metric(metric, traj, tau0);
  report.length = thermodynamic_length(metric, traj);
  report.divergence = thermodynamic_divergence(metric, traj);
  const IgcResult c = igc(metric, geodesic, tau, tau0);
  report.igc = c.value;
  report.igc_rate = c.rate;
  return report;
}

}  // namespace entrogeo
