#include "entrogeo/geometry.hpp"

#include "entrogeo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace entrogeo {

namespace {

constexpr double kMetricFloor = 1e-12;
constexpr double kDegenerateProbability = 1e-12;

}  // namespace

MetricField fisher_closed_form(const DrivingScheme& scheme) {
  const double amp = 2.0 * scheme.gamma() / scheme.hbar();
  const double amp2 = amp * amp;
  auto g = [scheme, amp2](double theta) {
    const double w = scheme.profile(theta);
    return amp2 * w * w;
  };
  auto dg = [scheme, amp2](double theta) {
    return 2.0 * amp2 * scheme.profile(theta) * scheme.profile_derivative(theta);
  };
  return MetricField(g, dg, MetricSource::ClosedForm, scheme.kind());
}

double fisher_step(double theta) { return 1e-6 * std::max(1.0, std::abs(theta)); }

double fisher_numeric(const ProbabilityPath& path, double theta, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  if (!path.contains(theta - h) || !path.contains(theta + h)) {
    throw DomainError("theta +- h leaves the probability-path domain");
  }
  const auto [pw, pf] = path.probabilities(theta);
  if (std::min(pw, pf) < kDegenerateProbability) {
    throw DegenerateDistribution("probability path is degenerate at theta=" +
                                 std::to_string(theta));
  }
  const auto [pw_hi, pf_hi] = path.probabilities(theta + h);
  const auto [pw_lo, pf_lo] = path.probabilities(theta - h);
  const double score_w = (std::log(pw_hi) - std::log(pw_lo)) / (2.0 * h);
  const double score_f = (std::log(pf_hi) - std::log(pf_lo)) / (2.0 * h);
  return pw * score_w * score_w + pf * score_f * score_f;
}

double fisher_numeric(const ProbabilityPath& path, double theta) {
  return fisher_numeric(path, theta, fisher_step(theta));
}

MetricField fisher_from_path(const ProbabilityPath& path) {
  auto g = [path](double theta) { return fisher_numeric(path, theta); };
  auto dg = [path](double theta) {
    const double h = 1e-4 * std::max(1.0, std::abs(theta));
    return (fisher_numeric(path, theta + h) - fisher_numeric(path, theta - h)) / (2.0 * h);
  };
  return MetricField(g, dg, MetricSource::NumericFromPath, path.scheme().kind());
}

Geodesic::Geodesic(const DrivingScheme& scheme, double xi0, double theta0, double thetadot0)
    : kind_(scheme.kind()),
      lambda_(scheme.lambda()),
      xi0_(xi0),
      theta0_(theta0),
      thetadot0_(thetadot0),
      xi_end_(std::numeric_limits<double>::infinity()) {
  if (!(theta0 > 0.0) || !std::isfinite(theta0)) throw DomainError("theta0 must be positive");
  if (!(thetadot0 > 0.0) || !std::isfinite(thetadot0)) {
    throw DomainError("thetadot0 must be positive");
  }
  if (!std::isfinite(xi0)) throw DomainError("xi0 must be finite");

  switch (kind_) {
    case SchemeKind::Constant: break;
    case SchemeKind::Oscillating: {
      const double phase = lambda_ * theta0;
      const double c = std::cos(phase);
      if (fisher_closed_form(scheme).g(theta0) < kMetricFloor) {
        throw MetricDegenerate("oscillating metric vanishes at theta0");
      }
      branch_ = std::round(phase / std::numbers::pi);
      sign_ = std::fmod(branch_, 2.0) == 0.0 ? 1.0 : -1.0;
      slope_ = lambda_ * c * thetadot0;
      const double target = slope_ > 0.0 ? 1.0 : -1.0;
      xi_end_ = xi0 + (target - std::sin(phase)) / slope_;
      break;
    }
    case SchemeKind::PowerLaw:
      xi_end_ = xi0 + (1.0 + lambda_ * theta0) / (lambda_ * thetadot0);
      break;
    case SchemeKind::Exponential:
      xi_end_ = xi0 + 1.0 / (lambda_ * thetadot0);
      break;
  }
}

void Geodesic::require_valid(double xi) const {
  if (!valid(xi)) {
    throw OutOfValidity("xi=" + std::to_string(xi) + " outside the geodesic validity interval [" +
                        std::to_string(xi0_) + ", " + std::to_string(xi_end_) + ")");
  }
}

double Geodesic::theta(double xi) const {
  require_valid(xi);
  const double s = xi - xi0_;
  switch (kind_) {
    case SchemeKind::Constant: return theta0_ + thetadot0_ * s;
    case SchemeKind::Oscillating: {
      const double u = std::sin(lambda_ * theta0_) + slope_ * s;
      return (branch_ * std::numbers::pi + sign_ * std::asin(u)) / lambda_;
    }
    case SchemeKind::PowerLaw: {
      const double q0 = 1.0 + lambda_ * theta0_;
      const double a = q0 / (lambda_ * thetadot0_);
      return (q0 * q0 + lambda_ * thetadot0_ * (s - a)) / (lambda_ * lambda_ * thetadot0_ * (a - s));
    }
    case SchemeKind::Exponential:
      return theta0_ - std::log1p(-lambda_ * thetadot0_ * s) / lambda_;
  }
  return 0.0;
}

double Geodesic::thetadot(double xi) const {
  require_valid(xi);
  const double s = xi - xi0_;
  switch (kind_) {
    case SchemeKind::Constant: return thetadot0_;
    case SchemeKind::Oscillating: {
      const double u = std::sin(lambda_ * theta0_) + slope_ * s;
      return sign_ * slope_ / (lambda_ * std::sqrt(1.0 - u * u));
    }
    case SchemeKind::PowerLaw: {
      const double q0 = 1.0 + lambda_ * theta0_;
      const double a = q0 / (lambda_ * thetadot0_);
      return q0 * q0 / (lambda_ * lambda_ * thetadot0_ * (a - s) * (a - s));
    }
    case SchemeKind::Exponential: return thetadot0_ / (1.0 - lambda_ * thetadot0_ * s);
  }
  return 0.0;
}

double Geodesic::thetaddot(double xi) const {
  require_valid(xi);
  const double s = xi - xi0_;
  switch (kind_) {
    case SchemeKind::Constant: return 0.0;
    case SchemeKind::Oscillating: {
      const double u = std::sin(lambda_ * theta0_) + slope_ * s;
      const double r = 1.0 - u * u;
      return sign_ * slope_ * slope_ * u / (lambda_ * r * std::sqrt(r));
    }
    case SchemeKind::PowerLaw: {
      const double q0 = 1.0 + lambda_ * theta0_;
      const double a = q0 / (lambda_ * thetadot0_);
      const double d = a - s;
      return 2.0 * q0 * q0 / (lambda_ * lambda_ * thetadot0_ * d * d * d);
    }
    case SchemeKind::Exponential: {
      const double d = 1.0 - lambda_ * thetadot0_ * s;
      return lambda_ * thetadot0_ * thetadot0_ / (d * d);
    }
  }
  return 0.0;
}

Geodesic geodesic_closed_form(const DrivingScheme& scheme, double xi0, double theta0,
                              double thetadot0) {
  return Geodesic(scheme, xi0, theta0, thetadot0);
}

void NumericGeodesic::require_inside(double xi) const {
  if (!(xi >= xi_begin() && xi <= xi_end())) {
    throw OutOfValidity("xi=" + std::to_string(xi) + " outside the integrated range");
  }
}

double NumericGeodesic::theta(double xi) const {
  require_inside(xi);
  return numerics::hermite_eval(nodes_, 0, xi);
}

double NumericGeodesic::thetadot(double xi) const {
  require_inside(xi);
  return numerics::hermite_eval(nodes_, 1, xi);
}

namespace {

double checked_metric(const MetricField& metric, double theta) {
  const double g = metric.g(theta);
  if (!(g >= kMetricFloor)) {
    throw MetricDegenerate("metric fell below 1e-12 at theta=" + std::to_string(theta));
  }
  return g;
}

}  // namespace

NumericGeodesic geodesic_numeric(const MetricField& metric, double xi0, double theta0,
                                 double thetadot0, double xi_end,
                                 const GeodesicIntegration& config) {
  if (!(thetadot0 > 0.0)) throw DomainError("thetadot0 must be positive");
  if (!(xi_end > xi0)) throw DomainError("xi_end must exceed xi0");
  if (std::isfinite(config.xi_singular)) {
    const double guard = xi0 + 0.999 * (config.xi_singular - xi0);
    if (xi_end > guard) {
      throw OutOfValidity("xi_end=" + std::to_string(xi_end) +
                          " is past the singular-point guard " + std::to_string(guard));
    }
  }

  numerics::OdeOptions ode = config.ode;
  if (ode.max_step <= 0.0) ode.max_step = (xi_end - xi0) / 256.0;

  std::vector<numerics::OdeNode> nodes;
  if (config.form == GeodesicForm::Christoffel) {
    auto rhs = [&metric](double, const numerics::State2& y) -> numerics::State2 {
      const double g = checked_metric(metric, y[0]);
      return {y[1], -0.5 * metric.dg_dtheta(y[0]) / g * y[1] * y[1]};
    };
    nodes = numerics::integrate_dopri45(rhs, xi0, {theta0, thetadot0}, xi_end, ode);
    for (auto& n : nodes) n.dy = rhs(n.t, n.y);
  } else {
    // State (theta, momentum) with momentum = g(theta) * thetadot.
    auto rhs = [&metric](double, const numerics::State2& y) -> numerics::State2 {
      const double g = checked_metric(metric, y[0]);
      const double v = y[1] / g;
      return {v, 0.5 * metric.dg_dtheta(y[0]) * v * v};
    };
    const double p0 = checked_metric(metric, theta0) * thetadot0;
    nodes = numerics::integrate_dopri45(rhs, xi0, {theta0, p0}, xi_end, ode);
    for (auto& n : nodes) {
      const double g = checked_metric(metric, n.y[0]);
      const double v = n.y[1] / g;
      n.y = {n.y[0], v};
      n.dy = {v, -0.5 * metric.dg_dtheta(n.y[0]) / g * v * v};
    }
  }
  return NumericGeodesic(std::move(nodes));
}

NumericGeodesic geodesic_numeric(const DrivingScheme& scheme, double xi0, double theta0,
                                 double thetadot0, double xi_end, GeodesicForm form) {
  const Geodesic closed = geodesic_closed_form(scheme, xi0, theta0, thetadot0);
  GeodesicIntegration config;
  config.form = form;
  config.xi_singular = closed.validity_end();
  return geodesic_numeric(fisher_closed_form(scheme), xi0, theta0, thetadot0, xi_end, config);
}

}  // namespace entrogeo
