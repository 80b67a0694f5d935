#pragma once

// Fisher information of single-parameter probability paths and the geodesics
// (optimum, minimum-entropy-production parametrizations) of the resulting
// one-dimensional metric.

#include "entrogeo/numerics.hpp"
#include "entrogeo/schemes.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace entrogeo {

enum class MetricSource { ClosedForm, NumericFromPath };

// g(theta) together with dg/dtheta.
class MetricField {
 public:
  MetricField(std::function<double(double)> g, std::function<double(double)> dg_dtheta,
              MetricSource source, std::optional<SchemeKind> kind = std::nullopt)
      : g_(std::move(g)), dg_(std::move(dg_dtheta)), source_(source), kind_(kind) {}

  double g(double theta) const { return g_(theta); }
  double dg_dtheta(double theta) const { return dg_(theta); }
  MetricSource source() const { return source_; }
  std::optional<SchemeKind> kind() const { return kind_; }

 private:
  std::function<double(double)> g_;
  std::function<double(double)> dg_;
  MetricSource source_;
  std::optional<SchemeKind> kind_;
};

// g(theta) = (2 Gamma / hbar)^2 w(theta)^2 with w the scheme's intensity
// profile; analytic derivative included. The closed form is evaluated for
// every theta >= 0, including Oscillating beyond its first quarter period.
MetricField fisher_closed_form(const DrivingScheme& scheme);

// Default finite-difference step: 1e-6 * max(1, |theta|).
double fisher_step(double theta);

// Sum over outcomes of p_x (d log p_x / d theta)^2 using central differences on
// log p_x. Throws DegenerateDistribution when min(p_w, p_wperp) < 1e-12 and
// DomainError when theta +- h leaves the path domain.
double fisher_numeric(const ProbabilityPath& path, double theta, double h);
double fisher_numeric(const ProbabilityPath& path, double theta);

// Metric built from fisher_numeric with a central-difference derivative.
MetricField fisher_from_path(const ProbabilityPath& path);

// Closed-form geodesic theta(xi) for one of the four schemes, launched at
// (xi0, theta0, thetadot0). Defined on [xi0, validity_end()).
class Geodesic {
 public:
  Geodesic(const DrivingScheme& scheme, double xi0, double theta0, double thetadot0);

  double xi0() const { return xi0_; }
  double theta0() const { return theta0_; }
  double thetadot0() const { return thetadot0_; }
  SchemeKind kind() const { return kind_; }

  // First xi at which the closed form breaks down (infinity for Constant).
  double validity_end() const { return xi_end_; }
  bool valid(double xi) const { return xi >= xi0_ && xi < xi_end_; }

  // Each evaluator throws OutOfValidity outside [xi0, validity_end()).
  double theta(double xi) const;
  double thetadot(double xi) const;
  double thetaddot(double xi) const;

 private:
  void require_valid(double xi) const;

  SchemeKind kind_;
  double lambda_;
  double xi0_;
  double theta0_;
  double thetadot0_;
  double xi_end_;
  // Oscillating: theta = (branch * pi + sign * asin(u)) / lambda with
  // u = sin(lambda theta0) + slope * (xi - xi0).
  double branch_ = 0.0;
  double sign_ = 1.0;
  double slope_ = 0.0;
};

Geodesic geodesic_closed_form(const DrivingScheme& scheme, double xi0, double theta0,
                              double thetadot0);

enum class GeodesicForm {
  Christoffel,  // theta'' + (1/2g) g' theta'^2 = 0
  Divergence,   // (g theta')' - (1/2) g' theta'^2 = 0, integrated in (theta, g theta')
};

// Dense numeric geodesic: nodes store (theta, thetadot) with derivatives
// (thetadot, thetaddot), interpolated by cubic Hermite polynomials.
class NumericGeodesic {
 public:
  explicit NumericGeodesic(std::vector<numerics::OdeNode> nodes) : nodes_(std::move(nodes)) {}

  double xi_begin() const { return nodes_.front().t; }
  double xi_end() const { return nodes_.back().t; }
  // Throw OutOfValidity outside [xi_begin(), xi_end()].
  double theta(double xi) const;
  double thetadot(double xi) const;
  const std::vector<numerics::OdeNode>& nodes() const { return nodes_; }

 private:
  void require_inside(double xi) const;
  std::vector<numerics::OdeNode> nodes_;
};

struct GeodesicIntegration {
  GeodesicForm form = GeodesicForm::Christoffel;
  // An unset max_step becomes (xi_end - xi0) / 256 so the cubic Hermite dense
  // output stays as accurate as the nodes themselves.
  numerics::OdeOptions ode{};
  // Singular point of the motion; integration may not pass
  // xi0 + 0.999 (xi_singular - xi0).
  double xi_singular = std::numeric_limits<double>::infinity();
};

// Integrates the geodesic equation of `metric` over [xi0, xi_end]. Throws
// MetricDegenerate when g < 1e-12 along the way, OutOfValidity when xi_end is
// past the singular-point guard, StepFailure on integrator breakdown.
NumericGeodesic geodesic_numeric(const MetricField& metric, double xi0, double theta0,
                                 double thetadot0, double xi_end,
                                 const GeodesicIntegration& config = {});

// Convenience: closed-form metric of the scheme with the singular point taken
// from the closed-form geodesic.
NumericGeodesic geodesic_numeric(const DrivingScheme& scheme, double xi0, double theta0,
                                 double thetadot0, double xi_end, GeodesicForm form);

}  // namespace entrogeo
