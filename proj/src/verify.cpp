#include "entrogeo/verify.hpp"

#include "entrogeo/efficiency.hpp"
#include "entrogeo/errors.hpp"
#include "entrogeo/geometry.hpp"
#include "entrogeo/numerics.hpp"
#include "entrogeo/pathmetrics.hpp"
#include "entrogeo/schemes.hpp"
#include "entrogeo/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace entrogeo::verify {

namespace {

using std::numbers::pi;

constexpr std::uint64_t kSeed = 20240611;

// Shared launch point of the geometric checks.
constexpr double kLambda = 0.5;
constexpr double kTheta0 = 1.0;
constexpr double kThetadot0 = 0.1;

DrivingScheme reference_scheme(SchemeKind kind) {
  return DrivingScheme::unconstrained(kind, 1.0, kLambda, 1.0);
}

double rel_gap(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

double upper_theta(const DrivingScheme& s) { return std::min(s.time_limit(), 10.0); }

struct Sampler {
  std::mt19937_64 rng{kSeed};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
};

// Five-point derivative of f at x.
double derivative5(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double central(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

// ---- schemes ----

double normalization() {
  Sampler s;
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const ProbabilityPath path(reference_scheme(k));
    for (int i = 0; i < 100; ++i) {
      const auto [pw, pp] = path.probabilities(s.uniform(0.0, upper_theta(path.scheme())));
      worst = std::max(worst, std::abs(pw + pp - 1.0));
    }
  }
  return worst;
}

double phase_quadrature() {
  Sampler s;
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    for (int i = 0; i < 100; ++i) {
      const double theta = s.uniform(1e-3, upper_theta(scheme));
      const double q = numerics::integrate(
          [&](double t) { return field_intensity(scheme, t) / scheme.hbar(); }, 0.0, theta,
          {.rel_tol = 1e-13, .abs_tol = 0.0}).value;
      worst = std::max(worst, rel_gap(integrated_phase(scheme, theta), q));
    }
  }
  return worst;
}

double amplitude_unitarity() {
  Sampler s;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const AmplitudePair a = amplitudes(s.uniform(-10, 10), s.uniform(0, 10), s.uniform(0, 2 * pi));
    worst = std::max(worst, std::abs(std::norm(a.alpha) + std::norm(a.beta) - 1.0));
  }
  return worst;
}

double transition_consistency() {
  Sampler s;
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const ProbabilityPath path(reference_scheme(k));
    for (int i = 0; i < 100; ++i) {
      const double theta = s.uniform(0.0, upper_theta(path.scheme()));
      const AmplitudePair a = amplitudes(0.0, path.phase(theta), s.uniform(0, 2 * pi));
      worst = std::max(worst, std::abs(transition_probability(a, 0.0) - path.success(theta)));
    }
  }
  return worst;
}

double constant_period() {
  Sampler s;
  const DrivingScheme scheme = DrivingScheme::unconstrained(SchemeKind::Constant, 1.3, 0.0, 0.7);
  const ProbabilityPath path(scheme);
  const double period = pi * scheme.hbar() / scheme.gamma();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double theta = s.uniform(0.0, 10.0);
    worst = std::max(worst, std::abs(path.success(theta + period) - path.success(theta)));
  }
  return worst;
}

// ---- geometry ----

double fisher_identity() {
  Sampler s;
  double worst = 0.0;
  const double h = 1e-3;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const MetricField metric = fisher_closed_form(scheme);
    const double hi = std::min(10.0, 0.9 * scheme.time_limit());
    for (int i = 0; i < 100; ++i) {
      const double theta = s.uniform(2 * h, hi);
      const double fp = derivative5([&](double t) { return integrated_phase(scheme, t); }, theta, h);
      worst = std::max(worst, rel_gap(4 * fp * fp, metric.g(theta)));
    }
  }
  return worst;
}

double fisher_finite_difference() {
  Sampler s;
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const ProbabilityPath path(scheme);
    const MetricField metric = fisher_closed_form(scheme);
    const double hi = std::min(10.0, 0.9 * scheme.time_limit());
    for (int n = 0; n < 100;) {
      const double theta = s.uniform(0.01, hi);
      const auto [pw, pp] = path.probabilities(theta);
      if (std::min(pw, pp) < 1e-3) continue;
      worst = std::max(worst, rel_gap(fisher_numeric(path, theta), metric.g(theta)));
      ++n;
    }
  }
  return worst;
}

double geodesic_residual() {
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const MetricField metric = fisher_closed_form(scheme);
    const Geodesic geo = geodesic_closed_form(scheme, 0.0, kTheta0, kThetadot0);
    const double end = std::min(1.0, 0.9 * geo.validity_end());
    for (int i = 0; i < 50; ++i) {
      const double xi = end * i / 49.0;
      const double th = geo.theta(xi);
      const double td = geo.thetadot(xi);
      const double res = geo.thetaddot(xi) + metric.dg_dtheta(th) / (2 * metric.g(th)) * td * td;
      worst = std::max(worst, std::abs(res));
    }
  }
  return worst;
}

double speed_constancy() {
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const MetricField metric = fisher_closed_form(scheme);
    const NumericGeodesic geo =
        geodesic_numeric(scheme, 0.0, kTheta0, kThetadot0, 1.0, GeodesicForm::Christoffel);
    std::vector<double> v;
    for (int i = 0; i <= 1000; ++i) {
      const double xi = i / 1000.0;
      v.push_back(std::sqrt(metric.g(geo.theta(xi))) * geo.thetadot(xi));
    }
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    worst = std::max(worst, std::sqrt(var / static_cast<double>(v.size())) / mean);
  }
  return worst;
}

double formulation_agreement() {
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const NumericGeodesic a =
        geodesic_numeric(scheme, 0.0, kTheta0, kThetadot0, 1.0, GeodesicForm::Christoffel);
    const NumericGeodesic b =
        geodesic_numeric(scheme, 0.0, kTheta0, kThetadot0, 1.0, GeodesicForm::Divergence);
    for (int i = 0; i <= 200; ++i) {
      worst = std::max(worst, std::abs(a.theta(i / 200.0) - b.theta(i / 200.0)));
    }
  }
  return worst;
}

double affine_invariance() {
  const double a = 2.0;
  const double b = 0.5;
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const NumericGeodesic base =
        geodesic_numeric(scheme, 0.0, kTheta0, kThetadot0, 1.0, GeodesicForm::Christoffel);
    const NumericGeodesic moved =
        geodesic_numeric(scheme, b, kTheta0, kThetadot0 / a, b + a, GeodesicForm::Christoffel);
    for (int i = 0; i <= 200; ++i) {
      const double xi = i / 200.0;
      worst = std::max(worst, std::abs(moved.theta(a * xi + b) - base.theta(xi)));
    }
  }
  return worst;
}

// ---- pathmetrics ----

double cauchy_schwarz() {
  Sampler s;
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const MetricField metric = fisher_closed_form(scheme);
    const Geodesic geo = geodesic_closed_form(scheme, 0.0, kTheta0, kThetadot0);
    for (int i = 0; i < 50; ++i) {
      const double c = s.uniform(0.1, 0.9);
      const ParamTrajectory traj{
          [&, c](double xi) { return geo.theta(xi + c * std::sin(pi * xi) / pi); },
          [&, c](double xi) {
            return geo.thetadot(xi + c * std::sin(pi * xi) / pi) * (1.0 + c * std::cos(pi * xi));
          },
          0.0, 1.0};
      const double len = thermodynamic_length(metric, traj);
      const double div = thermodynamic_divergence(metric, traj);
      const double margin = (div - len * len) / div;
      // Non-constant speed must leave a strict gap of at least 1e-3.
      worst = std::max(worst, std::max(0.0, 1e-3 - margin));
    }
  }
  return worst;
}

double geodesic_equality() {
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const MetricField metric = fisher_closed_form(scheme);
    const ParamTrajectory traj =
        trajectory(geodesic_closed_form(scheme, 0.0, kTheta0, kThetadot0), 0.0, 1.0);
    const double len = thermodynamic_length(metric, traj);
    const double div = thermodynamic_divergence(metric, traj);
    worst = std::max(worst, std::abs(div - len * len) / div);
  }
  return worst;
}

double rate_routes() {
  Sampler s;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const SchemeKind k = kAllSchemes[static_cast<std::size_t>(s.uniform(0, 4)) % 4];
    const DrivingScheme scheme = reference_scheme(k);
    const ParamTrajectory traj =
        trajectory(geodesic_closed_form(scheme, 0.0, kTheta0, kThetadot0), 0.0, 1.0);
    const double xi = s.uniform(0.0, 1.0);
    worst = std::max(worst, rel_gap(entropy_rate_score(probability_path(scheme), traj, xi),
                                    entropy_rate_metric(fisher_closed_form(scheme), traj, xi)));
  }
  return worst;
}

double rate_speed_identity() {
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const MetricField metric = fisher_closed_form(scheme);
    const ParamTrajectory traj =
        trajectory(geodesic_closed_form(scheme, 0.0, kTheta0, kThetadot0), 0.0, 1.0);
    for (int i = 0; i <= 20; ++i) {
      const double v = entropic_speed(metric, traj, i / 20.0);
      worst = std::max(worst, rel_gap(v * v, entropy_rate_metric(metric, traj, i / 20.0)));
    }
  }
  return worst;
}

double slope_law() {
  double worst = 0.0;
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme scheme = reference_scheme(k);
    const MetricField metric = fisher_closed_form(scheme);
    const Geodesic geo = geodesic_closed_form(scheme, 0.0, kTheta0, kThetadot0);
    const double v = entropic_speed(metric, trajectory(geo, 0.0, 1.0), 0.0);
    worst = std::max(worst, std::abs(igc_asymptotic_slope(scheme, kTheta0, kThetadot0) / v - 0.5));
    worst = std::max(worst, std::abs(igc(metric, geo, 1.0, 0.0).rate / v - 0.5));
  }
  return worst;
}

// Counts lambda values where the scalar chain e^-u <= (1+u)^-2 <= |cos u| <= 1
// holds but the rate order does not follow it.
double rate_ordering() {
  int chain_points = 0;
  int violations = 0;
  for (int i = 1; i <= 1200; ++i) {
    const double lambda = 0.05 * i;
    const double u = lambda * kTheta0;
    if (!(std::exp(-u) <= std::pow(1 + u, -2) && std::pow(1 + u, -2) <= std::abs(std::cos(u)))) {
      continue;
    }
    ++chain_points;
    auto rate = [&](SchemeKind k) {
      return geodesic_entropy_rate(DrivingScheme::resonant(k, lambda), kTheta0, 1.0);
    };
    const double re = rate(SchemeKind::Exponential);
    const double rp = rate(SchemeKind::PowerLaw);
    const double ro = rate(SchemeKind::Oscillating);
    const double rc = rate(SchemeKind::Constant);
    if (!(re <= rp && rp <= ro && ro <= rc)) ++violations;
  }
  return chain_points == 0 ? 1.0 : violations;
}

// ---- efficiency ----

double efficiency_range() {
  Sampler s;
  double worst = 0.0;
  auto outside = [](double eta) { return std::max({0.0, -eta, eta - 1.0}); };
  for (int i = 0; i < 10000; ++i) {
    const double a = std::exp(s.uniform(-20, 20));
    const double b = std::exp(s.uniform(-20, 20));
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    worst = std::max({worst, outside(eta1(lo, hi)), outside(eta1(hi, hi)), outside(eta2(hi, lo)),
                      outside(eta2(lo, lo)), outside(eta_sym(a, b))});
  }
  return worst;
}

double efficiency_monotonicity() {
  const double r_min = 0.37;
  const double v0 = std::sqrt(r_min);
  double worst = std::abs(eta_sym(r_min, r_min) - 1.0);
  double prev = eta_sym(r_min, v0 * v0);
  for (int i = 1; i < 10000; ++i) {
    const double v = v0 * (1.0 + 99.0 * i / 9999.0);
    const double eta = eta_sym(r_min, v * v);
    // Strict decrease is required above r_min.
    if (!(eta < prev)) worst = std::max(worst, eta - prev + 1e-300);
    prev = eta;
  }
  return worst;
}

double order_agreement() {
  Sampler s;
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> rates(2 + static_cast<std::size_t>(s.uniform(0, 7)));
    for (double& r : rates) r = std::exp(s.uniform(-30, 5));
    if (!check_ranking_preservation(rates)) ++failures;
  }
  return failures;
}

// ---- thermo ----

double concavity() {
  const thermo::TwoLevelEnsemble ens(0.8, 3);
  const double span = ens.max_energy();
  std::vector<double> sigma;
  for (int i = 1; i <= 1000; ++i) {
    sigma.push_back(thermo::entropy_of_energy(ens, -span + 2 * span * i / 1001.0));
  }
  double worst = std::abs(thermo::entropy_of_energy(ens, 0.0) - std::log(2.0));
  for (std::size_t i = 1; i + 1 < sigma.size(); ++i) {
    if (!(sigma[i - 1] - 2 * sigma[i] + sigma[i + 1] < 0.0)) worst = std::max(worst, 1.0);
  }
  for (double v : sigma) {
    if (!(v < std::log(2.0))) worst = std::max(worst, 1.0);
  }
  return worst;
}

double symmetry() {
  Sampler s;
  const thermo::TwoLevelEnsemble ens(1.7, 2);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double u = s.uniform(-ens.max_energy(), ens.max_energy());
    worst = std::max(worst, std::abs(thermo::entropy_of_energy(ens, u) -
                                     thermo::entropy_of_energy(ens, -u)));
  }
  return worst;
}

double variance_fisher() {
  Sampler s;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const thermo::TwoLevelEnsemble ens(s.uniform(0.2, 2.0));
    const double beta = s.uniform(-3.0, 3.0);
    const double h = 1e-5;
    const auto [pl, pu] = thermo::gibbs_probabilities(ens, beta);
    const double dl = central([&](double b) { return std::log(thermo::gibbs_probabilities(ens, b).first); }, beta, h);
    const double du = central([&](double b) { return std::log(thermo::gibbs_probabilities(ens, b).second); }, beta, h);
    worst = std::max(worst, rel_gap(thermo::energy_variance(ens, beta), pl * dl * dl + pu * du * du));
  }
  return worst;
}

double canonical_routes() {
  Sampler s;
  double worst = 0.0;
  const double h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const thermo::TwoLevelEnsemble ens(s.uniform(0.2, 1.0));
    const double b0 = s.uniform(-1, 1);
    const double b1 = s.uniform(0.5, 2);
    const double b2 = s.uniform(-0.2, 0.2);
    const auto beta = [=](double xi) { return b0 + b1 * xi + b2 * std::sin(xi); };
    const auto p = [&](double xi) { return thermo::gibbs_probabilities(ens, beta(xi)); };
    const double xi = s.uniform(0, 1);

    const double canonical = thermo::entropy_rate_canonical(ens, beta, xi);
    const auto [p1, p2] = p(xi);
    // Differentiate the smaller probability; (dp1)^2 = (dp2)^2.
    const double dp = p1 < p2 ? central([&](double x) { return p(x).first; }, xi, h)
                              : central([&](double x) { return p(x).second; }, xi, h);
    const double binary = dp * dp * (1 / p1 + 1 / p2);
    const double d1 = central([&](double x) { return std::log(p(x).first); }, xi, h);
    const double d2 = central([&](double x) { return std::log(p(x).second); }, xi, h);
    const double score = p1 * d1 * d1 + p2 * d2 * d2;
    worst = std::max({worst, rel_gap(binary, canonical), rel_gap(score, canonical)});
  }
  return worst;
}

// The (sin^2, cos^2) path at theta = (pi/2) xi has rate pi^2 by every route.
double pi_squared_example() {
  const DrivingScheme scheme = DrivingScheme::unconstrained(SchemeKind::Constant, 1.0);
  const ParamTrajectory traj{[](double xi) { return pi / 2 * xi; }, [](double) { return pi / 2; },
                             0.0, 1.0};
  double worst = 0.0;
  for (double xi : {0.3, 0.5, 0.7}) {
    worst = std::max(worst, std::abs(entropy_rate_score(probability_path(scheme), traj, xi) - pi * pi));
    const double p = std::pow(std::sin(pi / 2 * xi), 2);
    const double dp = pi / 2 * std::sin(pi * xi);
    worst = std::max(worst, std::abs(dp * dp * (1 / p + 1 / (1 - p)) - pi * pi));
    for (double eps : {0.5, 1.0, 2.0}) {
      const thermo::TwoLevelEnsemble ens(eps);
      const auto beta = [&](double x) {
        return thermo::beta_from_upper_probability(ens, std::pow(std::sin(pi / 2 * x), 2));
      };
      worst = std::max(worst, std::abs(thermo::entropy_rate_canonical(ens, beta, xi) - pi * pi));
    }
  }
  return worst;
}

}  // namespace

std::vector<Check> invariant_checks() {
  return {
      {"schemes.normalization", 1e-14, normalization},
      {"schemes.phase-quadrature", 1e-10, phase_quadrature},
      {"schemes.amplitude-unitarity", 1e-12, amplitude_unitarity},
      {"schemes.transition-consistency", 1e-12, transition_consistency},
      {"schemes.constant-period", 1e-12, constant_period},
      {"geometry.fisher-identity", 1e-8, fisher_identity},
      {"geometry.fisher-finite-difference", 1e-6, fisher_finite_difference},
      {"geometry.geodesic-residual", 1e-8, geodesic_residual},
      {"geometry.speed-constancy", 1e-7, speed_constancy},
      {"geometry.formulation-agreement", 1e-8, formulation_agreement},
      {"geometry.affine-invariance", 1e-8, affine_invariance},
      {"pathmetrics.cauchy-schwarz", 0.0, cauchy_schwarz},
      {"pathmetrics.geodesic-equality", 1e-6, geodesic_equality},
      {"pathmetrics.rate-routes", 1e-8, rate_routes},
      {"pathmetrics.rate-speed-identity", 1e-12, rate_speed_identity},
      {"pathmetrics.slope-law", 1e-8, slope_law},
      {"pathmetrics.rate-ordering", 0.0, rate_ordering},
      {"efficiency.range", 0.0, efficiency_range},
      {"efficiency.monotonicity", 0.0, efficiency_monotonicity},
      {"efficiency.order-agreement", 0.0, order_agreement},
      {"thermo.concavity", 1e-14, concavity},
      {"thermo.symmetry", 1e-14, symmetry},
      {"thermo.variance-fisher", 1e-8, variance_fisher},
      {"thermo.canonical-routes", 1e-8, canonical_routes},
      {"thermo.pi-squared", 1e-8, pi_squared_example},
  };
}

std::vector<CheckResult> run_checks(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (const Check& check : invariant_checks()) {
    if (!options.filter.empty() && check.name.find(options.filter) == std::string::npos) continue;
    CheckResult r;
    r.name = check.name;
    r.tolerance = check.tolerance;
    if (std::find(options.inject_breach.begin(), options.inject_breach.end(), check.name) !=
        options.inject_breach.end()) {
      r.tolerance = -1.0;
    }
    try {
      r.measured = check.measure();
      r.passed = r.measured <= r.tolerance;
    } catch (const std::exception& e) {
      r.error = e.what();
      r.passed = false;
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace entrogeo::verify
