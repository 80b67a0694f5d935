#include "entrogeo/schemes.hpp"

#include "entrogeo/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace entrogeo {

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Constant: return "constant";
    case SchemeKind::Oscillating: return "oscillating";
    case SchemeKind::PowerLaw: return "powerlaw";
    case SchemeKind::Exponential: return "exponential";
  }
  return "unknown";
}

SchemeKind parse_scheme_kind(std::string_view name) {
  if (name == "constant") return SchemeKind::Constant;
  if (name == "oscillating") return SchemeKind::Oscillating;
  if (name == "powerlaw" || name == "power-law") return SchemeKind::PowerLaw;
  if (name == "exponential") return SchemeKind::Exponential;
  throw DomainError("unknown driving scheme '" + std::string(name) + "'");
}

DrivingScheme::DrivingScheme(SchemeKind kind, double gamma, double lambda, double hbar,
                             bool resonance_max_constraint)
    : kind_(kind),
      gamma_(gamma),
      lambda_(lambda),
      hbar_(hbar),
      resonance_max_constraint_(resonance_max_constraint) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be positive");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be positive");
  const bool needs_lambda = kind != SchemeKind::Constant || resonance_max_constraint;
  if (needs_lambda && (!(lambda > 0.0) || !std::isfinite(lambda))) {
    throw DomainError("lambda must be positive for the " + std::string(to_string(kind)) +
                      " scheme");
  }
  if (resonance_max_constraint) {
    const double target = 0.5 * std::numbers::pi * hbar * lambda;
    if (std::abs(gamma - target) / gamma > 1e-12) {
      throw DomainError("resonance-maximum constraint requires gamma = (pi/2) hbar lambda");
    }
  }
}

DrivingScheme DrivingScheme::resonant(SchemeKind kind, double lambda, double hbar) {
  return DrivingScheme(kind, 0.5 * std::numbers::pi * hbar * lambda, lambda, hbar, true);
}

DrivingScheme DrivingScheme::unconstrained(SchemeKind kind, double gamma, double lambda,
                                           double hbar) {
  return DrivingScheme(kind, gamma, lambda, hbar, false);
}

double DrivingScheme::time_limit() const {
  if (kind_ == SchemeKind::Oscillating) return 0.5 * std::numbers::pi / lambda_;
  return std::numeric_limits<double>::infinity();
}

double DrivingScheme::profile(double t) const {
  switch (kind_) {
    case SchemeKind::Constant: return 1.0;
    case SchemeKind::Oscillating: return std::cos(lambda_ * t);
    case SchemeKind::PowerLaw: {
      const double q = 1.0 + lambda_ * t;
      return 1.0 / (q * q);
    }
    case SchemeKind::Exponential: return std::exp(-lambda_ * t);
  }
  return 0.0;
}

double DrivingScheme::log_abs_profile(double t) const {
  switch (kind_) {
    case SchemeKind::Constant: return 0.0;
    case SchemeKind::Oscillating: return std::log(std::abs(std::cos(lambda_ * t)));
    case SchemeKind::PowerLaw: return -2.0 * std::log1p(lambda_ * t);
    case SchemeKind::Exponential: return -lambda_ * t;
  }
  return 0.0;
}

double DrivingScheme::profile_derivative(double t) const {
  switch (kind_) {
    case SchemeKind::Constant: return 0.0;
    case SchemeKind::Oscillating: return -lambda_ * std::sin(lambda_ * t);
    case SchemeKind::PowerLaw: {
      const double q = 1.0 + lambda_ * t;
      return -2.0 * lambda_ / (q * q * q);
    }
    case SchemeKind::Exponential: return -lambda_ * std::exp(-lambda_ * t);
  }
  return 0.0;
}

double DrivingScheme::profile_integral(double t) const {
  switch (kind_) {
    case SchemeKind::Constant: return t;
    case SchemeKind::Oscillating: return std::sin(lambda_ * t) / lambda_;
    // 1 - 1/(1 + lambda t) rewritten to avoid cancellation for small lambda t.
    case SchemeKind::PowerLaw: return t / (1.0 + lambda_ * t);
    case SchemeKind::Exponential: return -std::expm1(-lambda_ * t) / lambda_;
  }
  return 0.0;
}

namespace {

void check_time(const DrivingScheme& scheme, double t, const char* what) {
  if (!(t >= 0.0) || t > scheme.time_limit()) {
    throw DomainError(std::string(what) + " outside the admissible range of the " +
                      std::string(to_string(scheme.kind())) + " scheme");
  }
}

}  // namespace

double field_intensity(const DrivingScheme& scheme, double t) {
  check_time(scheme, t, "time");
  return scheme.gamma() * scheme.profile(t);
}

double integrated_phase(const DrivingScheme& scheme, double theta) {
  check_time(scheme, theta, "theta");
  return scheme.gamma() / scheme.hbar() * scheme.profile_integral(theta);
}

double ProbabilityPath::success(double theta) const {
  const double s = std::sin(phase(theta));
  return s * s;
}

double ProbabilityPath::failure(double theta) const {
  const double c = std::cos(phase(theta));
  return c * c;
}

std::pair<double, double> ProbabilityPath::probabilities(double theta) const {
  const double f = phase(theta);
  const double s = std::sin(f);
  const double c = std::cos(f);
  return {s * s, c * c};
}

ProbabilityPath probability_path(const DrivingScheme& scheme) { return ProbabilityPath(scheme); }

AmplitudePair amplitudes(double b, double phase, double phi_omega) {
  using namespace std::complex_literals;
  const double norm = std::sqrt(1.0 + b * b);
  const std::complex<double> half_phase = std::polar(1.0, 0.5 * phi_omega);
  AmplitudePair out;
  out.alpha = (std::cos(phase) - 1i * (b / norm) * std::sin(phase)) * half_phase;
  out.beta = std::sin(phase) / norm * std::polar(1.0, 0.5 * phi_omega - 0.5 * std::numbers::pi);
  out.b = b;
  out.phi_omega = phi_omega;
  return out;
}

double transition_probability(const AmplitudePair& amps, double x) {
  if (!(std::abs(x) <= 1.0)) throw DomainError("overlap x must lie in [-1, 1]");
  const double a2 = std::norm(amps.alpha);
  const double b2 = std::norm(amps.beta);
  const double cross = 2.0 * std::real(amps.alpha * std::conj(amps.beta));
  return a2 * x * x + b2 * (1.0 - x * x) + cross * x * std::sqrt(1.0 - x * x);
}

}  // namespace entrogeo
