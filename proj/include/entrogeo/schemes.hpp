#pragma once

// Transverse-field driving profiles of a resonantly driven two-level system,
// the success/failure probability paths they induce, and the general
// propagator amplitudes.

#include <complex>
#include <string>
#include <string_view>
#include <utility>

namespace entrogeo {

enum class SchemeKind { Constant, Oscillating, PowerLaw, Exponential };

inline constexpr SchemeKind kAllSchemes[] = {SchemeKind::Constant, SchemeKind::Oscillating,
                                             SchemeKind::PowerLaw, SchemeKind::Exponential};

std::string_view to_string(SchemeKind kind);
// Accepts "constant", "oscillating", "powerlaw"/"power-law", "exponential".
SchemeKind parse_scheme_kind(std::string_view name);

// One of the four field-intensity profiles omega_H(t): Gamma, Gamma cos(lambda t),
// Gamma / (1 + lambda t)^2, Gamma exp(-lambda t).
class DrivingScheme {
 public:
  // With `resonance_max_constraint` the peak intensity must satisfy
  // Gamma = (pi/2) hbar lambda, which lets the success probability reach one.
  DrivingScheme(SchemeKind kind, double gamma, double lambda, double hbar,
                bool resonance_max_constraint);

  // Gamma coupled to lambda through the resonance-maximum constraint.
  static DrivingScheme resonant(SchemeKind kind, double lambda, double hbar = 1.0);
  // Gamma and lambda chosen independently; lambda is ignored for Constant.
  static DrivingScheme unconstrained(SchemeKind kind, double gamma, double lambda = 0.0,
                                     double hbar = 1.0);

  SchemeKind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  double lambda() const { return lambda_; }
  double hbar() const { return hbar_; }
  bool resonance_max_constraint() const { return resonance_max_constraint_; }

  // Upper end of the admissible time range: pi/(2 lambda) for Oscillating,
  // infinity otherwise.
  double time_limit() const;

  // omega_H(t) / Gamma, continued analytically to every t >= 0.
  double profile(double t) const;
  // log |profile(t)|, finite where profile() itself underflows.
  double log_abs_profile(double t) const;
  // d/dt of profile().
  double profile_derivative(double t) const;
  // Integral of profile() over [0, t].
  double profile_integral(double t) const;

 private:
  SchemeKind kind_;
  double gamma_;
  double lambda_;
  double hbar_;
  bool resonance_max_constraint_;
};

// omega_H(t). Throws DomainError for t < 0 or, for Oscillating, beyond the
// first quarter period where the intensity turns negative.
double field_intensity(const DrivingScheme& scheme, double t);

// f(theta) = integral of omega_H / hbar over [0, theta], in closed form.
double integrated_phase(const DrivingScheme& scheme, double theta);

// theta -> (p_w, p_wperp) = (sin^2 f(theta), cos^2 f(theta)).
class ProbabilityPath {
 public:
  explicit ProbabilityPath(DrivingScheme scheme) : scheme_(scheme) {}

  const DrivingScheme& scheme() const { return scheme_; }
  // Admissible theta: [0, domain_end()].
  double domain_end() const { return scheme_.time_limit(); }
  bool contains(double theta) const { return theta >= 0.0 && theta <= domain_end(); }

  double phase(double theta) const { return integrated_phase(scheme_, theta); }
  double success(double theta) const;
  double failure(double theta) const;
  std::pair<double, double> probabilities(double theta) const;

 private:
  DrivingScheme scheme_;
};

ProbabilityPath probability_path(const DrivingScheme& scheme);

struct AmplitudePair {
  std::complex<double> alpha;
  std::complex<double> beta;
  double b = 0.0;
  double phi_omega = 0.0;
};

// Propagator amplitudes for detuning parameter b and accumulated phase
// Phi = sqrt(1 + b^2) * integral |omega| / hbar; phi_omega is the transverse
// field phase.
AmplitudePair amplitudes(double b, double phase, double phi_omega);

// Probability that source |s> = x|w> + sqrt(1 - x^2)|wperp> ends in |w>.
// Throws DomainError for |x| > 1.
double transition_probability(const AmplitudePair& amps, double x);

}  // namespace entrogeo
