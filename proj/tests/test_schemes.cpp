#include <doctest.h>

#include "entrogeo/errors.hpp"
#include "entrogeo/schemes.hpp"

#include <cmath>
#include <numbers>

using namespace entrogeo;
using std::numbers::pi;

namespace {

// f(theta) for Gamma = hbar = 1, written out independently.
double phase_oracle(SchemeKind k, double lambda, double t) {
  switch (k) {
    case SchemeKind::Constant: return t;
    case SchemeKind::Oscillating: return std::sin(lambda * t) / lambda;
    case SchemeKind::PowerLaw: return t / (1.0 + lambda * t);
    case SchemeKind::Exponential: return (1.0 - std::exp(-lambda * t)) / lambda;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("scheme names round-trip") {
  for (SchemeKind k : kAllSchemes) CHECK(parse_scheme_kind(to_string(k)) == k);
  CHECK(parse_scheme_kind("power-law") == SchemeKind::PowerLaw);
  CHECK_THROWS_AS(parse_scheme_kind("gaussian"), DomainError);
}

TEST_CASE("scheme parameter validation") {
  CHECK_THROWS_AS(DrivingScheme::unconstrained(SchemeKind::Constant, 0.0), DomainError);
  CHECK_THROWS_AS(DrivingScheme::unconstrained(SchemeKind::Constant, 1.0, 0.0, -1.0), DomainError);
  CHECK_THROWS_AS(DrivingScheme::unconstrained(SchemeKind::Exponential, 1.0, 0.0), DomainError);
  CHECK_NOTHROW(DrivingScheme::unconstrained(SchemeKind::Constant, 1.0, 0.0));
  CHECK_THROWS_AS(DrivingScheme(SchemeKind::PowerLaw, 1.0, 1.0, 1.0, true), DomainError);
  CHECK_THROWS_AS(DrivingScheme::resonant(SchemeKind::Constant, 0.0), DomainError);

  const DrivingScheme r = DrivingScheme::resonant(SchemeKind::Oscillating, 2.0, 0.5);
  CHECK(r.gamma() == doctest::Approx(pi / 2 * 0.5 * 2.0));
  CHECK(r.time_limit() == doctest::Approx(pi / 4));
  CHECK(std::isinf(DrivingScheme::resonant(SchemeKind::PowerLaw, 2.0).time_limit()));
}

TEST_CASE("integrated phase matches the closed forms") {
  for (SchemeKind k : kAllSchemes) {
    const DrivingScheme s = DrivingScheme::unconstrained(k, 1.0, 0.7);
    for (double t : {0.0, 0.3, 1.1, 2.0}) {
      CHECK(integrated_phase(s, t) == doctest::Approx(phase_oracle(k, 0.7, t)).epsilon(1e-14));
    }
  }
  // Gamma / hbar scales the phase.
  const DrivingScheme s = DrivingScheme::unconstrained(SchemeKind::Exponential, 3.0, 0.7, 1.5);
  CHECK(integrated_phase(s, 1.0) == doctest::Approx(2.0 * phase_oracle(SchemeKind::Exponential, 0.7, 1.0)));
}

TEST_CASE("field intensity domain") {
  const DrivingScheme osc = DrivingScheme::unconstrained(SchemeKind::Oscillating, 2.0, 1.0);
  CHECK(field_intensity(osc, 0.5) == doctest::Approx(2.0 * std::cos(0.5)));
  CHECK_NOTHROW(field_intensity(osc, pi / 2));
  CHECK_THROWS_AS(field_intensity(osc, pi / 2 + 1e-6), DomainError);
  CHECK_THROWS_AS(field_intensity(osc, -0.1), DomainError);
  const DrivingScheme pw = DrivingScheme::unconstrained(SchemeKind::PowerLaw, 2.0, 1.0);
  CHECK(field_intensity(pw, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("probability path") {
  const ProbabilityPath path(DrivingScheme::unconstrained(SchemeKind::Constant, 2.0));
  CHECK(path.success(0.0) == 0.0);
  CHECK(path.success(pi / 4) == doctest::Approx(1.0));
  const auto [pw, pp] = path.probabilities(0.3);
  CHECK(pw == doctest::Approx(std::pow(std::sin(0.6), 2)));
  CHECK(pw + pp == doctest::Approx(1.0).epsilon(1e-15));
  // Period pi hbar / Gamma.
  CHECK(path.success(0.3 + pi / 2) == doctest::Approx(pw).epsilon(1e-12));

  const ProbabilityPath osc(DrivingScheme::resonant(SchemeKind::Oscillating, 1.0));
  CHECK(osc.domain_end() == doctest::Approx(pi / 2));
  // The resonance-maximum constraint makes the success probability reach one.
  CHECK(osc.success(pi / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(osc.contains(2.0));
}

TEST_CASE("propagator amplitudes") {
  const AmplitudePair a = amplitudes(0.7, 1.3, 0.4);
  CHECK(std::norm(a.alpha) + std::norm(a.beta) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::norm(a.beta) == doctest::Approx(std::pow(std::sin(1.3), 2) / 1.49));

  const AmplitudePair res = amplitudes(0.0, 0.9, 2.0);
  CHECK(transition_probability(res, 0.0) == doctest::Approx(std::pow(std::sin(0.9), 2)).epsilon(1e-14));
  CHECK(transition_probability(res, 1.0) == doctest::Approx(std::pow(std::cos(0.9), 2)).epsilon(1e-14));
  CHECK_THROWS_AS(transition_probability(res, 1.2), DomainError);
}

TEST_CASE("reference points of the phase and the path") {
  const DrivingScheme ex = DrivingScheme::unconstrained(SchemeKind::Exponential, 1.0, 1.0);
  CHECK(field_intensity(ex, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  // Composite Simpson on the profile as an independent route.
  const int n = 20000;
  const double h = 50.0 / n;
  double sum = 1.0 + std::exp(-50.0);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * std::exp(-i * h);
  CHECK(integrated_phase(ex, 50.0) == doctest::Approx(sum * h / 3).epsilon(1e-12));
  CHECK(integrated_phase(ex, 50.0) == doctest::Approx(1.0 - std::exp(-50.0)).epsilon(1e-15));

  const double lambda = 1.7;
  const DrivingScheme osc = DrivingScheme::resonant(SchemeKind::Oscillating, lambda);
  CHECK(osc.gamma() / lambda == doctest::Approx(pi / 2));
  CHECK(integrated_phase(osc, pi / (2 * lambda)) == doctest::Approx(pi / 2).epsilon(1e-15));

  const ProbabilityPath pw(DrivingScheme::resonant(SchemeKind::PowerLaw, 2.0));
  double prev = 0.0;
  for (double t : {1.0, 10.0, 1e3, 1e6}) {
    CHECK(pw.success(t) > prev);
    prev = pw.success(t);
  }
  CHECK(prev == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("resonant amplitudes") {
  const AmplitudePair id = amplitudes(0.0, 0.0, 0.0);
  CHECK(std::abs(id.alpha - std::complex<double>(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(id.beta) <= 1e-15);
  const AmplitudePair flip = amplitudes(0.0, pi / 2, 0.0);
  CHECK(std::abs(flip.alpha) <= 1e-15);
  CHECK(std::abs(flip.beta - std::complex<double>(0.0, -1.0)) <= 1e-15);
  CHECK(transition_probability(flip, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(transition_probability(amplitudes(0.3, 0.0, 1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}
