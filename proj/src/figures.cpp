#include "entrogeo/figures.hpp"

#include "entrogeo/efficiency.hpp"
#include "entrogeo/errors.hpp"
#include "entrogeo/geometry.hpp"
#include "entrogeo/pathmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entrogeo::figures {

void Grid::validate() const {
  if (count < 2) throw DomainError("grid needs at least two points");
  if (!(stop > start) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw DomainError("grid stop must exceed start");
  }
}

std::vector<double> Grid::closed() const {
  validate();
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

std::vector<double> Grid::open_start() const {
  validate();
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = start + (stop - start) * static_cast<double>(i + 1) / static_cast<double>(count);
  }
  return out;
}

DrivingScheme sweep_scheme(SchemeKind kind, double lambda, double gamma, double hbar) {
  if (lambda == 0.0) return DrivingScheme::unconstrained(SchemeKind::Constant, gamma, 0.0, hbar);
  return DrivingScheme::unconstrained(kind, gamma, lambda, hbar);
}

namespace {

// Column order of the comparison figures.
constexpr SchemeKind kFigureOrder[] = {SchemeKind::Constant, SchemeKind::Oscillating,
                                       SchemeKind::Exponential, SchemeKind::PowerLaw};

std::string label(SchemeKind kind) { return std::string(to_string(kind)); }

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive");
  }
}

}  // namespace

report::Table figure1_rates(const Figure1Config& config) {
  require_positive(config.theta0, "theta0");
  require_positive(config.thetadot0, "thetadot0");
  const std::vector<double> lambdas = config.lambda.closed();
  if (lambdas.front() < 0.0) throw DomainError("lambda grid must be non-negative");

  report::Table table;
  table.command = "figure1";
  table.columns.push_back({"lambda", "frequency parameter lambda"});
  for (SchemeKind k : kFigureOrder) {
    table.columns.push_back({"rtilde_" + label(k), "r_E / ((2 Gamma/hbar)^2 thetadot0^2), r_E = g(theta0) thetadot0^2"});
  }
  for (SchemeKind k : kFigureOrder) {
    table.columns.push_back({"eta_" + label(k), "eta_sym(r_E, r_min) = 1 - |r_E - r_min| / (r_E + r_min)"});
  }
  table.notes.push_back("eta_sym anchor r_min is the smallest of the four rates at each lambda");
  table.notes.push_back("theta0=" + report::format_number(config.theta0));

  const double scale = std::pow(2.0 * config.gamma / config.hbar * config.thetadot0, 2);
  table.rows.resize(lambdas.size());
  report::parallel_for(lambdas.size(), [&](std::size_t i) {
    const double lambda = lambdas[i];
    std::vector<double> rates;
    for (SchemeKind k : kFigureOrder) {
      rates.push_back(geodesic_entropy_rate(sweep_scheme(k, lambda, config.gamma, config.hbar),
                                            config.theta0, config.thetadot0));
    }
    const double r_min = *std::min_element(rates.begin(), rates.end());
    std::vector<double> row{lambda};
    for (double r : rates) row.push_back(r / scale);
    for (double r : rates) row.push_back(eta_sym(r, r_min));
    table.rows[i] = std::move(row);
  });
  return table;
}

report::Table figure1_complexity(const Figure1Config& config) {
  require_positive(config.theta0, "theta0");
  require_positive(config.thetadot0, "thetadot0");
  require_positive(config.complexity_lambda, "complexity lambda");
  const std::vector<double> taus = config.tau.closed();
  if (taus.front() < 0.0) throw DomainError("tau grid must be non-negative");

  report::Table table;
  table.command = "figure1";
  table.columns.push_back({"tau", "duration tau of the geodesic window starting at xi0 = tau0 = 0"});
  for (SchemeKind k : kFigureOrder) {
    table.columns.push_back({"Ctilde_" + label(k), "C(tau) / ((Gamma/hbar) thetadot0), C by nested quadrature"});
  }
  table.notes.push_back("lambda=" + report::format_number(config.complexity_lambda) +
                        " theta0=" + report::format_number(config.theta0) +
                        " thetadot0=" + report::format_number(config.thetadot0));

  const double scale = config.gamma / config.hbar * config.thetadot0;
  table.rows.resize(taus.size());
  report::parallel_for(taus.size(), [&](std::size_t i) {
    std::vector<double> row{taus[i]};
    for (SchemeKind k : kFigureOrder) {
      const DrivingScheme scheme =
          sweep_scheme(k, config.complexity_lambda, config.gamma, config.hbar);
      const Geodesic geodesic = geodesic_closed_form(scheme, 0.0, config.theta0, config.thetadot0);
      row.push_back(igc(fisher_closed_form(scheme), geodesic, taus[i], 0.0).value / scale);
    }
    table.rows[i] = std::move(row);
  });
  return table;
}

report::Table figure2_rates(const Figure2Config& config) {
  require_positive(config.theta0, "theta0");
  require_positive(config.thetadot0, "thetadot0");
  const std::vector<double> lambdas = config.lambda.closed();
  if (lambdas.front() < 0.0) throw DomainError("lambda grid must be non-negative");

  report::Table table;
  table.command = "figure2";
  table.columns = {
      {"lambda", "frequency parameter lambda"},
      {"r_exponential", "(2 Gamma/hbar)^2 e^{-2 lambda theta0} thetadot0^2 via g(theta0) thetadot0^2"},
      {"r_powerlaw", "(2 Gamma/hbar)^2 (1 + lambda theta0)^{-4} thetadot0^2 via g(theta0) thetadot0^2"},
      {"log_rate_gap", "log r_exponential - log r_powerlaw (sign change marks the crossover)"},
      {"R_C", "C_exponential(tau_c) / C_powerlaw(tau_c), nested quadrature"},
      {"R_r", "r_exponential / r_powerlaw"},
  };
  table.notes.push_back("tau_c = min(1, half the nearer geodesic singular point)");
  table.notes.push_back("theta0=" + report::format_number(config.theta0) +
                        " thetadot0=" + report::format_number(config.thetadot0));

  table.rows.resize(lambdas.size());
  report::parallel_for(lambdas.size(), [&](std::size_t i) {
    const double lambda = lambdas[i];
    const DrivingScheme exp_scheme =
        sweep_scheme(SchemeKind::Exponential, lambda, config.gamma, config.hbar);
    const DrivingScheme pow_scheme =
        sweep_scheme(SchemeKind::PowerLaw, lambda, config.gamma, config.hbar);
    const Geodesic exp_geo = geodesic_closed_form(exp_scheme, 0.0, config.theta0, config.thetadot0);
    const Geodesic pow_geo = geodesic_closed_form(pow_scheme, 0.0, config.theta0, config.thetadot0);
    const double tau_c = std::min(1.0, 0.5 * std::min(exp_geo.validity_end(), pow_geo.validity_end()));

    const double r_exp = geodesic_entropy_rate(exp_scheme, config.theta0, config.thetadot0);
    const double r_pow = geodesic_entropy_rate(pow_scheme, config.theta0, config.thetadot0);
    const double c_exp = igc(fisher_closed_form(exp_scheme), exp_geo, tau_c, 0.0).value;
    const double c_pow = igc(fisher_closed_form(pow_scheme), pow_geo, tau_c, 0.0).value;
    table.rows[i] = {lambda, r_exp, r_pow, std::log(r_exp) - std::log(r_pow), c_exp / c_pow,
                     r_exp / r_pow};
  });
  return table;
}

report::Table figure2_region(const Figure2Config& config) {
  const std::vector<double> thetas = config.region_theta0.open_start();
  const std::vector<double> lambdas = config.region_lambda.open_start();
  if (thetas.front() <= 0.0 || lambdas.front() <= 0.0) {
    throw DomainError("region grids must stay positive");
  }

  report::Table table;
  table.command = "figure2";
  table.columns = {
      {"theta0", "initial statistical parameter"},
      {"lambda", "frequency parameter lambda"},
      {"u", "lambda theta0"},
      {"exp_le_pow", "1 if r_E(exponential) <= r_E(powerlaw) else 0"},
  };
  table.notes.push_back("boundary of the region is lambda theta0 = u* with (1 + u*)^2 = e^{u*}");

  table.rows.resize(thetas.size() * lambdas.size());
  report::parallel_for(thetas.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      const double theta0 = thetas[i];
      const double lambda = lambdas[j];
      const double r_exp = geodesic_entropy_rate(
          sweep_scheme(SchemeKind::Exponential, lambda, config.gamma, config.hbar), theta0, 1.0);
      const double r_pow = geodesic_entropy_rate(
          sweep_scheme(SchemeKind::PowerLaw, lambda, config.gamma, config.hbar), theta0, 1.0);
      table.rows[i * lambdas.size() + j] = {theta0, lambda, lambda * theta0,
                                            r_exp <= r_pow ? 1.0 : 0.0};
    }
  });
  return table;
}

}  // namespace entrogeo::figures
