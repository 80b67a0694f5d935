#include "entrogeo/efficiency.hpp"

#include "entrogeo/errors.hpp"
#include "entrogeo/geometry.hpp"
#include "entrogeo/numerics.hpp"
#include "entrogeo/pathmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entrogeo {

double eta1(double r, double r_max) {
  if (!(r_max > 0.0)) throw DomainError("r_max must be positive");
  if (!(r >= 0.0) || r > r_max) throw DomainError("eta1 requires 0 <= r <= r_max");
  return 1.0 - r / r_max;
}

double eta2(double r, double r_min) {
  if (!(r_min > 0.0)) throw DomainError("r_min must be positive");
  if (!(r >= r_min)) throw DomainError("eta2 requires r >= r_min");
  return r_min / r;
}

double eta_sym(double r_l, double r_m) {
  if (!(r_l > 0.0) || !(r_m > 0.0)) throw DomainError("eta_sym requires positive rates");
  return 1.0 - std::abs(r_l - r_m) / (r_l + r_m);
}

namespace {

void require_positive_rates(std::span<const double> rates) {
  if (rates.size() < 2) throw DomainError("at least two rates are required");
  for (double r : rates) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("rates must be positive and finite");
  }
}

std::vector<double> scores(std::span<const double> rates, EfficiencyMeasure measure) {
  const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
  std::vector<double> out;
  out.reserve(rates.size());
  for (double r : rates) {
    switch (measure) {
      case EfficiencyMeasure::Asymmetric1: out.push_back(eta1(r, *hi)); break;
      case EfficiencyMeasure::Asymmetric2: out.push_back(eta2(r, *lo)); break;
      case EfficiencyMeasure::Symmetric: out.push_back(eta_sym(r, *lo)); break;
    }
  }
  return out;
}

std::vector<std::size_t> descending_order(const std::vector<double>& score) {
  std::vector<std::size_t> order(score.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
  return order;
}

}  // namespace

std::vector<std::size_t> efficiency_order(std::span<const double> rates, EfficiencyMeasure measure) {
  require_positive_rates(rates);
  return descending_order(scores(rates, measure));
}

bool check_ranking_preservation(std::span<const double> rates) {
  const auto first = efficiency_order(rates, EfficiencyMeasure::Asymmetric1);
  return first == efficiency_order(rates, EfficiencyMeasure::Asymmetric2) &&
         first == efficiency_order(rates, EfficiencyMeasure::Symmetric);
}

std::vector<std::string> EfficiencyRanking::order_labels() const {
  std::vector<std::string> labels;
  labels.reserve(order.size());
  for (std::size_t i : order) labels.push_back(entries[i].label);
  return labels;
}

EfficiencyRanking rank_schemes(std::span<const DrivingScheme> schemes, double theta0,
                               double thetadot0) {
  if (schemes.size() < 2) throw DomainError("ranking needs at least two schemes");

  EfficiencyRanking ranking;
  ranking.theta0_used = theta0;
  std::vector<double> logs;
  for (const DrivingScheme& scheme : schemes) {
    RankingEntry entry;
    entry.label = std::string(to_string(scheme.kind()));
    entry.kind = scheme.kind();
    entry.log_r_E = geodesic_log_entropy_rate(scheme, theta0, thetadot0);
    if (!std::isfinite(entry.log_r_E)) throw DomainError("rates must be positive and finite");
    entry.r_E = std::exp(entry.log_r_E);
    entry.igc_slope = igc_asymptotic_slope(scheme, theta0, thetadot0);
    logs.push_back(entry.log_r_E);
    ranking.entries.push_back(entry);
    if (ranking.lambda_used == 0.0 &&
        (scheme.kind() != SchemeKind::Constant || scheme.resonance_max_constraint())) {
      ranking.lambda_used = scheme.lambda();
    }
  }

  const auto [lo, hi] = std::minmax_element(logs.begin(), logs.end());
  for (auto& e : ranking.entries) {
    e.eta1 = 0.0 - std::expm1(e.log_r_E - *hi);  // +0 rather than -0 at the maximum
    e.eta2 = std::exp(*lo - e.log_r_E);
    e.eta_sym = 2.0 / (1.0 + std::exp(e.log_r_E - *lo));
  }
  ranking.order.resize(logs.size());
  std::iota(ranking.order.begin(), ranking.order.end(), 0);
  std::stable_sort(ranking.order.begin(), ranking.order.end(),
                   [&](std::size_t a, std::size_t b) { return logs[a] < logs[b]; });
  for (std::size_t i = 1; i < ranking.order.size(); ++i) {
    if (logs[ranking.order[i]] == logs[ranking.order[i - 1]]) ranking.has_ties = true;
  }
  return ranking;
}

bool matches_reference_order(const EfficiencyRanking& ranking) {
  static constexpr SchemeKind kReference[] = {SchemeKind::Exponential, SchemeKind::PowerLaw,
                                              SchemeKind::Oscillating, SchemeKind::Constant};
  if (ranking.order.size() != std::size(kReference)) return false;
  for (std::size_t i = 0; i < ranking.order.size(); ++i) {
    if (ranking.entries[ranking.order[i]].kind != kReference[i]) return false;
  }
  // A tie means the reference order is not strictly realized.
  return !ranking.has_ties;
}

double rate_crossover(SchemeKind a, SchemeKind b, double theta0, double lambda_lo,
                      double lambda_hi, double hbar) {
  if (!(lambda_lo > 0.0) || !(lambda_hi > lambda_lo)) {
    throw DomainError("lambda bracket must satisfy 0 < lo < hi");
  }
  auto log_gap = [&](double lambda) {
    const double ra = geodesic_entropy_rate(DrivingScheme::resonant(a, lambda, hbar), theta0, 1.0);
    const double rb = geodesic_entropy_rate(DrivingScheme::resonant(b, lambda, hbar), theta0, 1.0);
    return std::log(ra) - std::log(rb);
  };
  const double f_lo = log_gap(lambda_lo);
  const double f_hi = log_gap(lambda_hi);
  if (!(f_lo * f_hi < 0.0)) {
    throw NoSignChange("rate difference does not change sign on the lambda bracket");
  }
  return numerics::brent_root(log_gap, lambda_lo, lambda_hi, 1e-10);
}

}  // namespace entrogeo
