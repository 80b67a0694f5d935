#pragma once

// Entropic-efficiency measures and the ranking of driving schemes by their
// (constant) geodesic entropy production rates.

#include "entrogeo/schemes.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace entrogeo {

// 1 - r / r_max.
double eta1(double r, double r_max);
// r_min / r.
double eta2(double r, double r_min);
// 1 - |r_l - r_m| / (r_l + r_m); symmetric.
double eta_sym(double r_l, double r_m);

enum class EfficiencyMeasure { Asymmetric1, Asymmetric2, Symmetric };

// Indices of `rates` sorted by descending efficiency under `measure`, with
// eta1 anchored at the set maximum and eta2/eta_sym at the set minimum. Ties
// keep input order.
std::vector<std::size_t> efficiency_order(std::span<const double> rates, EfficiencyMeasure measure);

// True when all three measures induce the same permutation.
bool check_ranking_preservation(std::span<const double> rates);

struct RankingEntry {
  std::string label;
  SchemeKind kind = SchemeKind::Constant;
  double r_E = 0.0;
  double log_r_E = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  double eta_sym = 0.0;
  double igc_slope = 0.0;
};

struct EfficiencyRanking {
  std::vector<RankingEntry> entries;  // input order
  std::vector<std::size_t> order;     // indices into entries, most efficient first
  bool has_ties = false;
  double lambda_used = 0.0;
  double theta0_used = 0.0;

  std::vector<std::string> order_labels() const;
};

// Scores every scheme by the entropy production rate of its closed-form
// geodesic launched at (0, theta0, thetadot0); eta_sym is taken against the
// smallest rate of the set. The measures are evaluated from log-rates, and
// the order sorts log-rates ascending (eta_sym is strictly decreasing in the
// rate), so rates that underflow a double still rank correctly.
EfficiencyRanking rank_schemes(std::span<const DrivingScheme> schemes, double theta0,
                               double thetadot0);

// Whether the efficiency order is Exponential > PowerLaw > Oscillating > Constant.
bool matches_reference_order(const EfficiencyRanking& ranking);

// lambda* in [lambda_lo, lambda_hi] at which schemes a and b (both with the
// resonance-maximum constraint) produce equal entropy production rates at
// theta0. Brent's method, absolute tolerance 1e-10. Throws NoSignChange.
double rate_crossover(SchemeKind a, SchemeKind b, double theta0, double lambda_lo,
                      double lambda_hi, double hbar = 1.0);

}  // namespace entrogeo
