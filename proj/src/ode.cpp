#include "entrogeo/errors.hpp"
#include "entrogeo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entrogeo::numerics {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

State2 axpy(const State2& y, double h, std::initializer_list<std::pair<double, const State2*>> terms) {
  State2 out = y;
  for (const auto& [coef, k] : terms) {
    out[0] += h * coef * (*k)[0];
    out[1] += h * coef * (*k)[1];
  }
  return out;
}

bool finite(const State2& y) { return std::isfinite(y[0]) && std::isfinite(y[1]); }

}  // namespace

std::vector<OdeNode> integrate_dopri45(const Rhs2& rhs, double t0, const State2& y0,
                                       double t_end, const OdeOptions& opts) {
  if (!(t_end > t0)) throw StepFailure("integration end must exceed the start");

  std::vector<OdeNode> nodes;
  State2 y = y0;
  State2 k1 = rhs(t0, y);
  nodes.push_back({t0, y, k1});

  const double span = t_end - t0;
  double h = opts.initial_step;
  if (h <= 0.0) {
    const double scale = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[0]), std::abs(y[1]));
    const double slope = std::max(std::abs(k1[0]), std::abs(k1[1]));
    h = slope > 0.0 ? 0.01 * std::pow(scale, 0.2) * std::max(1.0, std::abs(y[0])) / slope : 0.01 * span;
    h = std::clamp(h, 1e-8 * span, 0.1 * span);
  }

  double t = t0;
  std::size_t steps = 0;
  while (t < t_end) {
    if (++steps > opts.max_steps) {
      throw StepFailure("step budget of " + std::to_string(opts.max_steps) + " exhausted at t=" +
                        std::to_string(t));
    }
    if (opts.max_step > 0.0) h = std::min(h, opts.max_step);
    bool last = false;
    if (t + h >= t_end) {
      h = t_end - t;
      last = true;
    }
    if (h <= 1e-14 * std::max(1.0, std::abs(t))) {
      throw StepFailure("step size underflow at t=" + std::to_string(t));
    }

    const State2 k2 = rhs(t + c2 * h, axpy(y, h, {{a21, &k1}}));
    const State2 k3 = rhs(t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const State2 k4 = rhs(t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State2 k5 =
        rhs(t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State2 k6 =
        rhs(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State2 y_new =
        axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const double t_new = last ? t_end : t + h;
    const State2 k7 = rhs(t_new, y_new);

    double err = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
      const double sc =
          opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err = std::max(err, std::abs(e) / sc);
    }
    if (!finite(y_new) || !finite(k7)) err = std::numeric_limits<double>::infinity();

    if (err <= 1.0) {
      t = t_new;
      y = y_new;
      k1 = k7;
      nodes.push_back({t, y, k1});
      const double grow = err == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(err, -0.2));
      h *= std::max(1.0, grow);
    } else {
      const double shrink = std::isfinite(err) ? std::max(0.1, 0.9 * std::pow(err, -0.2)) : 0.1;
      h *= shrink;
    }
  }
  return nodes;
}

double hermite_eval(const std::vector<OdeNode>& nodes, std::size_t k, double t) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), t,
                             [](const OdeNode& n, double v) { return n.t < v; });
  if (it == nodes.end()) return nodes.back().y[k];
  if (it->t == t || it == nodes.begin()) return it->y[k];
  const OdeNode& right = *it;
  const OdeNode& left = *(it - 1);
  const double h = right.t - left.t;
  const double s = (t - left.t) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  return h00 * left.y[k] + h10 * h * left.dy[k] + h01 * right.y[k] + h11 * h * right.dy[k];
}

}  // namespace entrogeo::numerics
