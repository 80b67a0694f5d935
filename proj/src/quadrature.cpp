#include "entrogeo/errors.hpp"
#include "entrogeo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace entrogeo::numerics {

void EvalBudget::consume(std::size_t n) {
  if (used_ + n > limit_) {
    throw QuadratureFailure("quadrature evaluation budget of " + std::to_string(limit_) +
                            " exhausted");
  }
  used_ += n;
}

namespace {

// Kronrod abscissae (positive half, descending) and weights; every odd index
// is also a Gauss-7 node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const ScalarFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const ScalarFn& f, double a, double b, const QuadratureOptions& opts) {
  if (a == b) return {};
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw QuadratureFailure("integration limits must be finite");
  }
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }

  EvalBudget local(opts.max_evals);
  EvalBudget& budget = opts.budget != nullptr ? *opts.budget : local;
  const std::size_t start_used = budget.used();
  constexpr std::size_t kPointsPerRule = 15;
  constexpr std::size_t kMaxSegments = 5000;

  std::priority_queue<Segment> heap;
  budget.consume(kPointsPerRule);
  Segment first = gk15(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);

  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (heap.size() >= kMaxSegments) {
      throw QuadratureFailure("quadrature did not converge within " +
                              std::to_string(kMaxSegments) + " subintervals");
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureFailure("quadrature subinterval reached floating-point resolution");
    }
    heap.pop();
    budget.consume(2 * kPointsPerRule);
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (!std::isfinite(total)) throw QuadratureFailure("non-finite integrand value");
  }

  // Re-sum to shed the drift of the incremental updates.
  double value = 0.0;
  double error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  if (!std::isfinite(value)) throw QuadratureFailure("non-finite integrand value");
  return {value, error, budget.used() - start_used};
}

}  // namespace entrogeo::numerics
