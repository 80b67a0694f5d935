#pragma once

// Numerical building blocks: adaptive Gauss-Kronrod quadrature, an embedded
// Dormand-Prince 5(4) integrator for two-component systems, and Brent's root
// finder.

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace entrogeo::numerics {

using ScalarFn = std::function<double(double)>;

// Shared evaluation counter so nested integrals respect one global cap.
class EvalBudget {
 public:
  explicit EvalBudget(std::size_t limit) : limit_(limit) {}

  // Throws QuadratureFailure once the cap would be exceeded.
  void consume(std::size_t n);
  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::size_t max_evals = 1'000'000;
  // When set, evaluations are charged here instead of a local counter.
  EvalBudget* budget = nullptr;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evals = 0;
};

// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
// Reversed limits give the negated integral; a == b gives 0.
QuadratureResult integrate(const ScalarFn& f, double a, double b,
                           const QuadratureOptions& opts = {});

using State2 = std::array<double, 2>;
using Rhs2 = std::function<State2(double, const State2&)>;

struct OdeOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double initial_step = 0.0;  // 0 selects a step from the initial slope
  double max_step = 0.0;      // 0 means unbounded
  std::size_t max_steps = 1'000'000;
};

// Accepted step endpoint; dy is the right-hand side evaluated at (t, y).
struct OdeNode {
  double t = 0.0;
  State2 y{};
  State2 dy{};
};

// Integrates y' = rhs(t, y) from t0 to t_end (t_end > t0) with Dormand-Prince
// 5(4) and per-step error control. The returned nodes include both endpoints
// and support cubic Hermite dense output. Throws StepFailure when the step
// size underflows or the step budget runs out.
std::vector<OdeNode> integrate_dopri45(const Rhs2& rhs, double t0, const State2& y0,
                                       double t_end, const OdeOptions& opts = {});

// Cubic Hermite interpolation of component `k` of the node sequence at t.
// t must lie within [nodes.front().t, nodes.back().t].
double hermite_eval(const std::vector<OdeNode>& nodes, std::size_t k, double t);

// Brent's method for a root of f in [a, b]. Throws NoSignChange when f(a) and
// f(b) do not bracket a root.
double brent_root(const ScalarFn& f, double a, double b, double abs_tol = 1e-10,
                  int max_iter = 200);

}  // namespace entrogeo::numerics
