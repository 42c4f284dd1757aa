#pragma once

// Continuous-time view of a discrete run. Payoffs and parameters are
// interpolated as step functions,
//   u_t = u_ceil(t),   eta_t = eta_{max(floor(t), 1)}  (right-continuous),
// and the continuous learner plays x_t = Q_h(eta_t int_0^t u_s ds). On the
// interval (k-1, k) the score is y_t = eta_{k-1} (U_{k-1} + (t - k + 1) u_k),
// so every integral below is a sum of smooth one-dimensional integrals that
// composite Simpson handles per unit interval.

#include <cstddef>
#include <vector>

#include "noregret/geometry.hpp"
#include "noregret/linalg.hpp"
#include "noregret/schedules.hpp"

namespace noregret {

class InterpolatedRun {
 public:
  /// `nodes_per_interval` is the (even) number of grid cells per unit
  /// interval for composite Simpson; each pair of cells is then refined
  /// adaptively where the integrand bends.
  InterpolatedRun(Regularizer reg, ParameterSchedule schedule, std::vector<Vector> payoffs,
                  std::size_t nodes_per_interval = 64);

  const Regularizer& regularizer() const noexcept { return reg_; }
  const ParameterSchedule& schedule() const noexcept { return schedule_; }
  const std::vector<Vector>& payoffs() const noexcept { return payoffs_; }
  std::size_t stages() const noexcept { return payoffs_.size(); }
  std::size_t nodes_per_interval() const noexcept { return nodes_; }

  /// Same run with a different quadrature resolution.
  InterpolatedRun with_nodes(std::size_t nodes_per_interval) const;

  /// U_k = u_1 + ... + u_k, k in [0, n].
  const Vector& cumulative(std::size_t k) const { return prefix_.at(k); }

  /// u_t for t in (0, n].
  const Vector& payoff_at(double t) const;
  /// eta_t for t >= 0.
  double eta_at(double t) const;
  /// y_t = eta_t int_0^t u_s ds.
  Vector score_at(double t) const;

  /// int_{k-1}^{k} <u_t, x_t> dt for 1 <= k <= n.
  double interval_integral(std::size_t k) const;
  /// Discrete action x_k = Q_h(eta_{k-1} U_{k-1}).
  Vector discrete_action(std::size_t k) const;

 private:
  void check_stage(std::size_t k) const;

  Regularizer reg_;
  ParameterSchedule schedule_;
  std::vector<Vector> payoffs_;
  std::vector<Vector> prefix_;
  std::size_t nodes_;
};

/// int_0^n <u_t, x_t> dt.
double continuous_payoff_integral(const InterpolatedRun& run);

struct ContinuousRegret {
  double regret = 0.0;
  /// depth / eta_n
  double bound = 0.0;
  bool holds(double slack = 1e-6) const noexcept { return regret <= bound + slack; }
};

/// max_{x in C} <U_n, x> - int_0^n <u_t, x_t> dt against depth / eta_n.
ContinuousRegret continuous_regret(const InterpolatedRun& run);

struct IntervalGap {
  std::size_t k = 0;
  /// int_{k-1}^{k} <u_t, x_t> dt - <u_k, x_k> by quadrature.
  double lhs = 0.0;
  /// D_{h*}(y_k^-, y_{k-1}^+) / eta_{k-1} in closed form.
  double rhs = 0.0;
  double abs_diff() const noexcept { return lhs > rhs ? lhs - rhs : rhs - lhs; }
};

IntervalGap interval_gap(const InterpolatedRun& run, std::size_t k);

/// interval_gap for k = 1..n; intervals are evaluated on up to `threads`
/// workers and returned in index order.
std::vector<IntervalGap> interval_gaps(const InterpolatedRun& run, std::size_t threads = 1);

struct GapBound {
  /// |int_0^n <u_t, x_t> dt - sum_k <u_k, x_k>|
  double gap = 0.0;
  /// 1/(2K) sum_k eta_{k-1} ||u_k||_*^2
  double bound = 0.0;
  bool holds(double slack = 1e-6) const noexcept { return gap <= bound + slack; }
};

GapBound gap_bound_check(const InterpolatedRun& run);

}  // namespace noregret
