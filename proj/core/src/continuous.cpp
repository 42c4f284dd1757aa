#include "noregret/continuous.hpp"

#include <cmath>
#include <string>

#include "noregret/errors.hpp"
#include "noregret/parallel.hpp"

namespace noregret {

InterpolatedRun::InterpolatedRun(Regularizer reg, ParameterSchedule schedule,
                                 std::vector<Vector> payoffs, std::size_t nodes_per_interval)
    : reg_(std::move(reg)),
      schedule_(schedule),
      payoffs_(std::move(payoffs)),
      nodes_(nodes_per_interval) {
  if (nodes_ < 2 || nodes_ % 2 != 0) {
    throw InvalidInput("nodes_per_interval must be an even integer >= 2, got " +
                       std::to_string(nodes_));
  }
  prefix_.reserve(payoffs_.size() + 1);
  prefix_.emplace_back(reg_.dim(), 0.0);
  for (const auto& u : payoffs_) {
    require_dim(u, reg_.dim());
    require_finite(u, "payoff");
    prefix_.push_back(add_scaled(prefix_.back(), 1.0, u));
  }
}

InterpolatedRun InterpolatedRun::with_nodes(std::size_t nodes_per_interval) const {
  return InterpolatedRun(reg_, schedule_, payoffs_, nodes_per_interval);
}

void InterpolatedRun::check_stage(std::size_t k) const {
  if (k < 1 || k > payoffs_.size()) {
    throw InvalidInput("interval index " + std::to_string(k) + " outside [1, " +
                       std::to_string(payoffs_.size()) + "]");
  }
}

const Vector& InterpolatedRun::payoff_at(double t) const {
  if (!(t > 0.0) || t > static_cast<double>(payoffs_.size())) {
    throw InvalidInput("payoff time outside (0, n]");
  }
  const auto k = static_cast<std::size_t>(std::ceil(t));
  return payoffs_[k - 1];
}

double InterpolatedRun::eta_at(double t) const {
  if (!(t >= 0.0)) throw InvalidInput("negative time");
  const auto whole = static_cast<std::uint64_t>(std::floor(t));
  return schedule_.value_at(whole < 1 ? 1 : whole);
}

Vector InterpolatedRun::score_at(double t) const {
  if (!(t >= 0.0) || t > static_cast<double>(payoffs_.size())) {
    throw InvalidInput("score time outside [0, n]");
  }
  const auto whole = static_cast<std::size_t>(std::floor(t));
  Vector integral = prefix_[whole];
  if (whole < payoffs_.size()) {
    const double frac = t - static_cast<double>(whole);
    integral = add_scaled(integral, frac, payoffs_[whole]);
  }
  return scaled(integral, eta_at(t));
}

namespace {

// Simpson estimates on halves of [a, b] until they agree; projections make
// the integrand piecewise smooth, and a fixed grid misses the kinks.
template <class Fn>
double adaptive_simpson(Fn& f, double a, double fa, double fm, double b, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, fa, flm, m, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, fm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

constexpr double kQuadratureTolerance = 1e-13;
constexpr int kMaxRefinement = 40;

}  // namespace

double InterpolatedRun::interval_integral(std::size_t k) const {
  check_stage(k);
  const Vector& base = prefix_[k - 1];
  const Vector& u = payoffs_[k - 1];
  const double eta = schedule_.value_at(k - 1);
  const double h = 1.0 / static_cast<double>(nodes_);

  Vector y(base.size());
  auto integrand = [&](double s) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = eta * (base[i] + s * u[i]);
    return dot(u, reg_.choice(y));
  };

  // Composite Simpson on pairs of grid cells, each pair refined on its own.
  const std::size_t panels = nodes_ / 2;
  const double tol = kQuadratureTolerance / static_cast<double>(panels);
  double total = 0.0;
  double left = integrand(0.0);
  for (std::size_t j = 0; j < panels; ++j) {
    const double a = static_cast<double>(2 * j) * h;
    const double b = j + 1 == panels ? 1.0 : static_cast<double>(2 * j + 2) * h;
    const double mid = integrand(a + h);
    const double right = integrand(b);
    const double whole = (b - a) / 6.0 * (left + 4.0 * mid + right);
    total += adaptive_simpson(integrand, a, left, mid, b, right, whole, tol, kMaxRefinement);
    left = right;
  }
  return total;
}

Vector InterpolatedRun::discrete_action(std::size_t k) const {
  check_stage(k);
  return reg_.choice(scaled(prefix_[k - 1], schedule_.value_at(k - 1)));
}

double continuous_payoff_integral(const InterpolatedRun& run) {
  if (run.stages() == 0) throw InvalidInput("continuous run needs at least one stage");
  double total = 0.0;
  for (std::size_t k = 1; k <= run.stages(); ++k) total += run.interval_integral(k);
  return total;
}

ContinuousRegret continuous_regret(const InterpolatedRun& run) {
  const double integral = continuous_payoff_integral(run);
  const auto& reg = run.regularizer();
  ContinuousRegret out;
  out.regret = reg.body().support(run.cumulative(run.stages())) - integral;
  out.bound = reg.depth() / run.schedule().value_at(run.stages());
  return out;
}

IntervalGap interval_gap(const InterpolatedRun& run, std::size_t k) {
  const Vector x_k = run.discrete_action(k);
  const double eta = run.schedule().value_at(k - 1);
  IntervalGap gap;
  gap.k = k;
  gap.lhs = run.interval_integral(k) - dot(run.payoffs()[k - 1], x_k);
  gap.rhs = bregman_conjugate(run.regularizer(), scaled(run.cumulative(k), eta),
                              scaled(run.cumulative(k - 1), eta)) /
            eta;
  return gap;
}

std::vector<IntervalGap> interval_gaps(const InterpolatedRun& run, std::size_t threads) {
  std::vector<IntervalGap> gaps(run.stages());
  parallel_for(
      gaps.size(), [&](std::size_t i) { gaps[i] = interval_gap(run, i + 1); }, threads);
  return gaps;
}

GapBound gap_bound_check(const InterpolatedRun& run) {
  const auto& reg = run.regularizer();
  if (!(reg.K() > 0.0)) throw InvalidInput("gap bound needs K > 0");
  double continuous = 0.0;
  double discrete = 0.0;
  double weighted = 0.0;
  for (std::size_t k = 1; k <= run.stages(); ++k) {
    const auto& u = run.payoffs()[k - 1];
    continuous += run.interval_integral(k);
    discrete += dot(u, run.discrete_action(k));
    const double nu = norm(u, reg.dual_norm());
    weighted += run.schedule().value_at(k - 1) * nu * nu;
  }
  return {std::abs(continuous - discrete), weighted / (2.0 * reg.K())};
}

}  // namespace noregret
