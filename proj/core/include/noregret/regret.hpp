#pragma once

// Regret accounting and the regret bounds of the variable-parameter family
// as plain functions of their inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "noregret/geometry.hpp"
#include "noregret/linalg.hpp"
#include "noregret/schedules.hpp"

namespace noregret {

/// Running totals sum <u_k, x_k> and sum u_k.
class RegretLedger {
 public:
  struct Snapshot {
    double payoff = 0.0;
    Vector payoff_vector;
  };

  explicit RegretLedger(std::size_t dim, bool keep_snapshots = false);

  void record(ConstSpan u, ConstSpan x);

  std::size_t dim() const noexcept { return total_vector_.size(); }
  std::uint64_t stages() const noexcept { return n_; }
  double cumulative_payoff() const noexcept { return total_payoff_; }
  const Vector& cumulative_vector() const noexcept { return total_vector_; }

  /// Totals after each recorded stage; empty unless snapshots were requested.
  const std::vector<Snapshot>& snapshots() const noexcept { return snapshots_; }

  /// max_{x in C} sum <u_k, x> - sum <u_k, x_k>.
  double max_regret(const ConvexBody& body) const;

 private:
  Vector total_vector_;
  double total_payoff_ = 0.0;
  std::uint64_t n_ = 0;
  bool keep_snapshots_;
  std::vector<Snapshot> snapshots_;
};

double max_regret(const RegretLedger& ledger, const ConvexBody& body);

/// max_a sum_k (u_{k,a} - u_{k,a_k}) for sampled pure actions a_k (0-based).
double realized_regret(std::span<const Vector> payoffs, std::span<const std::size_t> actions);

/// depth / eta_n + 1/(2K) sum_{k=1}^{n} eta_{k-1} ||u_k||_*^2 with the
/// observed dual norms; n = dual_norms.size().
double bound_thm2(const Regularizer& reg, const ParameterSchedule& schedule,
                  std::span<const double> dual_norms);

/// Same bound with every ||u_k||_* replaced by M.
double bound_thm2(const Regularizer& reg, const ParameterSchedule& schedule, double M,
                  std::uint64_t n);

/// 2 M sqrt(depth / K) (1/4 + sqrt(n)), the anytime bound of the
/// sqrt(K depth / (M^2 n)) schedule.
double bound_cor2(double K, double depth, double M, std::uint64_t n);

/// eta_n = eta / sqrt(n) with ||u||_* <= M:
///   depth sqrt(n) / eta + M^2 eta (1/2 + sqrt(n)) / K.
/// Coincides with bound_cor2 at eta = sqrt(K depth) / M.
double bound_inv_sqrt(double depth, double K, double eta, double M, std::uint64_t n);

/// Doubling trick with eta_b = eta 2^(-b/2) on blocks [2^b, 2^(b+1)), scores
/// reset at each block start: sum over the blocks touched by stages 1..n of
/// depth / eta_b + eta_b M^2 L_b / (2K), L_b the stages of block b within n.
double bound_doubling(double depth, double K, double eta, double M, std::uint64_t n);

/// Smooth fictitious play, eta_n = eta / n, payoffs with ||u||_* <= M:
///   depth n / eta + M^2 (eta log n / (2K) + eta / K).
double bound_sfp(double depth, double K, double eta, std::uint64_t n, double M = 1.0);

/// Vanishingly smooth fictitious play, eta_n = eta n^-alpha, average form:
///   depth / (eta n^(1-alpha)) + M^2 (eta n^-alpha / (2 (1-alpha) K) + eta / (2 K n)).
double bound_vsfp(double depth, double K, double eta, double alpha, std::uint64_t n,
                  double M = 1.0);

/// Exponential weights with constant eta: log d / eta + n eta M^2 / 2.
double bound_ew(std::size_t d, double eta, std::uint64_t n, double M = 1.0);

/// sqrt(2 n log d): exponential weights tuned to a known horizon n.
double bound_ew_finite(std::size_t d, std::uint64_t n);

/// 2 sqrt(n log d) + sqrt(log d) / 2: exponential weights with the anytime
/// parameter sqrt(log d / n).
double bound_ew_prime(std::size_t d, std::uint64_t n);

/// Lazy online gradient descent, average form:
///   delta_sq / (2 n eta) + eta M^2 / 2.
double bound_ogd_average(double delta_sq, double eta, double M, std::uint64_t n);

/// Lazy online mirror descent with constant eta: depth / eta + eta M^2 n / (2K).
double bound_omd(double depth, double K, double eta, double M, std::uint64_t n);

/// max_{x in C} ||x||_2^2 - min_{x in C} ||x||_2^2. The maximum comes from
/// the extreme points (or the closed form for balls) and the minimum from
/// the projection of the origin, so no sampling is needed.
double squared_diameter_from_origin(const ConvexBody& body);

/// depth / eta_n + sum_k (1/eta_{k-1}) D_{h*}(y_k^-, y_{k-1}^+) with
/// y_k^+ = eta_k U_k and y_k^- = eta_{k-1} U_k.
double bound_thm3(const Regularizer& reg, const ParameterSchedule& schedule,
                  std::span<const Vector> payoffs);

/// Per-stage values tracked by RegretAccountant.
struct BoundSnapshot {
  std::uint64_t stage = 0;
  double empirical_regret = 0.0;
  double thm3 = 0.0;
  double thm2_exact = 0.0;
  double thm2_M = 0.0;
};

/// Incremental bookkeeping for a run: records (u_k, x_k) and keeps every
/// bound term current, so all stages of a long run cost O(n) overall.
class RegretAccountant {
 public:
  RegretAccountant(Regularizer reg, ParameterSchedule schedule, double M);

  /// Records stage k = stages() + 1 and returns the values at that stage.
  BoundSnapshot record(ConstSpan u, ConstSpan x);

  const RegretLedger& ledger() const noexcept { return ledger_; }
  const Regularizer& regularizer() const noexcept { return reg_; }
  const ParameterSchedule& schedule() const noexcept { return schedule_; }
  double M() const noexcept { return M_; }

 private:
  Regularizer reg_;
  ParameterSchedule schedule_;
  double M_;
  RegretLedger ledger_;
  double weighted_norms_ = 0.0;  // sum eta_{k-1} ||u_k||_*^2
  double weighted_M_ = 0.0;      // sum eta_{k-1} M^2
  double divergence_terms_ = 0.0;
};

}  // namespace noregret
