#pragma once

// Convex minimization with the regret machinery: a loss f is turned into
// payoffs u_k = -gamma_k g_k with g_k a subgradient at x_k, and the learner's
// adjusted iterates (best-so-far and step-weighted average) inherit the
// value guarantees.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "noregret/environments.hpp"
#include "noregret/geometry.hpp"
#include "noregret/linalg.hpp"
#include "noregret/parallel.hpp"
#include "noregret/schedules.hpp"

namespace noregret {

struct ConvexProgram {
  LossOracle oracle;
  /// Lipschitz constant of f in the dual of the body's norm.
  double M = 0.0;
  /// Exact minimum value when known (test problems ship with one).
  std::optional<double> f_min;

  /// Program with M and f_min taken from the oracle.
  static ConvexProgram from(LossOracle oracle);

  const ConvexBody& body() const noexcept { return oracle.body(); }
};

/// Best-so-far iterate x^min and step-weighted average x^gamma.
class AdjustedIterates {
 public:
  explicit AdjustedIterates(std::size_t dim);

  /// Adds stage k with iterate x, value f(x) and weight gamma > 0. Ties in
  /// the best value keep the earliest stage.
  void record(ConstSpan x, double fx, double gamma);

  std::size_t stages() const noexcept { return n_; }
  const Vector& x_min() const noexcept { return x_min_; }
  double f_at_min() const noexcept { return f_min_; }
  std::size_t argmin_stage() const noexcept { return argmin_stage_; }
  /// sum gamma_k x_k / sum gamma_k
  Vector x_gamma() const;
  double weight_sum() const noexcept { return weight_sum_; }
  /// sum gamma_k f(x_k) / sum gamma_k, the Jensen upper bound for f(x^gamma).
  double weighted_value_average() const noexcept { return weighted_values_ / weight_sum_; }

 private:
  std::size_t n_ = 0;
  Vector x_min_;
  double f_min_ = 0.0;
  std::size_t argmin_stage_ = 0;
  Vector weighted_sum_;
  double weight_sum_ = 0.0;
  double weighted_values_ = 0.0;
};

/// Everything a deterministic solver run produces.
struct OptimizationRun {
  AdjustedIterates adjusted{1};
  /// Played iterates x_1..x_n.
  std::vector<Vector> iterates;
  /// f(x_1)..f(x_n)
  std::vector<double> values;
  /// gamma_1..gamma_n
  std::vector<double> steps;
  /// Dual scores U_1..U_n (lazy methods) or pre-projection points a_1..a_n
  /// (greedy method).
  std::vector<Vector> scores;
  /// f(x_k^min) - f_min and f(x_k^gamma) - f_min per stage; empty when f_min
  /// is unknown.
  std::vector<double> gap_min;
  std::vector<double> gap_avg;
};

/// Lazy mirror descent: U_n = U_{n-1} - gamma_n g(x_n), x_{n+1} = Q_h(U_n),
/// x_1 = Q_h(0), with gamma_n = steps.value_at(n).
OptimizationRun md_lazy(const ConvexProgram& program, const Regularizer& reg,
                        const ParameterSchedule& steps, std::size_t n);

/// md_lazy with the Euclidean regularizer of the program's body.
OptimizationRun psg_lazy(const ConvexProgram& program, const ParameterSchedule& steps,
                         std::size_t n);

/// Greedy mirror descent a_n = grad F*(grad F(x_n) - gamma_n g(x_n)) followed
/// by a Bregman projection onto the body. Supported: entropy on the simplex
/// (multiplicative weights) and the Euclidean regularizer (projected
/// subgradient). Starts from Q_h(0) like the lazy variant.
OptimizationRun md_greedy(const ConvexProgram& program, const Regularizer& reg,
                          const ParameterSchedule& steps, std::size_t n);

/// Constant step gamma_n = 1 with the variable parameter
/// eta_n = sqrt(K depth / n) / M: x_{n+1} = Q_h(eta_n U_n).
OptimizationRun variable_parameter_solve(const ConvexProgram& program, const Regularizer& reg,
                                         std::size_t n);

/// (depth + M^2/(2K) sum gamma_k^2) / sum gamma_k
double value_bound_varstep(double depth, double K, double M, std::span<const double> steps);
/// value_bound_varstep with gamma_k = steps.value_at(k), k = 1..n.
double value_bound_varstep(double depth, double K, double M, const ParameterSchedule& steps,
                           std::size_t n);
/// 2 M sqrt(depth / K) (1/sqrt(n) + 1/(4n))
double value_bound_vartemp(double depth, double K, double M, std::size_t n);

/// Sample mean with its standard error and normal-approximation interval.
struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

MeanEstimate estimate_mean(std::span<const double> samples, double z = 1.96);

struct StochasticResult {
  std::size_t replications = 0;
  std::size_t stages = 0;
  /// Value gaps of x^min and x^gamma at the final stage.
  MeanEstimate gap_min;
  MeanEstimate gap_avg;
  /// Mean gaps across replications at every stage.
  std::vector<double> mean_gap_min;
  std::vector<double> mean_gap_avg;
  /// Dual-norm bound on the observed noisy subgradients.
  double observed_bound = 0.0;
  /// Final-stage x^gamma gap of each replication, in replication order.
  std::vector<double> final_gaps;
};

/// Lazy mirror descent driven by noisy subgradients. Replication r uses
/// noise.reseeded(derive_seed(seed, r)); replications run on up to `threads`
/// workers and are aggregated in replication order. Throws InvalidInput if
/// replications < 2 or the program has no known f_min.
StochasticResult mdsa_lazy(const ConvexProgram& program, const Regularizer& reg,
                           const NoisyOracle& noise, const ParameterSchedule& steps,
                           std::size_t n, std::size_t replications, std::uint64_t seed,
                           std::size_t threads = thread_budget());

/// mdsa_lazy with the Euclidean regularizer of the program's body.
StochasticResult spsg_lazy(const ConvexProgram& program, const NoisyOracle& noise,
                           const ParameterSchedule& steps, std::size_t n,
                           std::size_t replications, std::uint64_t seed,
                           std::size_t threads = thread_budget());

}  // namespace noregret
