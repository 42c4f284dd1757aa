#include "noregret/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "noregret/errors.hpp"

namespace noregret {

ConvexProgram ConvexProgram::from(LossOracle oracle) {
  ConvexProgram program{std::move(oracle), 0.0, std::nullopt};
  program.M = program.oracle.lipschitz();
  program.f_min = program.oracle.known_minimum();
  return program;
}

// -- AdjustedIterates ---------------------------------------------------------

AdjustedIterates::AdjustedIterates(std::size_t dim) : weighted_sum_(dim, 0.0) {}

void AdjustedIterates::record(ConstSpan x, double fx, double gamma) {
  require_dim(x, weighted_sum_.size());
  if (!(gamma > 0.0)) throw InvalidInput("step weights must be positive");
  ++n_;
  if (n_ == 1 || fx < f_min_) {
    x_min_.assign(x.begin(), x.end());
    f_min_ = fx;
    argmin_stage_ = n_;
  }
  for (std::size_t i = 0; i < x.size(); ++i) weighted_sum_[i] += gamma * x[i];
  weight_sum_ += gamma;
  weighted_values_ += gamma * fx;
}

Vector AdjustedIterates::x_gamma() const {
  if (n_ == 0) throw InvalidInput("no iterates recorded");
  return scaled(weighted_sum_, 1.0 / weight_sum_);
}

// -- solvers ------------------------------------------------------------------

namespace {

using StepFn = std::function<double(std::size_t)>;
using GradientFn = std::function<Vector(ConstSpan)>;

// Shared bookkeeping for one played iterate.
void record_stage(const ConvexProgram& program, OptimizationRun& run, const Vector& x,
                  double gamma) {
  const double fx = program.oracle.value(x);
  run.adjusted.record(x, fx, gamma);
  run.iterates.push_back(x);
  run.values.push_back(fx);
  run.steps.push_back(gamma);
  if (program.f_min) {
    run.gap_min.push_back(run.adjusted.f_at_min() - *program.f_min);
    run.gap_avg.push_back(program.oracle.value(run.adjusted.x_gamma()) - *program.f_min);
  }
}

// U_k = U_{k-1} - gamma_k g_k,  x_{k+1} = Q_h(eta_k U_k).
OptimizationRun dual_averaging(const ConvexProgram& program, const Regularizer& reg,
                               const StepFn& step, const StepFn& parameter, std::size_t n,
                               const GradientFn& gradient) {
  if (reg.dim() != program.body().dim()) {
    throw DimensionMismatch(program.body().dim(), reg.dim());
  }
  OptimizationRun run;
  run.adjusted = AdjustedIterates(reg.dim());
  run.iterates.reserve(n);
  run.values.reserve(n);
  run.steps.reserve(n);
  run.scores.reserve(n);

  Vector U(reg.dim(), 0.0);
  Vector x = reg.choice(U);
  for (std::size_t k = 1; k <= n; ++k) {
    const double gamma = step(k);
    record_stage(program, run, x, gamma);
    const Vector g = gradient(x);
    for (std::size_t i = 0; i < U.size(); ++i) U[i] -= gamma * g[i];
    run.scores.push_back(U);
    x = reg.choice(scaled(U, parameter(k)));
  }
  return run;
}

StepFn steps_of(const ParameterSchedule& steps) {
  return [steps](std::size_t k) { return steps.value_at(k); };
}

}  // namespace

OptimizationRun md_lazy(const ConvexProgram& program, const Regularizer& reg,
                        const ParameterSchedule& steps, std::size_t n) {
  return dual_averaging(
      program, reg, steps_of(steps), [](std::size_t) { return 1.0; }, n,
      [&](ConstSpan x) { return program.oracle.subgradient(x); });
}

OptimizationRun psg_lazy(const ConvexProgram& program, const ParameterSchedule& steps,
                         std::size_t n) {
  return md_lazy(program, Regularizer::euclidean(program.body()), steps, n);
}

OptimizationRun md_greedy(const ConvexProgram& program, const Regularizer& reg,
                          const ParameterSchedule& steps, std::size_t n) {
  if (reg.kind() == RegularizerKind::generic) {
    throw Unsupported("greedy mirror descent needs an entropy or Euclidean regularizer");
  }
  if (reg.dim() != program.body().dim()) {
    throw DimensionMismatch(program.body().dim(), reg.dim());
  }
  OptimizationRun run;
  run.adjusted = AdjustedIterates(reg.dim());
  Vector x = reg.choice(Vector(reg.dim(), 0.0));
  for (std::size_t k = 1; k <= n; ++k) {
    const double gamma = steps.value_at(k);
    record_stage(program, run, x, gamma);
    const Vector g = program.oracle.subgradient(x);
    if (reg.kind() == RegularizerKind::entropy) {
      // grad F(x) = 1 + log x, grad F*(z) = exp(z - 1); the Bregman
      // projection onto the simplex is a normalization.
      Vector a(x.size(), 0.0);
      double top = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0) top = std::max(top, std::log(x[i]) - gamma * g[i]);
      }
      double total = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0) {
          a[i] = std::exp(std::log(x[i]) - gamma * g[i] - top);
          total += a[i];
        }
      }
      run.scores.push_back(a);
      for (double& v : a) v /= total;
      x = std::move(a);
    } else {
      Vector a = add_scaled(x, -gamma, g);
      run.scores.push_back(a);
      x = reg.body().project(a);
    }
  }
  return run;
}

OptimizationRun variable_parameter_solve(const ConvexProgram& program, const Regularizer& reg,
                                         std::size_t n) {
  if (!(program.M > 0.0)) throw InvalidInput("variable-parameter solver needs M > 0");
  const auto parameter = ParameterSchedule::anytime(reg.K(), reg.depth(), program.M);
  return dual_averaging(
      program, reg, [](std::size_t) { return 1.0; },
      [parameter](std::size_t k) { return parameter.value_at(k); }, n,
      [&](ConstSpan x) { return program.oracle.subgradient(x); });
}

// -- value bounds -------------------------------------------------------------

double value_bound_varstep(double depth, double K, double M, std::span<const double> steps) {
  if (!(K > 0.0)) throw InvalidInput("K must be positive");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double g : steps) {
    sum += g;
    sum_sq += g * g;
  }
  if (!(sum > 0.0)) throw InvalidInput("step sizes must have a positive sum");
  return (depth + M * M * sum_sq / (2.0 * K)) / sum;
}

double value_bound_varstep(double depth, double K, double M, const ParameterSchedule& steps,
                           std::size_t n) {
  std::vector<double> gammas(n);
  for (std::size_t k = 1; k <= n; ++k) gammas[k - 1] = steps.value_at(k);
  return value_bound_varstep(depth, K, M, gammas);
}

double value_bound_vartemp(double depth, double K, double M, std::size_t n) {
  if (!(K > 0.0) || n == 0) throw InvalidInput("value_bound_vartemp needs K > 0, n >= 1");
  const double nn = static_cast<double>(n);
  return 2.0 * M * std::sqrt(depth / K) * (1.0 / std::sqrt(nn) + 1.0 / (4.0 * nn));
}

// -- stochastic ---------------------------------------------------------------

MeanEstimate estimate_mean(std::span<const double> samples, double z) {
  if (samples.size() < 2) throw InvalidInput("a mean estimate needs at least two samples");
  const double count = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= count;
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= count - 1.0;
  MeanEstimate est;
  est.mean = mean;
  est.std_error = std::sqrt(var / count);
  est.lower = mean - z * est.std_error;
  est.upper = mean + z * est.std_error;
  return est;
}

StochasticResult mdsa_lazy(const ConvexProgram& program, const Regularizer& reg,
                           const NoisyOracle& noise, const ParameterSchedule& steps,
                           std::size_t n, std::size_t replications, std::uint64_t seed,
                           std::size_t threads) {
  if (replications < 2) throw InvalidInput("stochastic runs need at least 2 replications");
  if (!program.f_min) throw InvalidInput("stochastic runs need a known f_min");
  if (n == 0) throw InvalidInput("stochastic runs need at least one stage");

  std::vector<OptimizationRun> runs(replications);
  parallel_for(
      replications,
      [&](std::size_t r) {
        NoisyOracle local = noise.reseeded(derive_seed(seed, r));
        runs[r] = dual_averaging(
            program, reg, steps_of(steps), [](std::size_t) { return 1.0; }, n,
            [&local](ConstSpan x) { return local.subgradient(x); });
      },
      threads);

  StochasticResult result;
  result.replications = replications;
  result.stages = n;
  result.observed_bound = noise.observed_bound();
  result.mean_gap_min.assign(n, 0.0);
  result.mean_gap_avg.assign(n, 0.0);
  std::vector<double> final_min(replications);
  std::vector<double> final_avg(replications);
  for (std::size_t r = 0; r < replications; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      result.mean_gap_min[k] += runs[r].gap_min[k];
      result.mean_gap_avg[k] += runs[r].gap_avg[k];
    }
    final_min[r] = runs[r].gap_min.back();
    final_avg[r] = runs[r].gap_avg.back();
  }
  for (std::size_t k = 0; k < n; ++k) {
    result.mean_gap_min[k] /= static_cast<double>(replications);
    result.mean_gap_avg[k] /= static_cast<double>(replications);
  }
  result.gap_min = estimate_mean(final_min);
  result.gap_avg = estimate_mean(final_avg);
  result.final_gaps = std::move(final_avg);
  return result;
}

StochasticResult spsg_lazy(const ConvexProgram& program, const NoisyOracle& noise,
                           const ParameterSchedule& steps, std::size_t n,
                           std::size_t replications, std::uint64_t seed, std::size_t threads) {
  return mdsa_lazy(program, Regularizer::euclidean(program.body()), noise, steps, n,
                   replications, seed, threads);
}

}  // namespace noregret
