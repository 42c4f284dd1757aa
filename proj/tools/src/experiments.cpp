#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "noregret/continuous.hpp"
#include "noregret/environments.hpp"
#include "noregret/errors.hpp"
#include "noregret/optimize.hpp"
#include "noregret/parallel.hpp"
#include "noregret/regret.hpp"
#include "noregret/strategies.hpp"
#include "noregret_cli/app.hpp"

namespace noregret::cli {

namespace {

class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
    for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
    os_ << '\n';
  }

  void row(std::uint64_t index, std::initializer_list<double> values) {
    os_ << index;
    char buf[40];
    for (double v : values) {
      std::snprintf(buf, sizeof buf, "%.12g", v);
      os_ << ',' << buf;
    }
    os_ << '\n';
  }

 private:
  std::ostream& os_;
};

// First failed check of a run.
struct Violation {
  std::uint64_t stage = 0;
  std::string what;
  double magnitude = 0.0;
};

class ViolationTracker {
 public:
  void check(std::uint64_t stage, const std::string& what, double value, double limit) {
    const double slack = 1e-8 * std::max(1.0, std::abs(limit));
    if (!(value <= limit + slack) && !first_) first_ = Violation{stage, what, value - limit};
  }

  int finish(std::ostream& log) const {
    if (!first_) return kExitOk;
    log << "bound violation at stage " << first_->stage << ": " << first_->what << " exceeded by "
        << first_->magnitude << '\n';
    return kExitViolation;
  }

 private:
  std::optional<Violation> first_;
};

struct Learner {
  Algorithm algorithm;
  Regularizer reg;
  ParameterSchedule schedule;
  bool named;  // schedule is the algorithm's own
  double eta;
  double alpha;
};

std::string resolve_regularizer_kind(const ExperimentConfig& cfg, Algorithm algorithm) {
  std::string kind = cfg.get("regularizer.kind");
  const bool entropy_only = algorithm == Algorithm::ew || algorithm == Algorithm::ew_prime;
  if (kind == "auto") kind = algorithm == Algorithm::ogd_l ? "euclidean" : "entropy";
  if (kind != "entropy" && kind != "euclidean") {
    throw ConfigError("key 'regularizer.kind': unknown value '" + kind + "'");
  }
  if (entropy_only && kind != "entropy") {
    throw ConfigError("key 'regularizer.kind': " + std::string(to_string(algorithm)) +
                      " requires entropy");
  }
  if (algorithm == Algorithm::ogd_l && kind != "euclidean") {
    throw ConfigError("key 'regularizer.kind': OGD_L requires euclidean");
  }
  return kind;
}

ConvexBody build_body(const ExperimentConfig& cfg, std::size_t d, const std::string& fallback) {
  std::string kind = cfg.get("body.kind");
  if (kind == "auto") kind = fallback;
  if (kind == "simplex") return ConvexBody::simplex(d, Norm::l2);
  if (kind == "box") return ConvexBody::unit_box(d);
  if (kind == "ball") return ConvexBody::ball(Vector(d, 0.0), cfg.get_double("body.radius"));
  throw ConfigError("key 'body.kind': unknown value '" + kind + "'");
}

Regularizer build_regularizer(const ExperimentConfig& cfg, const std::string& kind, std::size_t d,
                              const std::string& body_fallback) {
  if (kind == "entropy") {
    std::string body = cfg.get("body.kind");
    if (body != "auto" && body != "simplex") {
      throw ConfigError("key 'body.kind': the entropy regularizer lives on the simplex");
    }
    return Regularizer::entropy(d);
  }
  return Regularizer::euclidean(build_body(cfg, d, body_fallback));
}

Learner build_learner(const ExperimentConfig& cfg) {
  const Algorithm algorithm = parse_algorithm(cfg.get("strategy.name"));
  const double eta = cfg.get_double("strategy.eta");
  const double alpha = cfg.get_double("strategy.alpha");
  const auto d = static_cast<std::size_t>(cfg.get_uint("d"));
  if (d == 0) throw ConfigError("key 'd' must be positive");

  Regularizer reg = build_regularizer(cfg, resolve_regularizer_kind(cfg, algorithm), d, "simplex");
  const std::string kind = cfg.get("schedule.kind");
  if (kind == "auto") {
    StrategyParams params;
    params.dim = d;
    params.body = reg.body();
    params.eta = eta;
    params.alpha = alpha;
    params.regularizer = reg;
    const Strategy s = make_named(algorithm, params);
    return {algorithm, s.regularizer(), s.schedule(), true, eta, alpha};
  }
  const double s_eta = cfg.get("schedule.eta") == "auto" ? eta : cfg.get_double("schedule.eta");
  const double s_alpha =
      cfg.get("schedule.alpha") == "auto" ? alpha : cfg.get_double("schedule.alpha");
  ParameterSchedule schedule = ParameterSchedule::constant(s_eta);
  switch (parse_schedule_kind(kind)) {
    case ScheduleKind::constant: break;
    case ScheduleKind::inv_sqrt: schedule = ParameterSchedule::inv_sqrt(s_eta); break;
    case ScheduleKind::harmonic: schedule = ParameterSchedule::harmonic(s_eta); break;
    case ScheduleKind::power: schedule = ParameterSchedule::power(s_eta, s_alpha); break;
    case ScheduleKind::anytime:
      schedule = ParameterSchedule::anytime(reg.K(), reg.depth(), cfg.get_double("env.M"));
      break;
    case ScheduleKind::doubling: schedule = ParameterSchedule::doubling(s_eta); break;
  }
  return {algorithm, reg, schedule, false, s_eta, s_alpha};
}

std::uint64_t env_seed(const ExperimentConfig& cfg) {
  return cfg.get("env.seed") == "auto" ? cfg.get_uint("seed") : cfg.get_uint("env.seed");
}

PayoffStream build_stream(const ExperimentConfig& cfg, const Regularizer& reg) {
  const double M = cfg.get_double("env.M");
  const std::uint64_t seed = env_seed(cfg);
  switch (parse_stream_kind(cfg.get("env.kind"))) {
    case StreamKind::iid_uniform: return PayoffStream::iid_uniform(reg.dim(), M, reg.norm(), seed);
    case StreamKind::adversarial_best_response:
      return PayoffStream::adversarial_best_response(reg.dim(), M, reg.norm(), seed);
    case StreamKind::fixed: break;
  }
  throw ConfigError("key 'env.kind': fixed streams are not available from the command line");
}

// Closed-form bound of the named algorithm, or nullopt when the schedule was
// overridden.
std::optional<double> named_bound(const Learner& l, double M, std::uint64_t n) {
  const Regularizer& reg = l.reg;
  if (l.schedule.kind() == ScheduleKind::doubling) {
    return bound_doubling(reg.depth(), reg.K(), l.eta, M, n);
  }
  if (!l.named) return std::nullopt;
  switch (l.algorithm) {
    case Algorithm::ew: return bound_ew(reg.dim(), l.eta, n, M);
    case Algorithm::ew_prime: return bound_inv_sqrt(reg.depth(), reg.K(), l.eta, M, n);
    case Algorithm::sfp: return bound_sfp(reg.depth(), reg.K(), l.eta, n, M);
    case Algorithm::vsfp:
      return static_cast<double>(n) * bound_vsfp(reg.depth(), reg.K(), l.eta, l.alpha, n, M);
    case Algorithm::ogd_l:
      return static_cast<double>(n) *
             bound_ogd_average(squared_diameter_from_origin(reg.body()), l.eta, M, n);
    case Algorithm::omd_l: return bound_omd(reg.depth(), reg.K(), l.eta, M, n);
  }
  return std::nullopt;
}

std::uint64_t horizon(const ExperimentConfig& cfg) {
  const std::uint64_t n = cfg.get_uint("n");
  if (n == 0) throw ConfigError("key 'n' must be positive");
  return n;
}

// With a restarting schedule the bound terms are accumulated block by block:
// each block is a fresh constant-parameter run, and the regret of the whole
// run is at most the sum of the per-block regrets.
int run_regret(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& log) {
  const Learner learner = build_learner(cfg);
  const std::uint64_t n = horizon(cfg);
  const double M = cfg.get_double("env.M");
  const bool restarts = learner.schedule.kind() == ScheduleKind::doubling;

  Strategy strategy(learner.reg, learner.schedule);
  PayoffStream stream = build_stream(cfg, learner.reg);
  RegretLedger ledger(learner.reg.dim());
  auto block_schedule = [&](std::uint64_t k) {
    return restarts ? ParameterSchedule::constant(learner.schedule.value_at(k))
                    : learner.schedule;
  };
  std::optional<RegretAccountant> accountant;
  accountant.emplace(learner.reg, block_schedule(1), M);
  BoundSnapshot closed;   // finished blocks
  BoundSnapshot current;  // running block

  CsvWriter out(csv, {"stage", "empirical_regret", "bound_thm2_exact", "bound_thm2_M",
                      "bound_thm3", "bound_named"});
  ViolationTracker violations;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (restarts && learner.schedule.block_start(k)) {
      closed.thm3 += current.thm3;
      closed.thm2_exact += current.thm2_exact;
      closed.thm2_M += current.thm2_M;
      accountant.emplace(learner.reg, block_schedule(k), M);
    }
    const Vector x = strategy.action();
    const Vector u = stream.next(x);
    ledger.record(u, x);
    current = accountant->record(u, x);
    strategy.step(u);

    const double empirical = ledger.max_regret(learner.reg.body());
    const double thm3 = closed.thm3 + current.thm3;
    const double thm2_exact = closed.thm2_exact + current.thm2_exact;
    const double thm2_M = closed.thm2_M + current.thm2_M;
    const auto named = named_bound(learner, M, k);
    const double named_value = named.value_or(thm2_M);
    out.row(k, {empirical, thm2_exact, thm2_M, thm3, named_value});
    violations.check(k, "bound_thm3", empirical, thm3);
    violations.check(k, "bound_thm2_exact", empirical, thm2_exact);
    violations.check(k, "bound_thm2_M", empirical, thm2_M);
    violations.check(k, "bound_named", empirical, named_value);
  }
  log << "final empirical regret " << ledger.max_regret(learner.reg.body()) << " after " << n
      << " stages\n";
  return violations.finish(log);
}

int run_continuous_check(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& log) {
  const Learner learner = build_learner(cfg);
  if (learner.schedule.kind() == ScheduleKind::doubling) {
    throw ConfigError("key 'schedule.kind': continuous-check needs a non-restarting schedule");
  }
  const std::uint64_t n = horizon(cfg);
  const auto nodes = static_cast<std::size_t>(cfg.get_uint("nodes_per_interval"));
  const double tolerance = cfg.get_double("continuous.tolerance");

  Strategy strategy(learner.reg, learner.schedule);
  PayoffStream stream = build_stream(cfg, learner.reg);
  Trajectory trajectory = play_sequence(strategy, stream, n);
  const InterpolatedRun run(learner.reg, learner.schedule, std::move(trajectory.payoffs), nodes);

  CsvWriter out(csv, {"interval", "lhs", "rhs", "abs_diff"});
  ViolationTracker violations;
  double worst = 0.0;
  for (const IntervalGap& gap : interval_gaps(run, thread_budget())) {
    out.row(gap.k, {gap.lhs, gap.rhs, gap.abs_diff()});
    worst = std::max(worst, gap.abs_diff());
    violations.check(gap.k, "interval identity |lhs - rhs|", gap.abs_diff(), tolerance);
  }
  const ContinuousRegret cont = continuous_regret(run);
  log << "max |lhs - rhs| = " << worst << "; continuous regret " << cont.regret
      << " vs depth/eta_n " << cont.bound << '\n';
  violations.check(n, "continuous regret", cont.regret, cont.bound + 1e-6);
  return violations.finish(log);
}

ConvexProgram build_program(const ExperimentConfig& cfg, Regularizer& reg) {
  const auto d = static_cast<std::size_t>(cfg.get_uint("d"));
  if (d == 0) throw ConfigError("key 'd' must be positive");
  std::string kind = cfg.get("regularizer.kind");
  if (kind == "auto") kind = "euclidean";
  if (kind != "entropy" && kind != "euclidean") {
    throw ConfigError("key 'regularizer.kind': unknown value '" + kind + "'");
  }
  reg = build_regularizer(cfg, kind, d, "ball");
  const double scale = cfg.get_double("convex.target_scale");
  const std::string problem = cfg.get("convex.problem");
  if (problem == "distance") {
    Vector target(d, 0.0);
    target[0] = scale;
    return ConvexProgram::from(LossOracle::squared_distance(target, reg.body()));
  }
  if (problem != "quadratic") {
    throw ConfigError("key 'convex.problem': unknown value '" + problem + "'");
  }
  // f(x) = 1/2 (x - t)' A (x - t), A = diag(1..2), t of length `scale` along
  // an alternating direction; f_min = 0 once t lies in the body.
  Vector target(d);
  for (std::size_t i = 0; i < d; ++i) target[i] = (i % 2 == 0 ? 1.0 : -0.5) / (1.0 + i);
  target = scaled(target, scale / norm(target, Norm::l2));
  if (reg.kind() == RegularizerKind::entropy) {
    target = reg.body().project(target);
  }
  if (!reg.body().contains(target, 1e-12)) {
    throw ConfigError("key 'convex.target_scale': the quadratic's minimiser must lie in the body");
  }
  std::vector<Vector> A(d, Vector(d, 0.0));
  Vector b(d);
  double offset = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    A[i][i] = d == 1 ? 1.0 : 1.0 + static_cast<double>(i) / static_cast<double>(d - 1);
    b[i] = -A[i][i] * target[i];
    offset += 0.5 * A[i][i] * target[i] * target[i];
  }
  ConvexProgram program = ConvexProgram::from(LossOracle::quadratic(A, b, reg.body(), offset));
  program.f_min = 0.0;
  return program;
}

int run_convex(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& log) {
  Regularizer reg = Regularizer::entropy(1);
  const ConvexProgram program = build_program(cfg, reg);
  const std::uint64_t n = horizon(cfg);
  const auto steps = ParameterSchedule::inv_sqrt(cfg.get_double("strategy.eta"));
  const std::string method = cfg.get("convex.method");
  OptimizationRun run;
  if (method == "varstep") {
    run = md_lazy(program, reg, steps, n);
  } else if (method == "vartemp") {
    run = variable_parameter_solve(program, reg, n);
  } else {
    throw ConfigError("key 'convex.method': unknown value '" + method + "'");
  }

  CsvWriter out(csv, {"stage", "f_gap_min", "f_gap_avg", "bound_varstep", "bound_vartemp"});
  ViolationTracker violations;
  double sum = 0.0;
  double sum_sq = 0.0;
  const double depth = reg.depth();
  const double K = reg.K();
  const double M = program.M;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double g = steps.value_at(k);
    sum += g;
    sum_sq += g * g;
    const double varstep = (depth + M * M * sum_sq / (2.0 * K)) / sum;
    const double vartemp = value_bound_vartemp(depth, K, M, k);
    const double gap_min = run.gap_min[k - 1];
    const double gap_avg = run.gap_avg[k - 1];
    out.row(k, {gap_min, gap_avg, varstep, vartemp});
    const double limit = method == "varstep" ? varstep : vartemp;
    violations.check(k, "f_gap_min", gap_min, limit);
    violations.check(k, "f_gap_avg", gap_avg, limit);
  }
  log << "final gaps: min " << run.gap_min.back() << ", avg " << run.gap_avg.back() << '\n';
  return violations.finish(log);
}

int run_stochastic(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& log) {
  Regularizer reg = Regularizer::entropy(1);
  const ConvexProgram program = build_program(cfg, reg);
  const std::uint64_t n = horizon(cfg);
  const auto steps = ParameterSchedule::inv_sqrt(cfg.get_double("strategy.eta"));
  const auto replications = static_cast<std::size_t>(cfg.get_uint("stochastic.replications"));
  const double z = cfg.get_double("stochastic.z");
  const NoisyOracle noise(program.oracle, cfg.get_double("env.noise_scale"), env_seed(cfg));

  const StochasticResult result = mdsa_lazy(program, reg, noise, steps, n, replications,
                                            cfg.get_uint("seed"), thread_budget());

  CsvWriter out(csv, {"stage", "f_gap_min", "f_gap_avg", "bound_varstep", "bound_vartemp"});
  const double depth = reg.depth();
  const double K = reg.K();
  const double M = result.observed_bound;
  double sum = 0.0;
  double sum_sq = 0.0;
  double final_bound = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double g = steps.value_at(k);
    sum += g;
    sum_sq += g * g;
    final_bound = (depth + M * M * sum_sq / (2.0 * K)) / sum;
    out.row(k, {result.mean_gap_min[k - 1], result.mean_gap_avg[k - 1], final_bound,
                value_bound_vartemp(depth, K, M, k)});
  }
  log << "mean final gap (x^gamma) " << result.gap_avg.mean << " +- " << result.gap_avg.std_error
      << " over " << result.replications << " replications; bound " << final_bound << '\n';
  ViolationTracker violations;
  violations.check(n, "mean f_gap_avg", result.gap_avg.mean - z * result.gap_avg.std_error,
                   final_bound);
  violations.check(n, "mean f_gap_min", result.gap_min.mean - z * result.gap_min.std_error,
                   final_bound);
  return violations.finish(log);
}

}  // namespace

int run_experiment(const ExperimentConfig& config, std::ostream& csv, std::ostream& log) {
  switch (config.experiment()) {
    case Experiment::regret: return run_regret(config, csv, log);
    case Experiment::continuous_check: return run_continuous_check(config, csv, log);
    case Experiment::convex: return run_convex(config, csv, log);
    case Experiment::stochastic: return run_stochastic(config, csv, log);
  }
  throw ConfigError("unknown experiment");
}

}  // namespace noregret::cli
