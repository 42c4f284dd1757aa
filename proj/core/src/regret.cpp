#include "noregret/regret.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noregret/errors.hpp"

namespace noregret {

namespace {

void require_positive_K(const Regularizer& reg) {
  if (!(reg.K() > 0.0)) throw InvalidInput("regret bound needs K > 0");
}

}  // namespace

// -- RegretLedger -------------------------------------------------------------

RegretLedger::RegretLedger(std::size_t dim, bool keep_snapshots)
    : total_vector_(dim, 0.0), keep_snapshots_(keep_snapshots) {
  if (dim == 0) throw InvalidInput("ledger dimension must be positive");
}

void RegretLedger::record(ConstSpan u, ConstSpan x) {
  require_dim(u, dim());
  require_dim(x, dim());
  total_payoff_ += dot(u, x);
  add_in_place(total_vector_, u);
  ++n_;
  if (keep_snapshots_) snapshots_.push_back({total_payoff_, total_vector_});
}

double RegretLedger::max_regret(const ConvexBody& body) const {
  return body.support(total_vector_) - total_payoff_;
}

double max_regret(const RegretLedger& ledger, const ConvexBody& body) {
  return ledger.max_regret(body);
}

double realized_regret(std::span<const Vector> payoffs, std::span<const std::size_t> actions) {
  if (payoffs.size() != actions.size()) {
    throw DimensionMismatch(payoffs.size(), actions.size());
  }
  if (payoffs.empty()) return 0.0;
  const std::size_t d = payoffs.front().size();
  Vector totals(d, 0.0);
  double realized = 0.0;
  for (std::size_t k = 0; k < payoffs.size(); ++k) {
    require_dim(payoffs[k], d);
    if (actions[k] >= d) throw InvalidInput("sampled action index out of range");
    add_in_place(totals, payoffs[k]);
    realized += payoffs[k][actions[k]];
  }
  return *std::max_element(totals.begin(), totals.end()) - realized;
}

// -- closed-form bounds -------------------------------------------------------

double bound_thm2(const Regularizer& reg, const ParameterSchedule& schedule,
                  std::span<const double> dual_norms) {
  require_positive_K(reg);
  double weighted = 0.0;
  for (std::size_t k = 1; k <= dual_norms.size(); ++k) {
    const double norm_k = dual_norms[k - 1];
    weighted += schedule.value_at(k - 1) * norm_k * norm_k;
  }
  return reg.depth() / schedule.value_at(dual_norms.size()) + weighted / (2.0 * reg.K());
}

double bound_thm2(const Regularizer& reg, const ParameterSchedule& schedule, double M,
                  std::uint64_t n) {
  require_positive_K(reg);
  return reg.depth() / schedule.value_at(n) + M * M * schedule.partial_sum(n) / (2.0 * reg.K());
}

double bound_cor2(double K, double depth, double M, std::uint64_t n) {
  if (!(K > 0.0)) throw InvalidInput("K must be positive");
  return 2.0 * M * std::sqrt(depth / K) * (0.25 + std::sqrt(static_cast<double>(n)));
}

double bound_inv_sqrt(double depth, double K, double eta, double M, std::uint64_t n) {
  if (!(K > 0.0) || !(eta > 0.0)) throw InvalidInput("bound_inv_sqrt needs K > 0, eta > 0");
  const double root = std::sqrt(static_cast<double>(n));
  return depth * root / eta + M * M * eta * (0.5 + root) / K;
}

double bound_doubling(double depth, double K, double eta, double M, std::uint64_t n) {
  if (!(K > 0.0) || !(eta > 0.0)) throw InvalidInput("bound_doubling needs K > 0, eta > 0");
  double total = 0.0;
  for (std::uint64_t start = 1, b = 0; start <= n; start *= 2, ++b) {
    const std::uint64_t stop = std::min<std::uint64_t>(2 * start - 1, n);
    const double eta_b = eta * std::pow(2.0, -0.5 * static_cast<double>(b));
    const double length = static_cast<double>(stop - start + 1);
    total += depth / eta_b + eta_b * M * M * length / (2.0 * K);
  }
  return total;
}

double bound_sfp(double depth, double K, double eta, std::uint64_t n, double M) {
  if (!(K > 0.0) || !(eta > 0.0) || n == 0) {
    throw InvalidInput("bound_sfp needs K > 0, eta > 0, n >= 1");
  }
  const double nn = static_cast<double>(n);
  return depth * nn / eta + M * M * (eta * std::log(nn) / (2.0 * K) + eta / K);
}

double bound_vsfp(double depth, double K, double eta, double alpha, std::uint64_t n, double M) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("bound_vsfp needs alpha in (0, 1)");
  if (!(K > 0.0) || !(eta > 0.0) || n == 0) {
    throw InvalidInput("bound_vsfp needs K > 0, eta > 0, n >= 1");
  }
  const double nn = static_cast<double>(n);
  return depth / (eta * std::pow(nn, 1.0 - alpha)) +
         M * M * (eta * std::pow(nn, -alpha) / (2.0 * (1.0 - alpha) * K) + eta / (2.0 * K * nn));
}

double bound_ew(std::size_t d, double eta, std::uint64_t n, double M) {
  if (d == 0 || !(eta > 0.0)) throw InvalidInput("bound_ew needs d >= 1 and eta > 0");
  return std::log(static_cast<double>(d)) / eta + static_cast<double>(n) * eta * M * M / 2.0;
}

double bound_ew_finite(std::size_t d, std::uint64_t n) {
  if (d == 0) throw InvalidInput("bound_ew_finite needs d >= 1");
  return std::sqrt(2.0 * static_cast<double>(n) * std::log(static_cast<double>(d)));
}

double bound_ew_prime(std::size_t d, std::uint64_t n) {
  if (d == 0) throw InvalidInput("bound_ew_prime needs d >= 1");
  const double log_d = std::log(static_cast<double>(d));
  return 2.0 * std::sqrt(static_cast<double>(n) * log_d) + 0.5 * std::sqrt(log_d);
}

double bound_ogd_average(double delta_sq, double eta, double M, std::uint64_t n) {
  if (!(eta > 0.0) || n == 0) throw InvalidInput("bound_ogd_average needs eta > 0, n >= 1");
  return delta_sq / (2.0 * static_cast<double>(n) * eta) + eta * M * M / 2.0;
}

double bound_omd(double depth, double K, double eta, double M, std::uint64_t n) {
  if (!(K > 0.0) || !(eta > 0.0)) throw InvalidInput("bound_omd needs K > 0, eta > 0");
  return depth / eta + eta * M * M * static_cast<double>(n) / (2.0 * K);
}

double squared_diameter_from_origin(const ConvexBody& body) {
  const Vector origin(body.dim(), 0.0);
  const double far = body.max_distance_l2(origin);
  const double near_sq = body.kind() == BodyKind::l2_ball
                             ? std::pow(std::max(0.0, norm(body.ball_center(), Norm::l2) -
                                                          body.ball_radius()),
                                        2)
                             : squared_l2(body.project(origin));
  return far * far - near_sq;
}

double bound_thm3(const Regularizer& reg, const ParameterSchedule& schedule,
                  std::span<const Vector> payoffs) {
  const std::size_t d = reg.dim();
  Vector U_prev(d, 0.0);
  double terms = 0.0;
  for (std::size_t k = 1; k <= payoffs.size(); ++k) {
    const double eta = schedule.value_at(k - 1);
    Vector U = add_scaled(U_prev, 1.0, payoffs[k - 1]);
    terms += bregman_conjugate(reg, scaled(U, eta), scaled(U_prev, eta)) / eta;
    U_prev = std::move(U);
  }
  return reg.depth() / schedule.value_at(payoffs.size()) + terms;
}

// -- RegretAccountant ---------------------------------------------------------

RegretAccountant::RegretAccountant(Regularizer reg, ParameterSchedule schedule, double M)
    : reg_(std::move(reg)), schedule_(schedule), M_(M), ledger_(reg_.dim()) {
  require_positive_K(reg_);
  if (!(M >= 0.0)) throw InvalidInput("payoff bound M must be nonnegative");
}

BoundSnapshot RegretAccountant::record(ConstSpan u, ConstSpan x) {
  const std::uint64_t k = ledger_.stages() + 1;
  const double eta_prev = schedule_.value_at(k - 1);

  const Vector& U_prev = ledger_.cumulative_vector();
  const Vector U = add_scaled(U_prev, 1.0, u);
  divergence_terms_ +=
      bregman_conjugate(reg_, scaled(U, eta_prev), scaled(U_prev, eta_prev)) / eta_prev;

  const double norm_u = norm(u, reg_.dual_norm());
  weighted_norms_ += eta_prev * norm_u * norm_u;
  weighted_M_ += eta_prev * M_ * M_;

  ledger_.record(u, x);

  const double head = reg_.depth() / schedule_.value_at(k);
  BoundSnapshot snap;
  snap.stage = k;
  snap.empirical_regret = ledger_.max_regret(reg_.body());
  snap.thm3 = head + divergence_terms_;
  snap.thm2_exact = head + weighted_norms_ / (2.0 * reg_.K());
  snap.thm2_M = head + weighted_M_ / (2.0 * reg_.K());
  return snap;
}

}  // namespace noregret
