#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace noregret {

enum class ScheduleKind { constant, inv_sqrt, harmonic, power, anytime, doubling };

std::string_view to_string(ScheduleKind kind);
ScheduleKind parse_schedule_kind(std::string_view name);

/// Positive nonincreasing parameter sequence eta_n, n >= 1, extended to
/// n = 0 by eta_0 := eta_1.
class ParameterSchedule {
 public:
  static ParameterSchedule constant(double eta);
  /// eta / sqrt(n)
  static ParameterSchedule inv_sqrt(double eta);
  /// eta / n
  static ParameterSchedule harmonic(double eta);
  /// eta * n^(-alpha), alpha in (0, 1)
  static ParameterSchedule power(double eta, double alpha);
  /// sqrt(K * depth / (M^2 n)): the anytime choice that balances both terms
  /// of the strongly-convex regret bound.
  static ParameterSchedule anytime(double K, double depth, double M);
  /// Doubling trick: stages [2^b, 2^(b+1)) form block b, on which the
  /// parameter is eta * 2^(-b/2), the horizon-tuned value for a block of
  /// length 2^b. Strategies restart their score at each block start.
  static ParameterSchedule doubling(double eta);

  ScheduleKind kind() const noexcept { return kind_; }
  /// Leading constant (eta, or sqrt(K depth)/M for the anytime kind).
  double eta() const noexcept { return eta_; }
  double alpha() const noexcept { return alpha_; }

  double value_at(std::uint64_t n) const;

  /// sum_{k=1}^{n} eta_{k-1}, with compensated summation.
  double partial_sum(std::uint64_t n) const;

  /// True when stage n opens a new doubling block (n = 2, 4, 8, ...).
  /// Always false for the other kinds.
  bool block_start(std::uint64_t n) const noexcept;

  std::string describe() const;

 private:
  ParameterSchedule(ScheduleKind kind, double eta, double alpha)
      : kind_(kind), eta_(eta), alpha_(alpha) {}

  ScheduleKind kind_;
  double eta_;
  double alpha_;
};

/// sqrt(2 K depth / (M^2 n)), the minimizer of depth/eta + M^2 eta n / (2K).
double optimal_constant(double K, double depth, double M, std::uint64_t horizon);

/// optimal_constant for a schedule that is tunable to a horizon. Only the
/// constant kind qualifies; every other kind throws Unsupported.
double optimal_constant(const ParameterSchedule& schedule, double K, double depth, double M,
                        std::uint64_t horizon);

}  // namespace noregret
