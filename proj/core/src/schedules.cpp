#include "noregret/schedules.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "noregret/errors.hpp"

namespace noregret {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidInput(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::constant:
      return "constant";
    case ScheduleKind::inv_sqrt:
      return "inv_sqrt";
    case ScheduleKind::harmonic:
      return "harmonic";
    case ScheduleKind::power:
      return "power";
    case ScheduleKind::anytime:
      return "anytime";
    case ScheduleKind::doubling:
      return "doubling";
  }
  return "?";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
  for (auto kind : {ScheduleKind::constant, ScheduleKind::inv_sqrt, ScheduleKind::harmonic,
                    ScheduleKind::power, ScheduleKind::anytime, ScheduleKind::doubling}) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidInput("unknown schedule kind '" + std::string(name) + "'");
}

ParameterSchedule ParameterSchedule::constant(double eta) {
  require_positive(eta, "eta");
  return {ScheduleKind::constant, eta, 0.0};
}

ParameterSchedule ParameterSchedule::inv_sqrt(double eta) {
  require_positive(eta, "eta");
  return {ScheduleKind::inv_sqrt, eta, 0.5};
}

ParameterSchedule ParameterSchedule::harmonic(double eta) {
  require_positive(eta, "eta");
  return {ScheduleKind::harmonic, eta, 1.0};
}

ParameterSchedule ParameterSchedule::power(double eta, double alpha) {
  require_positive(eta, "eta");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("power schedule needs alpha in (0, 1)");
  return {ScheduleKind::power, eta, alpha};
}

ParameterSchedule ParameterSchedule::anytime(double K, double depth, double M) {
  require_positive(K, "K");
  require_positive(depth, "depth");
  require_positive(M, "M");
  return {ScheduleKind::anytime, std::sqrt(K * depth) / M, 0.5};
}

ParameterSchedule ParameterSchedule::doubling(double eta) {
  require_positive(eta, "eta");
  return {ScheduleKind::doubling, eta, 0.0};
}

double ParameterSchedule::value_at(std::uint64_t n) const {
  const double m = static_cast<double>(n == 0 ? 1 : n);
  switch (kind_) {
    case ScheduleKind::constant:
      return eta_;
    case ScheduleKind::inv_sqrt:
    case ScheduleKind::anytime:
      return eta_ / std::sqrt(m);
    case ScheduleKind::harmonic:
      return eta_ / m;
    case ScheduleKind::power:
      return eta_ * std::pow(m, -alpha_);
    case ScheduleKind::doubling: {
      const int block = std::bit_width(n == 0 ? std::uint64_t{1} : n) - 1;
      return eta_ * std::pow(2.0, -0.5 * block);
    }
  }
  return eta_;
}

double ParameterSchedule::partial_sum(std::uint64_t n) const {
  // Neumaier summation.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double v = value_at(k - 1);
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

bool ParameterSchedule::block_start(std::uint64_t n) const noexcept {
  return kind_ == ScheduleKind::doubling && n >= 2 && std::has_single_bit(n);
}

std::string ParameterSchedule::describe() const {
  std::ostringstream out;
  out << to_string(kind_) << "(eta=" << eta_;
  if (kind_ == ScheduleKind::power) out << ", alpha=" << alpha_;
  out << ")";
  return out.str();
}

double optimal_constant(double K, double depth, double M, std::uint64_t horizon) {
  require_positive(K, "K");
  require_positive(depth, "depth");
  require_positive(M, "M");
  if (horizon == 0) throw InvalidInput("horizon must be positive");
  return std::sqrt(2.0 * K * depth / (M * M * static_cast<double>(horizon)));
}

double optimal_constant(const ParameterSchedule& schedule, double K, double depth, double M,
                        std::uint64_t horizon) {
  if (schedule.kind() != ScheduleKind::constant) {
    throw Unsupported("horizon tuning applies to constant schedules only, not " +
                      std::string(to_string(schedule.kind())));
  }
  return optimal_constant(K, depth, M, horizon);
}

}  // namespace noregret
