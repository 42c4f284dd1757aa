#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "noregret/environments.hpp"
#include "noregret/geometry.hpp"
#include "noregret/linalg.hpp"
#include "noregret/schedules.hpp"

namespace noregret {

/// Learner that plays x_{n+1} = Q_h(eta_n U_n) with U_n = u_1 + ... + u_n and
/// x_1 = Q_h(0). Single owner; copy it to branch a run.
class Strategy {
 public:
  Strategy(Regularizer reg, ParameterSchedule schedule);

  const Regularizer& regularizer() const noexcept { return reg_; }
  const ParameterSchedule& schedule() const noexcept { return schedule_; }
  std::size_t dim() const noexcept { return reg_.dim(); }

  /// Number of payoffs absorbed so far.
  std::uint64_t stage() const noexcept { return n_; }
  /// Cumulative score U_n (reset at doubling block starts).
  const Vector& score() const noexcept { return U_; }
  /// Action for the next stage, x_{n+1}.
  const Vector& action() const noexcept { return x_; }

  /// Absorbs u_{n+1} and returns the new action.
  const Vector& step(ConstSpan u);

 private:
  Regularizer reg_;
  ParameterSchedule schedule_;
  Vector U_;
  Vector x_;
  std::uint64_t n_ = 0;
};

/// Initial state: n = 0, U = 0, x = Q_h(0).
Strategy init(Regularizer reg, ParameterSchedule schedule);

enum class Algorithm { ew, ew_prime, sfp, vsfp, ogd_l, omd_l };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> all_algorithms();
/// One-line description used by the CLI listing.
std::string_view describe(Algorithm algorithm);

struct StrategyParams {
  std::optional<std::size_t> dim{};
  std::optional<ConvexBody> body{};
  std::optional<double> eta{};
  std::optional<double> alpha{};
  std::optional<Regularizer> regularizer{};
};

/// Named members of the family:
///   EW    entropy on the simplex, constant eta
///   EW'   entropy on the simplex, eta / sqrt(n)
///   SFP   any regularizer, eta / n
///   VSFP  any regularizer, eta n^-alpha
///   OGD-L Euclidean regularizer on a body, constant eta
///   OMD-L any regularizer, constant eta
/// Throws InvalidInput naming the first missing parameter.
Strategy make_named(Algorithm algorithm, const StrategyParams& params);

/// Actions x_1..x_{n+1} and payoffs u_1..u_n of a run.
struct Trajectory {
  std::vector<Vector> actions;
  std::vector<Vector> payoffs;
};

/// Plays `stages` rounds against `stream` (all of a fixed stream when
/// `stages` is nullopt). Adaptive streams see x_n before emitting u_n.
Trajectory play_sequence(Strategy& strategy, PayoffStream& stream,
                         std::optional<std::size_t> stages = std::nullopt);

}  // namespace noregret
