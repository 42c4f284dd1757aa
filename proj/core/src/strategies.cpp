#include "noregret/strategies.hpp"

#include <algorithm>
#include <string>

#include "noregret/errors.hpp"

namespace noregret {

Strategy::Strategy(Regularizer reg, ParameterSchedule schedule)
    : reg_(std::move(reg)), schedule_(schedule), U_(reg_.dim(), 0.0) {
  x_ = reg_.choice(U_);
}

const Vector& Strategy::step(ConstSpan u) {
  require_dim(u, dim());
  require_finite(u, "payoff");
  add_in_place(U_, u);
  ++n_;
  if (schedule_.block_start(n_ + 1)) {
    // Doubling trick: the next block starts from a clean score.
    std::fill(U_.begin(), U_.end(), 0.0);
  }
  x_ = reg_.choice(scaled(U_, schedule_.value_at(n_)));
  return x_;
}

Strategy init(Regularizer reg, ParameterSchedule schedule) {
  return Strategy(std::move(reg), schedule);
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::ew:
      return "EW";
    case Algorithm::ew_prime:
      return "EW_PRIME";
    case Algorithm::sfp:
      return "SFP";
    case Algorithm::vsfp:
      return "VSFP";
    case Algorithm::ogd_l:
      return "OGD_L";
    case Algorithm::omd_l:
      return "OMD_L";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto algorithm : all_algorithms()) {
    if (to_string(algorithm) == name) return algorithm;
  }
  if (name == "EW'") return Algorithm::ew_prime;
  throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

std::vector<Algorithm> all_algorithms() {
  return {Algorithm::ew,   Algorithm::ew_prime, Algorithm::sfp,
          Algorithm::vsfp, Algorithm::ogd_l,    Algorithm::omd_l};
}

std::string_view describe(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::ew:
      return "exponential weights: entropy regularizer, constant eta";
    case Algorithm::ew_prime:
      return "exponential weights with eta/sqrt(n)";
    case Algorithm::sfp:
      return "smooth fictitious play: any regularizer, eta/n";
    case Algorithm::vsfp:
      return "vanishingly smooth fictitious play: any regularizer, eta*n^-alpha";
    case Algorithm::ogd_l:
      return "lazy online gradient descent: Euclidean regularizer, constant eta";
    case Algorithm::omd_l:
      return "lazy online mirror descent: any regularizer, constant eta";
  }
  return "";
}

namespace {

double need_eta(const StrategyParams& params) {
  if (!params.eta) throw InvalidInput("missing parameter 'eta'");
  return *params.eta;
}

std::size_t need_dim(const StrategyParams& params) {
  if (params.dim) return *params.dim;
  if (params.body) return params.body->dim();
  throw InvalidInput("missing parameter 'dim'");
}

Regularizer need_regularizer(const StrategyParams& params) {
  if (!params.regularizer) throw InvalidInput("missing parameter 'regularizer'");
  return *params.regularizer;
}

}  // namespace

Strategy make_named(Algorithm algorithm, const StrategyParams& params) {
  switch (algorithm) {
    case Algorithm::ew:
      return Strategy(Regularizer::entropy(need_dim(params)),
                      ParameterSchedule::constant(need_eta(params)));
    case Algorithm::ew_prime:
      return Strategy(Regularizer::entropy(need_dim(params)),
                      ParameterSchedule::inv_sqrt(need_eta(params)));
    case Algorithm::sfp:
      return Strategy(need_regularizer(params), ParameterSchedule::harmonic(need_eta(params)));
    case Algorithm::vsfp: {
      if (!params.alpha) throw InvalidInput("missing parameter 'alpha'");
      return Strategy(need_regularizer(params),
                      ParameterSchedule::power(need_eta(params), *params.alpha));
    }
    case Algorithm::ogd_l: {
      if (!params.body) throw InvalidInput("missing parameter 'body'");
      return Strategy(Regularizer::euclidean(*params.body),
                      ParameterSchedule::constant(need_eta(params)));
    }
    case Algorithm::omd_l:
      return Strategy(need_regularizer(params), ParameterSchedule::constant(need_eta(params)));
  }
  throw InvalidInput("unknown algorithm");
}

Trajectory play_sequence(Strategy& strategy, PayoffStream& stream,
                         std::optional<std::size_t> stages) {
  if (stream.dim() != strategy.dim()) throw DimensionMismatch(strategy.dim(), stream.dim());
  std::size_t rounds = 0;
  if (stages) {
    rounds = *stages;
  } else if (auto len = stream.length()) {
    rounds = *len;
  } else {
    throw InvalidInput("an unbounded stream needs an explicit number of stages");
  }
  Trajectory traj;
  traj.actions.reserve(rounds + 1);
  traj.payoffs.reserve(rounds);
  traj.actions.push_back(strategy.action());
  for (std::size_t k = 0; k < rounds; ++k) {
    Vector u = stream.next(strategy.action());
    strategy.step(u);
    traj.payoffs.push_back(std::move(u));
    traj.actions.push_back(strategy.action());
  }
  return traj;
}

}  // namespace noregret
