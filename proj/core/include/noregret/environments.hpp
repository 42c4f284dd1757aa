#pragma once

// Sources of payoff vectors: fixed and random streams, an adaptive
// best-response adversary, convex loss oracles for online convex
// optimization, and bounded-noise wrappers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "noregret/geometry.hpp"
#include "noregret/linalg.hpp"
#include "noregret/rng.hpp"

namespace noregret {

enum class StreamKind { fixed, iid_uniform, adversarial_best_response };

std::string_view to_string(StreamKind kind);
StreamKind parse_stream_kind(std::string_view name);

/// Sequence of payoff vectors u_n with ||u_n||_* <= M, where ||.||_* is the
/// dual of `primal_norm`.
class PayoffStream {
 public:
  /// Replays `payoffs` in order. M defaults to the largest dual norm in the
  /// list; an explicit M smaller than that is rejected.
  static PayoffStream fixed(std::vector<Vector> payoffs, Norm primal_norm = Norm::l1,
                            std::optional<double> M = std::nullopt);

  /// Coordinates uniform on [-M, M], rescaled onto the dual ball of radius
  /// M when they fall outside it.
  static PayoffStream iid_uniform(std::size_t dim, double M, Norm primal_norm,
                                  std::uint64_t seed);

  /// Adaptive adversary: given the current action x, emits the u in the
  /// dual ball of radius M that maximizes <u, e_j - x>, where j is the
  /// least-weighted coordinate of x (lowest index on ties). The response is
  /// deterministic; the seed is carried only so that replications can be
  /// labelled uniformly.
  static PayoffStream adversarial_best_response(std::size_t dim, double M, Norm primal_norm,
                                                std::uint64_t seed = 0);

  StreamKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  double bound() const noexcept { return M_; }
  Norm primal_norm() const noexcept { return norm_; }
  Norm dual_norm() const noexcept { return dual_of(norm_); }
  bool adaptive() const noexcept { return kind_ == StreamKind::adversarial_best_response; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Number of payoffs a fixed stream holds; nullopt for unbounded streams.
  std::optional<std::size_t> length() const;
  bool exhausted() const;

  /// Next payoff vector. Adaptive streams require the learner's current
  /// action `x`; other streams ignore it. Throws InvalidInput when an
  /// adaptive stream gets no action and when a fixed stream runs out.
  Vector next(ConstSpan x = {});

  /// Fresh copy of this stream restarted from `seed`.
  PayoffStream reseeded(std::uint64_t seed) const;

 private:
  PayoffStream(StreamKind kind, std::size_t dim, double M, Norm norm, std::uint64_t seed)
      : kind_(kind), dim_(dim), M_(M), norm_(norm), seed_(seed), rng_(seed) {}

  StreamKind kind_;
  std::size_t dim_;
  double M_;
  Norm norm_;
  std::uint64_t seed_;
  SplitMix64 rng_;
  std::vector<Vector> fixed_;
  std::size_t cursor_ = 0;
};

/// Rescales `u` onto the dual ball {||u||_* <= M} when it lies outside.
void clip_to_dual_ball(Vector& u, double M, Norm dual);

enum class LossKind { quadratic, linear, abs_distance };

std::string_view to_string(LossKind kind);

/// Convex loss f on a body with a first-order oracle. Lipschitz constants
/// are measured in the dual of the body's norm tag.
class LossOracle {
 public:
  /// f(x) = 1/2 x^T A x + <b, x> + offset, with A symmetric positive
  /// semidefinite (rows of `A`).
  static LossOracle quadratic(std::vector<Vector> A, Vector b, ConvexBody body,
                              double offset = 0.0);
  /// f(x) = scale/2 ||x - target||_2^2, stored as a quadratic.
  static LossOracle squared_distance(Vector target, ConvexBody body, double scale = 1.0);
  /// f(x) = <c, x>
  static LossOracle linear(Vector c, ConvexBody body);
  /// f(x) = sum_i |x_i - target_i|. The subgradient picks 0 at kinks.
  static LossOracle abs_distance(Vector target, ConvexBody body);

  LossKind kind() const noexcept { return kind_; }
  const ConvexBody& body() const noexcept { return body_; }
  std::size_t dim() const noexcept { return body_.dim(); }

  /// Lipschitz constant over the body (an upper bound for general A).
  double lipschitz() const noexcept { return M_; }

  /// min_{x in C} f(x) when it has a closed form for this loss and body.
  std::optional<double> known_minimum() const noexcept { return f_min_; }

  double value(ConstSpan x) const;
  /// Throws DomainError if x lies outside the body (tolerance 1e-9).
  Vector subgradient(ConstSpan x) const;

 private:
  LossOracle(LossKind kind, ConvexBody body) : kind_(kind), body_(std::move(body)) {}

  void check_point(ConstSpan x) const;
  double dual_lipschitz_from_vertices_or(double fallback) const;

  LossKind kind_;
  ConvexBody body_;
  std::vector<Vector> A_;
  Vector b_;
  double offset_ = 0.0;
  double M_ = 0.0;
  std::optional<double> f_min_;
};

/// Adds i.i.d. noise, uniform on [-noise_scale, noise_scale] per
/// coordinate, to the vectors of an inner oracle or stream.
class NoisyOracle {
 public:
  NoisyOracle(LossOracle inner, double noise_scale, std::uint64_t seed);
  NoisyOracle(PayoffStream inner, double noise_scale, std::uint64_t seed);

  double noise_scale() const noexcept { return scale_; }
  std::size_t dim() const;

  /// Bound on the dual norm of every observed vector: the inner bound plus
  /// the dual norm of the noise box corner.
  double observed_bound() const;

  /// Noisy subgradient g(x) + xi. Requires a LossOracle inner.
  Vector subgradient(ConstSpan x);
  /// Noisy payoff u_n + xi. Requires a PayoffStream inner.
  Vector next_payoff(ConstSpan x = {});

  const LossOracle& loss() const;

  /// Copy with the noise generator (and inner stream, if any) restarted.
  NoisyOracle reseeded(std::uint64_t seed) const;

 private:
  void add_noise(Vector& v);
  Norm dual_norm() const;

  std::variant<LossOracle, PayoffStream> inner_;
  double scale_;
  SplitMix64 rng_;
};

/// Draws a pure action index (0-based) from the mixed action x by inverse
/// CDF sampling. Throws InvalidInput if x is not a distribution.
std::size_t sample_action(ConstSpan x, SplitMix64& rng);
std::size_t sample_action(ConstSpan x, std::uint64_t seed);

}  // namespace noregret
