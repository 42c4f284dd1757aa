#include "noregret/environments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "noregret/errors.hpp"

namespace noregret {

namespace {

constexpr double kMembershipTolerance = 1e-9;

// Dual norm of the all-ones vector: the largest dual norm of a vector with
// entries in [-1, 1].
double ones_dual_norm(std::size_t dim, Norm dual) {
  switch (dual) {
    case Norm::l1:
      return static_cast<double>(dim);
    case Norm::l2:
      return std::sqrt(static_cast<double>(dim));
    case Norm::linf:
      return 1.0;
  }
  return 1.0;
}

// Upper bound on ||v||_dual given ||v||_2.
double l2_to_dual(double l2, std::size_t dim, Norm dual) {
  switch (dual) {
    case Norm::l1:
      return std::sqrt(static_cast<double>(dim)) * l2;
    case Norm::l2:
    case Norm::linf:
      return l2;
  }
  return l2;
}

}  // namespace

std::string_view to_string(StreamKind kind) {
  switch (kind) {
    case StreamKind::fixed:
      return "fixed";
    case StreamKind::iid_uniform:
      return "iid_uniform";
    case StreamKind::adversarial_best_response:
      return "adversarial";
  }
  return "?";
}

StreamKind parse_stream_kind(std::string_view name) {
  if (name == "fixed") return StreamKind::fixed;
  if (name == "iid_uniform" || name == "iid") return StreamKind::iid_uniform;
  if (name == "adversarial" || name == "adversarial_best_response") {
    return StreamKind::adversarial_best_response;
  }
  throw InvalidInput("unknown environment kind '" + std::string(name) + "'");
}

std::string_view to_string(LossKind kind) {
  switch (kind) {
    case LossKind::quadratic:
      return "quadratic";
    case LossKind::linear:
      return "linear";
    case LossKind::abs_distance:
      return "abs_distance";
  }
  return "?";
}

void clip_to_dual_ball(Vector& u, double M, Norm dual) {
  const double len = norm(u, dual);
  if (len > M && len > 0.0) {
    const double scale = M / len;
    for (double& v : u) v *= scale;
  }
}

// -- PayoffStream -------------------------------------------------------------

PayoffStream PayoffStream::fixed(std::vector<Vector> payoffs, Norm primal_norm,
                                 std::optional<double> M) {
  if (payoffs.empty()) throw InvalidInput("fixed stream needs at least one payoff");
  const std::size_t dim = payoffs.front().size();
  if (dim == 0) throw InvalidInput("payoff dimension must be positive");
  double largest = 0.0;
  for (const auto& u : payoffs) {
    require_dim(u, dim);
    require_finite(u, "payoff");
    largest = std::max(largest, norm(u, dual_of(primal_norm)));
  }
  const double bound = M.value_or(largest);
  if (bound + 1e-12 < largest) {
    throw InvalidInput("fixed stream payoff exceeds the declared bound M");
  }
  PayoffStream stream(StreamKind::fixed, dim, bound, primal_norm, 0);
  stream.fixed_ = std::move(payoffs);
  return stream;
}

PayoffStream PayoffStream::iid_uniform(std::size_t dim, double M, Norm primal_norm,
                                       std::uint64_t seed) {
  if (dim == 0) throw InvalidInput("payoff dimension must be positive");
  if (!(M > 0.0)) throw InvalidInput("payoff bound M must be positive");
  return {StreamKind::iid_uniform, dim, M, primal_norm, seed};
}

PayoffStream PayoffStream::adversarial_best_response(std::size_t dim, double M,
                                                     Norm primal_norm, std::uint64_t seed) {
  if (dim == 0) throw InvalidInput("payoff dimension must be positive");
  if (!(M > 0.0)) throw InvalidInput("payoff bound M must be positive");
  return {StreamKind::adversarial_best_response, dim, M, primal_norm, seed};
}

std::optional<std::size_t> PayoffStream::length() const {
  if (kind_ == StreamKind::fixed) return fixed_.size();
  return std::nullopt;
}

bool PayoffStream::exhausted() const {
  return kind_ == StreamKind::fixed && cursor_ >= fixed_.size();
}

Vector PayoffStream::next(ConstSpan x) {
  switch (kind_) {
    case StreamKind::fixed:
      if (cursor_ >= fixed_.size()) throw InvalidInput("fixed payoff stream is exhausted");
      return fixed_[cursor_++];
    case StreamKind::iid_uniform: {
      Vector u(dim_);
      for (double& v : u) v = rng_.uniform(-M_, M_);
      clip_to_dual_ball(u, M_, dual_norm());
      return u;
    }
    case StreamKind::adversarial_best_response: {
      if (x.empty()) throw InvalidInput("adaptive stream needs the current action");
      require_dim(x, dim_);
      require_finite(x, "current action");
      const auto j = static_cast<std::size_t>(std::min_element(x.begin(), x.end()) - x.begin());
      Vector z(x.begin(), x.end());
      for (double& v : z) v = -v;
      z[j] += 1.0;
      Vector u(dim_, 0.0);
      switch (dual_norm()) {
        case Norm::linf:
          for (std::size_t i = 0; i < dim_; ++i) u[i] = z[i] > 0.0 ? M_ : -M_;
          break;
        case Norm::l2: {
          const double len = norm(z, Norm::l2);
          if (len > 0.0) {
            for (std::size_t i = 0; i < dim_; ++i) u[i] = M_ * z[i] / len;
          }
          break;
        }
        case Norm::l1: {
          std::size_t k = 0;
          for (std::size_t i = 1; i < dim_; ++i) {
            if (std::abs(z[i]) > std::abs(z[k])) k = i;
          }
          u[k] = z[k] >= 0.0 ? M_ : -M_;
          break;
        }
      }
      return u;
    }
  }
  return {};
}

PayoffStream PayoffStream::reseeded(std::uint64_t seed) const {
  PayoffStream copy = *this;
  copy.seed_ = seed;
  copy.rng_ = SplitMix64(seed);
  copy.cursor_ = 0;
  return copy;
}

// -- LossOracle ---------------------------------------------------------------

LossOracle LossOracle::quadratic(std::vector<Vector> A, Vector b, ConvexBody body,
                                 double offset) {
  const std::size_t d = body.dim();
  if (A.size() != d) throw DimensionMismatch(d, A.size());
  for (const auto& row : A) {
    require_dim(row, d);
    require_finite(row, "quadratic matrix");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(A[i][j] - A[j][i]) > 1e-12 * (1.0 + std::abs(A[i][j]))) {
        throw InvalidInput("quadratic matrix must be symmetric");
      }
    }
  }
  require_dim(b, d);
  require_finite(b, "quadratic linear term");

  LossOracle oracle(LossKind::quadratic, std::move(body));
  oracle.A_ = std::move(A);
  oracle.b_ = std::move(b);
  oracle.offset_ = offset;

  // ||Ax + b|| is convex in x, so over a polytope its maximum sits at a
  // vertex. Balls use ||A||_F (||c|| + r) + ||b|| instead.
  double frobenius = 0.0;
  for (const auto& row : oracle.A_) frobenius += squared_l2(row);
  frobenius = std::sqrt(frobenius);
  const Vector origin(d, 0.0);
  const double fallback = l2_to_dual(
      frobenius * oracle.body_.max_distance_l2(origin) + norm(oracle.b_, Norm::l2), d,
      oracle.body_.dual_norm());
  oracle.M_ = oracle.dual_lipschitz_from_vertices_or(fallback);
  return oracle;
}

LossOracle LossOracle::squared_distance(Vector target, ConvexBody body, double scale) {
  const std::size_t d = body.dim();
  require_dim(target, d);
  require_finite(target, "target");
  if (!(scale > 0.0)) throw InvalidInput("scale must be positive");
  std::vector<Vector> A(d, Vector(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) A[i][i] = scale;
  Vector b = scaled(target, -scale);
  const double offset = 0.5 * scale * squared_l2(target);
  const double far = body.max_distance_l2(target);
  const Norm dual = body.dual_norm();
  LossOracle oracle = quadratic(std::move(A), std::move(b), body, offset);
  oracle.M_ = dual == Norm::l2 ? scale * far : oracle.M_;
  // The minimum is attained at the projection of the target.
  if (body.kind() != BodyKind::vertex_polytope) {
    const Vector nearest = body.project(target);
    oracle.f_min_ = 0.5 * scale * squared_l2(add_scaled(nearest, -1.0, target));
  }
  return oracle;
}

LossOracle LossOracle::linear(Vector c, ConvexBody body) {
  require_dim(c, body.dim());
  require_finite(c, "linear loss");
  LossOracle oracle(LossKind::linear, std::move(body));
  oracle.M_ = norm(c, oracle.body_.dual_norm());
  oracle.f_min_ = -oracle.body_.support(scaled(c, -1.0));
  oracle.b_ = std::move(c);
  return oracle;
}

LossOracle LossOracle::abs_distance(Vector target, ConvexBody body) {
  require_dim(target, body.dim());
  require_finite(target, "target");
  LossOracle oracle(LossKind::abs_distance, std::move(body));
  oracle.M_ = ones_dual_norm(oracle.dim(), oracle.body_.dual_norm());
  if (oracle.body_.kind() != BodyKind::vertex_polytope && oracle.body_.contains(target)) {
    oracle.f_min_ = 0.0;
  }
  oracle.b_ = std::move(target);
  return oracle;
}

double LossOracle::dual_lipschitz_from_vertices_or(double fallback) const {
  if (body_.kind() == BodyKind::l2_ball) return fallback;
  if (body_.kind() == BodyKind::box && body_.dim() > 20) return fallback;
  const auto vertices = body_.vertices();
  if (!vertices) return fallback;
  double best = 0.0;
  for (const auto& v : *vertices) {
    Vector g = b_;
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += dot(A_[i], v);
    best = std::max(best, norm(g, body_.dual_norm()));
  }
  return best;
}

void LossOracle::check_point(ConstSpan x) const {
  require_dim(x, dim());
  require_finite(x, "loss argument");
  if (body_.kind() == BodyKind::vertex_polytope) return;
  if (!body_.contains(x, kMembershipTolerance)) {
    throw DomainError("loss evaluated outside its body");
  }
}

double LossOracle::value(ConstSpan x) const {
  check_point(x);
  switch (kind_) {
    case LossKind::quadratic: {
      double s = offset_;
      for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * (0.5 * dot(A_[i], x) + b_[i]);
      return s;
    }
    case LossKind::linear:
      return dot(b_, x);
    case LossKind::abs_distance: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - b_[i]);
      return s;
    }
  }
  return 0.0;
}

Vector LossOracle::subgradient(ConstSpan x) const {
  check_point(x);
  switch (kind_) {
    case LossKind::quadratic: {
      Vector g = b_;
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += dot(A_[i], x);
      return g;
    }
    case LossKind::linear:
      return b_;
    case LossKind::abs_distance: {
      Vector g(x.size(), 0.0);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > b_[i]) {
          g[i] = 1.0;
        } else if (x[i] < b_[i]) {
          g[i] = -1.0;
        }
      }
      return g;
    }
  }
  return {};
}

// -- NoisyOracle --------------------------------------------------------------

NoisyOracle::NoisyOracle(LossOracle inner, double noise_scale, std::uint64_t seed)
    : inner_(std::move(inner)), scale_(noise_scale), rng_(seed) {
  if (!(noise_scale >= 0.0) || !std::isfinite(noise_scale)) {
    throw InvalidInput("noise scale must be finite and nonnegative");
  }
}

NoisyOracle::NoisyOracle(PayoffStream inner, double noise_scale, std::uint64_t seed)
    : inner_(std::move(inner)), scale_(noise_scale), rng_(seed) {
  if (!(noise_scale >= 0.0) || !std::isfinite(noise_scale)) {
    throw InvalidInput("noise scale must be finite and nonnegative");
  }
}

std::size_t NoisyOracle::dim() const {
  return std::visit([](const auto& inner) { return inner.dim(); }, inner_);
}

Norm NoisyOracle::dual_norm() const {
  if (const auto* loss = std::get_if<LossOracle>(&inner_)) return loss->body().dual_norm();
  return std::get<PayoffStream>(inner_).dual_norm();
}

double NoisyOracle::observed_bound() const {
  const double inner_bound = std::holds_alternative<LossOracle>(inner_)
                                 ? std::get<LossOracle>(inner_).lipschitz()
                                 : std::get<PayoffStream>(inner_).bound();
  return inner_bound + scale_ * ones_dual_norm(dim(), dual_norm());
}

void NoisyOracle::add_noise(Vector& v) {
  // Always consume one draw per coordinate so that trajectories with and
  // without noise share the generator layout.
  for (double& x : v) x += scale_ * rng_.uniform(-1.0, 1.0);
}

Vector NoisyOracle::subgradient(ConstSpan x) {
  auto* loss = std::get_if<LossOracle>(&inner_);
  if (loss == nullptr) throw Unsupported("noisy subgradient needs a loss oracle");
  Vector g = loss->subgradient(x);
  add_noise(g);
  return g;
}

Vector NoisyOracle::next_payoff(ConstSpan x) {
  auto* stream = std::get_if<PayoffStream>(&inner_);
  if (stream == nullptr) throw Unsupported("noisy payoff needs a payoff stream");
  Vector u = stream->next(x);
  add_noise(u);
  return u;
}

const LossOracle& NoisyOracle::loss() const {
  const auto* loss = std::get_if<LossOracle>(&inner_);
  if (loss == nullptr) throw Unsupported("noisy oracle wraps a payoff stream");
  return *loss;
}

NoisyOracle NoisyOracle::reseeded(std::uint64_t seed) const {
  NoisyOracle copy = *this;
  copy.rng_ = SplitMix64(seed);
  if (auto* stream = std::get_if<PayoffStream>(&copy.inner_)) {
    *stream = stream->reseeded(derive_seed(seed, 1));
  }
  return copy;
}

// -- mixed actions ------------------------------------------------------------

std::size_t sample_action(ConstSpan x, SplitMix64& rng) {
  if (x.empty()) throw InvalidInput("invalid distribution: empty");
  double total = 0.0;
  for (double p : x) {
    if (!std::isfinite(p) || p < -1e-12) throw InvalidInput("invalid distribution: bad weight");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidInput("invalid distribution: weights do not sum to 1");
  const double draw = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0) continue;
    last_positive = i;
    cumulative += x[i];
    if (draw < cumulative) return i;
  }
  return last_positive;
}

std::size_t sample_action(ConstSpan x, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_action(x, rng);
}

}  // namespace noregret
