#include "noregret/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "noregret/errors.hpp"

namespace noregret {

namespace {

constexpr std::size_t kMaxBoxEnumerationDim = 20;
constexpr std::size_t kGenericAscentIterations = 100'000;
constexpr double kGenericAscentTolerance = 1e-10;
constexpr std::size_t kDepthSamples = 10'000;

// Radical inverse of `index` in `base`; coordinate of a Halton point.
double radical_inverse(std::size_t index, std::size_t base) {
  double result = 0.0;
  double f = 1.0 / static_cast<double>(base);
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= static_cast<double>(base);
  }
  return result;
}

std::vector<std::size_t> first_primes(std::size_t count) {
  std::vector<std::size_t> primes;
  for (std::size_t candidate = 2; primes.size() < count; ++candidate) {
    bool prime = true;
    for (std::size_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

// Quasi-random points on the boundary sphere of a ball. A convex function
// attains its maximum over the ball on that sphere.
std::vector<Vector> halton_sphere_points(const Vector& center, double radius,
                                         std::size_t count) {
  const std::size_t d = center.size();
  const auto primes = first_primes(d);
  std::vector<Vector> points;
  points.reserve(count);
  for (std::size_t i = 1; points.size() < count; ++i) {
    Vector dir(d);
    for (std::size_t j = 0; j < d; ++j) dir[j] = 2.0 * radical_inverse(i, primes[j]) - 1.0;
    const double len = norm(dir, Norm::l2);
    if (len < 1e-12) continue;
    for (std::size_t j = 0; j < d; ++j) dir[j] = center[j] + radius * dir[j] / len;
    points.push_back(std::move(dir));
  }
  return points;
}

}  // namespace

std::string_view to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::simplex:
      return "simplex";
    case BodyKind::box:
      return "box";
    case BodyKind::l2_ball:
      return "l2_ball";
    case BodyKind::vertex_polytope:
      return "vertex_polytope";
  }
  return "?";
}

std::string_view to_string(RegularizerKind kind) {
  switch (kind) {
    case RegularizerKind::entropy:
      return "entropy";
    case RegularizerKind::euclidean:
      return "euclidean";
    case RegularizerKind::generic:
      return "generic";
  }
  return "?";
}

// -- ConvexBody ---------------------------------------------------------------

ConvexBody ConvexBody::simplex(std::size_t dim, Norm norm) {
  if (dim == 0) throw InvalidInput("simplex dimension must be positive");
  return ConvexBody(dim, norm, Simplex{});
}

ConvexBody ConvexBody::box(Vector lower, Vector upper, Norm norm) {
  if (lower.empty()) throw InvalidInput("box dimension must be positive");
  require_dim(upper, lower.size());
  require_finite(lower, "box lower bound");
  require_finite(upper, "box upper bound");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) throw InvalidInput("box lower bound exceeds upper bound");
  }
  const std::size_t dim = lower.size();
  return ConvexBody(dim, norm, Box{std::move(lower), std::move(upper)});
}

ConvexBody ConvexBody::unit_box(std::size_t dim, Norm norm) {
  return box(Vector(dim, 0.0), Vector(dim, 1.0), norm);
}

ConvexBody ConvexBody::ball(Vector center, double radius, Norm norm) {
  if (center.empty()) throw InvalidInput("ball dimension must be positive");
  require_finite(center, "ball center");
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw InvalidInput("ball radius must be finite and nonnegative");
  }
  const std::size_t dim = center.size();
  return ConvexBody(dim, norm, Ball{std::move(center), radius});
}

ConvexBody ConvexBody::polytope(std::vector<Vector> vertices, Norm norm) {
  if (vertices.empty()) throw InvalidInput("polytope needs at least one vertex");
  const std::size_t dim = vertices.front().size();
  if (dim == 0) throw InvalidInput("polytope dimension must be positive");
  for (const auto& v : vertices) {
    require_dim(v, dim);
    require_finite(v, "polytope vertex");
  }
  return ConvexBody(dim, norm, Polytope{std::move(vertices)});
}

BodyKind ConvexBody::kind() const noexcept {
  switch (shape_.index()) {
    case 0:
      return BodyKind::simplex;
    case 1:
      return BodyKind::box;
    case 2:
      return BodyKind::l2_ball;
    default:
      return BodyKind::vertex_polytope;
  }
}

ConvexBody ConvexBody::with_norm(Norm norm) const {
  ConvexBody copy = *this;
  copy.norm_ = norm;
  return copy;
}

bool ConvexBody::contains(ConstSpan x, double tol) const {
  if (x.size() != dim_ || !all_finite(x)) return false;
  switch (kind()) {
    case BodyKind::simplex: {
      double sum = 0.0;
      for (double v : x) {
        if (v < -tol) return false;
        sum += v;
      }
      return std::abs(sum - 1.0) <= tol;
    }
    case BodyKind::box: {
      const auto& b = std::get<Box>(shape_);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] < b.lower[i] - tol || x[i] > b.upper[i] + tol) return false;
      }
      return true;
    }
    case BodyKind::l2_ball: {
      const auto& b = std::get<Ball>(shape_);
      return distance_l2(x, b.center) <= b.radius + tol;
    }
    case BodyKind::vertex_polytope: {
      const auto& p = std::get<Polytope>(shape_);
      if (p.vertices.size() == 1) return distance_l2(x, p.vertices.front()) <= tol;
      throw Unsupported("membership in a vertex polytope is not supported");
    }
  }
  return false;
}

Vector ConvexBody::project(ConstSpan y) const {
  require_dim(y, dim_);
  require_finite(y, "projection input");
  switch (kind()) {
    case BodyKind::simplex:
      return project_simplex(y);
    case BodyKind::box: {
      const auto& b = std::get<Box>(shape_);
      Vector out(y.begin(), y.end());
      for (std::size_t i = 0; i < dim_; ++i) out[i] = std::clamp(out[i], b.lower[i], b.upper[i]);
      return out;
    }
    case BodyKind::l2_ball: {
      const auto& b = std::get<Ball>(shape_);
      const double dist = distance_l2(y, b.center);
      Vector out(y.begin(), y.end());
      if (dist <= b.radius) return out;
      const double scale = b.radius / dist;
      for (std::size_t i = 0; i < dim_; ++i) out[i] = b.center[i] + scale * (y[i] - b.center[i]);
      return out;
    }
    case BodyKind::vertex_polytope: {
      const auto& p = std::get<Polytope>(shape_);
      if (p.vertices.size() == 1) return p.vertices.front();
      throw Unsupported("Euclidean projection onto a vertex polytope is not supported");
    }
  }
  return {};
}

Vector ConvexBody::linear_max(ConstSpan u) const {
  require_dim(u, dim_);
  require_finite(u, "linear objective");
  switch (kind()) {
    case BodyKind::simplex: {
      const auto best = std::max_element(u.begin(), u.end()) - u.begin();
      Vector out(dim_, 0.0);
      out[static_cast<std::size_t>(best)] = 1.0;
      return out;
    }
    case BodyKind::box: {
      const auto& b = std::get<Box>(shape_);
      Vector out(dim_);
      for (std::size_t i = 0; i < dim_; ++i) out[i] = u[i] > 0.0 ? b.upper[i] : b.lower[i];
      return out;
    }
    case BodyKind::l2_ball: {
      const auto& b = std::get<Ball>(shape_);
      const double len = noregret::norm(u, Norm::l2);
      if (len == 0.0) return b.center;
      return add_scaled(b.center, b.radius / len, u);
    }
    case BodyKind::vertex_polytope: {
      const auto& p = std::get<Polytope>(shape_);
      std::size_t best = 0;
      double best_value = dot(u, p.vertices[0]);
      for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        const double value = dot(u, p.vertices[i]);
        if (value > best_value) {
          best = i;
          best_value = value;
        }
      }
      return p.vertices[best];
    }
  }
  return {};
}

double ConvexBody::support(ConstSpan u) const {
  require_dim(u, dim_);
  switch (kind()) {
    case BodyKind::simplex:
      require_finite(u, "linear objective");
      return *std::max_element(u.begin(), u.end());
    case BodyKind::l2_ball: {
      require_finite(u, "linear objective");
      const auto& b = std::get<Ball>(shape_);
      return dot(u, b.center) + b.radius * noregret::norm(u, Norm::l2);
    }
    default:
      return dot(u, linear_max(u));
  }
}

std::optional<std::vector<Vector>> ConvexBody::vertices() const {
  switch (kind()) {
    case BodyKind::simplex: {
      std::vector<Vector> out(dim_, Vector(dim_, 0.0));
      for (std::size_t i = 0; i < dim_; ++i) out[i][i] = 1.0;
      return out;
    }
    case BodyKind::box: {
      if (dim_ > kMaxBoxEnumerationDim) {
        throw Unsupported("box corner enumeration limited to " +
                          std::to_string(kMaxBoxEnumerationDim) + " dimensions");
      }
      const auto& b = std::get<Box>(shape_);
      const std::size_t count = std::size_t{1} << dim_;
      std::vector<Vector> out;
      out.reserve(count);
      for (std::size_t mask = 0; mask < count; ++mask) {
        Vector corner(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
          corner[i] = (mask >> i) & 1U ? b.upper[i] : b.lower[i];
        }
        out.push_back(std::move(corner));
      }
      return out;
    }
    case BodyKind::l2_ball:
      return std::nullopt;
    case BodyKind::vertex_polytope:
      return std::get<Polytope>(shape_).vertices;
  }
  return std::nullopt;
}

double ConvexBody::max_distance_l2(ConstSpan p) const {
  require_dim(p, dim_);
  switch (kind()) {
    case BodyKind::box: {
      const auto& b = std::get<Box>(shape_);
      double s = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        const double far = std::max(std::abs(b.lower[i] - p[i]), std::abs(b.upper[i] - p[i]));
        s += far * far;
      }
      return std::sqrt(s);
    }
    case BodyKind::l2_ball: {
      const auto& b = std::get<Ball>(shape_);
      return distance_l2(p, b.center) + b.radius;
    }
    case BodyKind::simplex: {
      // ||e_i - p||^2 = ||p||^2 - 2 p_i + 1, largest at the smallest p_i.
      const double smallest = *std::min_element(p.begin(), p.end());
      return std::sqrt(std::max(0.0, squared_l2(p) - 2.0 * smallest + 1.0));
    }
    case BodyKind::vertex_polytope: {
      double best = 0.0;
      for (const auto& v : std::get<Polytope>(shape_).vertices) {
        best = std::max(best, distance_l2(v, p));
      }
      return best;
    }
  }
  return 0.0;
}

const Vector& ConvexBody::ball_center() const {
  if (kind() != BodyKind::l2_ball) throw Unsupported("body is not a ball");
  return std::get<Ball>(shape_).center;
}

double ConvexBody::ball_radius() const {
  if (kind() != BodyKind::l2_ball) throw Unsupported("body is not a ball");
  return std::get<Ball>(shape_).radius;
}

const Vector& ConvexBody::box_lower() const {
  if (kind() != BodyKind::box) throw Unsupported("body is not a box");
  return std::get<Box>(shape_).lower;
}

const Vector& ConvexBody::box_upper() const {
  if (kind() != BodyKind::box) throw Unsupported("body is not a box");
  return std::get<Box>(shape_).upper;
}

// -- closed-form choice maps --------------------------------------------------

Vector project_simplex(ConstSpan y) {
  if (y.empty()) throw InvalidInput("simplex projection of an empty vector");
  require_finite(y, "simplex projection input");
  Vector sorted(y.begin(), y.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double prefix = 0.0;
  double threshold = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    prefix += sorted[k];
    const double candidate = (prefix - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) threshold = candidate;
  }
  Vector out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = std::max(y[i] - threshold, 0.0);
  return out;
}

Vector logit_choice(ConstSpan y) {
  if (y.empty()) throw InvalidInput("logit choice of an empty vector");
  require_finite(y, "logit input");
  const double top = *std::max_element(y.begin(), y.end());
  Vector out(y.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = std::exp(y[i] - top);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

// -- Regularizer --------------------------------------------------------------

Regularizer Regularizer::entropy(std::size_t dim) {
  Regularizer reg;
  reg.kind_ = RegularizerKind::entropy;
  reg.body_ = std::make_shared<const ConvexBody>(ConvexBody::simplex(dim, Norm::l1));
  reg.K_ = 1.0;
  reg.smoothness_ = 1.0;
  reg.norm_ = Norm::l1;
  reg.depth_ = compute_depth(reg);
  return reg;
}

Regularizer Regularizer::euclidean(ConvexBody body, std::optional<Vector> center) {
  Regularizer reg;
  reg.kind_ = RegularizerKind::euclidean;
  reg.center_ = center.value_or(Vector(body.dim(), 0.0));
  require_dim(reg.center_, body.dim());
  require_finite(reg.center_, "regularizer center");
  reg.body_ = std::make_shared<const ConvexBody>(body.with_norm(Norm::l2));
  reg.K_ = 1.0;
  reg.smoothness_ = 1.0;
  reg.norm_ = Norm::l2;
  reg.depth_ = compute_depth(reg);
  return reg;
}

Regularizer Regularizer::generic(ConvexBody body, Function value, Gradient gradient, double K,
                                 Norm norm, std::optional<double> smoothness) {
  if (body.kind() == BodyKind::vertex_polytope) {
    throw Unsupported("generic regularizers need a projection oracle; vertex polytopes have none");
  }
  if (!(K > 0.0)) throw InvalidInput("strong convexity modulus must be positive");
  if (!value || !gradient) throw InvalidInput("generic regularizer needs value and gradient");
  Regularizer reg;
  reg.kind_ = RegularizerKind::generic;
  reg.body_ = std::make_shared<const ConvexBody>(body.with_norm(norm));
  reg.K_ = K;
  reg.smoothness_ = smoothness.value_or(K);
  if (!(reg.smoothness_ > 0.0)) throw InvalidInput("smoothness constant must be positive");
  reg.norm_ = norm;
  reg.value_ = std::move(value);
  reg.gradient_ = std::move(gradient);
  reg.depth_ = compute_depth(reg);
  return reg;
}

double Regularizer::value(ConstSpan x) const {
  require_dim(x, dim());
  if (!body_->contains(x)) throw DomainError("point outside the regularizer's domain");
  switch (kind_) {
    case RegularizerKind::entropy: {
      double s = 0.0;
      for (double v : x) {
        if (v > 0.0) s += v * std::log(v);
      }
      return s;
    }
    case RegularizerKind::euclidean: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - center_[i];
        s += d * d;
      }
      return 0.5 * s;
    }
    case RegularizerKind::generic:
      return value_(x);
  }
  return 0.0;
}

Vector Regularizer::choice(ConstSpan y) const {
  require_dim(y, dim());
  require_finite(y, "dual vector");
  switch (kind_) {
    case RegularizerKind::entropy:
      return logit_choice(y);
    case RegularizerKind::euclidean: {
      Vector shifted(y.begin(), y.end());
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += center_[i];
      return body_->project(shifted);
    }
    case RegularizerKind::generic:
      return generic_choice(y);
  }
  return {};
}

Vector Regularizer::generic_choice(ConstSpan y) const {
  const double step = 1.0 / (smoothness_ + noregret::norm(y, dual_norm()));
  Vector x = body_->project(Vector(dim(), 0.0));
  double residual = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < kGenericAscentIterations; ++it) {
    const Vector grad = gradient_(x);
    Vector trial(dim());
    for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = x[i] + step * (y[i] - grad[i]);
    Vector next = body_->project(trial);
    residual = distance_l2(next, x);
    x = std::move(next);
    if (residual < kGenericAscentTolerance) return x;
  }
  throw ConvergenceError("generic choice map did not converge", residual);
}

double Regularizer::conjugate(ConstSpan y) const {
  if (kind_ == RegularizerKind::entropy) {
    require_dim(y, dim());
    require_finite(y, "dual vector");
    return log_sum_exp(y);
  }
  const Vector x = choice(y);
  // x is feasible by construction; skip the membership test of value().
  switch (kind_) {
    case RegularizerKind::euclidean: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - center_[i];
        s += d * d;
      }
      return dot(y, x) - 0.5 * s;
    }
    default:
      return dot(y, x) - value_(x);
  }
}

Vector choice_map(const Regularizer& reg, ConstSpan y) { return reg.choice(y); }

double conjugate_value(const Regularizer& reg, ConstSpan y) { return reg.conjugate(y); }

Vector project_body(const ConvexBody& body, ConstSpan y) { return body.project(y); }

double bregman_conjugate(const Regularizer& reg, ConstSpan y1, ConstSpan y2) {
  const Vector q2 = reg.choice(y2);
  double cross = 0.0;
  for (std::size_t i = 0; i < q2.size(); ++i) cross += (y1[i] - y2[i]) * q2[i];
  return reg.conjugate(y1) - reg.conjugate(y2) - cross;
}

double check_gradient(const Regularizer& reg, ConstSpan y, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("finite-difference step must be positive");
  const Vector q = reg.choice(y);
  Vector probe(y.begin(), y.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const double saved = probe[i];
    probe[i] = saved + eps;
    const double up = reg.conjugate(probe);
    probe[i] = saved - eps;
    const double down = reg.conjugate(probe);
    probe[i] = saved;
    const double fd = (up - down) / (2.0 * eps);
    worst = std::max(worst, std::abs(fd - q[i]) / std::max(1.0, std::abs(q[i])));
  }
  return worst;
}

DepthEstimate compute_depth(const Regularizer& reg) {
  const ConvexBody& body = reg.body();
  DepthEstimate est;
  switch (reg.kind()) {
    case RegularizerKind::entropy: {
      const double d = static_cast<double>(reg.dim());
      est.h_min = -std::log(d);
      est.h_max = 0.0;
      break;
    }
    case RegularizerKind::euclidean: {
      const Vector& c = reg.center();
      const double far = body.max_distance_l2(c);
      est.h_max = 0.5 * far * far;
      const Vector nearest = body.project(c);
      est.h_min = 0.5 * squared_l2(add_scaled(nearest, -1.0, c));
      break;
    }
    case RegularizerKind::generic: {
      const Vector argmin = reg.choice(Vector(reg.dim(), 0.0));
      est.h_min = reg.value(argmin);
      std::vector<Vector> candidates;
      if (auto verts = body.vertices()) {
        candidates = std::move(*verts);
      } else {
        candidates = halton_sphere_points(body.ball_center(), body.ball_radius(), kDepthSamples);
        est.approximate = true;
      }
      est.h_max = -std::numeric_limits<double>::infinity();
      for (const auto& p : candidates) {
        // Sampled sphere points can sit a rounding error outside the ball.
        const double v = reg.value(body.project(p));
        if (!std::isfinite(v)) throw DomainError("regularizer is unbounded on its body");
        est.h_max = std::max(est.h_max, v);
      }
      break;
    }
  }
  est.value = std::max(0.0, est.h_max - est.h_min);
  return est;
}

double depth(const Regularizer& reg) { return reg.depth(); }

// -- smallest enclosing ball --------------------------------------------------

namespace {

// The optimal ball is the circumball of an affinely independent subset of
// the points whose convex hull contains its centre. Guess that subset from
// the points nearly as far as the approximate radius and keep the exact
// circumball only if it passes both optimality conditions.
void polish_enclosing_ball(const std::vector<Vector>& points, Ball& ball) {
  const std::size_t dim = ball.center.size();
  std::vector<const Vector*> support;
  Eigen::MatrixXd basis(dim, 0);
  for (const auto& p : points) {
    if (distance_l2(p, ball.center) < ball.radius * (1.0 - 1e-3)) continue;
    if (support.empty()) {
      support.push_back(&p);
      continue;
    }
    if (support.size() > dim) break;
    Eigen::MatrixXd grown(dim, basis.cols() + 1);
    grown.leftCols(basis.cols()) = basis;
    for (std::size_t j = 0; j < dim; ++j) grown(j, basis.cols()) = p[j] - (*support[0])[j];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(grown);
    qr.setThreshold(1e-10);
    if (qr.rank() == grown.cols()) {
      basis = std::move(grown);
      support.push_back(&p);
    }
  }
  if (support.size() < 2) return;

  // c = p0 + B lambda with (B^T B) lambda = diag(B^T B) / 2.
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  const Eigen::VectorXd lambda = gram.ldlt().solve(0.5 * gram.diagonal());
  if (!lambda.allFinite() || 1.0 - lambda.sum() < -1e-9 || lambda.minCoeff() < -1e-9) return;
  const Eigen::VectorXd offset = basis * lambda;
  Vector center(dim);
  for (std::size_t j = 0; j < dim; ++j) center[j] = (*support[0])[j] + offset(static_cast<Eigen::Index>(j));
  double radius = 0.0;
  for (const auto& p : points) radius = std::max(radius, distance_l2(p, center));
  if (radius <= ball.radius) ball = Ball{std::move(center), radius};
}

}  // namespace

Ball min_enclosing_ball(const std::vector<Vector>& points, double eps,
                        std::size_t max_iterations) {
  if (points.empty()) throw InvalidInput("min_enclosing_ball needs at least one point");
  if (!(eps > 0.0)) throw InvalidInput("min_enclosing_ball tolerance must be positive");
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    require_dim(p, dim);
    require_finite(p, "enclosing-ball point");
  }

  const double wanted = std::ceil(1.0 / (eps * eps));
  const std::size_t iterations =
      wanted >= static_cast<double>(max_iterations) ? max_iterations
                                                    : static_cast<std::size_t>(wanted);

  auto farthest = [&](const Vector& c) {
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        const double d = points[i][j] - c[j];
        s += d * d;
      }
      if (s > best_dist) {
        best = i;
        best_dist = s;
      }
    }
    return std::pair{best, std::sqrt(best_dist)};
  };

  Vector center = points.front();
  for (std::size_t k = 1; k <= iterations; ++k) {
    const auto [far, dist] = farthest(center);
    if (dist == 0.0) break;
    const double w = 1.0 / static_cast<double>(k + 1);
    for (std::size_t j = 0; j < dim; ++j) center[j] += w * (points[far][j] - center[j]);
  }
  const double radius = farthest(center).second;
  Ball ball{std::move(center), radius};
  polish_enclosing_ball(points, ball);
  return ball;
}

Regularizer minimal_depth_regularizer(const ConvexBody& body) {
  switch (body.kind()) {
    case BodyKind::l2_ball:
      return Regularizer::euclidean(body, body.ball_center());
    case BodyKind::simplex:
    case BodyKind::box: {
      const Ball ball = min_enclosing_ball(*body.vertices());
      // The Badoiu-Clarkson center is a convex combination of vertices, so
      // it already lies in the body up to rounding.
      return Regularizer::euclidean(body, body.project(ball.center));
    }
    case BodyKind::vertex_polytope: {
      const auto verts = *body.vertices();
      if (verts.size() == 1) return Regularizer::euclidean(body, verts.front());
      throw Unsupported(
          "minimal-depth regularizer on a multi-vertex polytope needs a projection oracle");
    }
  }
  throw Unsupported("unsupported body");
}

}  // namespace noregret
