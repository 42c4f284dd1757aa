#pragma once

// Action sets, regularizers and their choice maps.
//
// A regularizer h on a compact convex body C defines the choice map
//   Q_h(y) = argmax_{x in C} { <y, x> - h(x) }
// which is also the gradient of the convex conjugate h*. Everything in this
// header is an immutable value; all operations are pure.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "noregret/linalg.hpp"

namespace noregret {

enum class BodyKind { simplex, box, l2_ball, vertex_polytope };

std::string_view to_string(BodyKind kind);

/// Nonempty compact convex action set, described through oracles.
class ConvexBody {
 public:
  static ConvexBody simplex(std::size_t dim, Norm norm = Norm::l1);
  static ConvexBody box(Vector lower, Vector upper, Norm norm = Norm::l2);
  static ConvexBody unit_box(std::size_t dim, Norm norm = Norm::l2);
  static ConvexBody ball(Vector center, double radius, Norm norm = Norm::l2);
  static ConvexBody polytope(std::vector<Vector> vertices, Norm norm = Norm::l2);

  std::size_t dim() const noexcept { return dim_; }
  BodyKind kind() const noexcept;
  Norm norm() const noexcept { return norm_; }
  Norm dual_norm() const noexcept { return dual_of(norm_); }

  /// Same set, different primal norm tag.
  ConvexBody with_norm(Norm norm) const;

  bool contains(ConstSpan x, double tol = 1e-10) const;

  /// Euclidean projection. Throws Unsupported for vertex polytopes with more
  /// than one vertex (that would be a quadratic program).
  Vector project(ConstSpan y) const;

  /// A maximizer of <u, x> over the body. Ties between vertices go to the
  /// lowest index (simplex coordinate, box corner, polytope vertex).
  Vector linear_max(ConstSpan u) const;

  /// max_{x in C} <u, x>
  double support(ConstSpan u) const;

  /// Extreme points when the body is a polytope (simplex, box, listed
  /// vertices); nullopt for balls. Boxes enumerate 2^dim corners, so this
  /// throws Unsupported above 20 dimensions.
  std::optional<std::vector<Vector>> vertices() const;

  /// max_{x in C} ||x - p||_2 (exact for every kind).
  double max_distance_l2(ConstSpan p) const;

  /// Ball data (center, radius); throws Unsupported for other kinds.
  const Vector& ball_center() const;
  double ball_radius() const;
  const Vector& box_lower() const;
  const Vector& box_upper() const;

 private:
  struct Simplex {};
  struct Box {
    Vector lower;
    Vector upper;
  };
  struct Ball {
    Vector center;
    double radius;
  };
  struct Polytope {
    std::vector<Vector> vertices;
  };
  using Shape = std::variant<Simplex, Box, Ball, Polytope>;

  ConvexBody(std::size_t dim, Norm norm, Shape shape)
      : dim_(dim), norm_(norm), shape_(std::move(shape)) {}

  std::size_t dim_;
  Norm norm_;
  Shape shape_;
};

/// argmin over the simplex of ||y - x||_2 by sort and threshold.
Vector project_simplex(ConstSpan y);

/// Softmax, computed with max subtraction.
Vector logit_choice(ConstSpan y);

enum class RegularizerKind { entropy, euclidean, generic };

std::string_view to_string(RegularizerKind kind);

/// Depth h_max - h_min together with a flag telling whether it came from
/// sampling rather than an exact extreme-point computation.
struct DepthEstimate {
  double value = 0.0;
  double h_min = 0.0;
  double h_max = 0.0;
  bool approximate = false;
};

/// A strongly convex function h that is finite exactly on its body.
class Regularizer {
 public:
  using Function = std::function<double(ConstSpan)>;
  using Gradient = std::function<Vector(ConstSpan)>;

  /// Negative Gibbs entropy sum x_i log x_i on the simplex. K = 1 for l1.
  static Regularizer entropy(std::size_t dim);

  /// h(x) = 1/2 ||x - center||^2 on `body`; center defaults to the origin.
  /// K = 1 for l2.
  static Regularizer euclidean(ConvexBody body, std::optional<Vector> center = std::nullopt);

  /// Arbitrary differentiable h with strong convexity modulus `K` with
  /// respect to `norm`. `smoothness` (Lipschitz constant of the gradient in
  /// l2, defaults to K) sets the ascent step of the choice map.
  static Regularizer generic(ConvexBody body, Function value, Gradient gradient, double K,
                             Norm norm, std::optional<double> smoothness = std::nullopt);

  RegularizerKind kind() const noexcept { return kind_; }
  const ConvexBody& body() const noexcept { return *body_; }
  std::size_t dim() const noexcept { return body_->dim(); }

  /// Strong convexity modulus with respect to norm().
  double K() const noexcept { return K_; }
  Norm norm() const noexcept { return norm_; }
  Norm dual_norm() const noexcept { return dual_of(norm_); }

  double depth() const noexcept { return depth_.value; }
  double h_min() const noexcept { return depth_.h_min; }
  double h_max() const noexcept { return depth_.h_max; }
  bool depth_is_approximate() const noexcept { return depth_.approximate; }
  const DepthEstimate& depth_estimate() const noexcept { return depth_; }

  /// Only meaningful for the euclidean kind.
  const Vector& center() const noexcept { return center_; }

  /// h(x). Throws DomainError outside the body.
  double value(ConstSpan x) const;

  /// Q_h(y). Throws InvalidInput on non-finite y, ConvergenceError if the
  /// generic ascent stalls.
  Vector choice(ConstSpan y) const;

  /// h*(y) = <y, Q_h(y)> - h(Q_h(y)); log-sum-exp for the entropy.
  double conjugate(ConstSpan y) const;

 private:
  Regularizer() = default;

  Vector generic_choice(ConstSpan y) const;

  RegularizerKind kind_ = RegularizerKind::entropy;
  std::shared_ptr<const ConvexBody> body_;
  double K_ = 1.0;
  double smoothness_ = 1.0;
  Norm norm_ = Norm::l1;
  Vector center_;
  Function value_;
  Gradient gradient_;
  DepthEstimate depth_;
};

/// Free-function spellings of the regularizer queries.
Vector choice_map(const Regularizer& reg, ConstSpan y);
double conjugate_value(const Regularizer& reg, ConstSpan y);
Vector project_body(const ConvexBody& body, ConstSpan y);

/// D_{h*}(y1, y2) = h*(y1) - h*(y2) - <y1 - y2, Q_h(y2)>, using grad h* = Q_h.
double bregman_conjugate(const Regularizer& reg, ConstSpan y1, ConstSpan y2);

/// Largest relative error between central finite differences of h* and the
/// coordinates of Q_h(y). The denominator is max(1, |Q_i|).
double check_gradient(const Regularizer& reg, ConstSpan y, double eps = 1e-6);

/// Computes h_max - h_min from scratch. Entropy is analytic; the euclidean
/// kind uses extreme points or closed forms; generic bodies without a vertex
/// list fall back to 10^4 quasi-random samples and set `approximate`.
DepthEstimate compute_depth(const Regularizer& reg);
double depth(const Regularizer& reg);

struct Ball {
  Vector center;
  double radius = 0.0;
};

/// Badoiu-Clarkson core-set iteration for the smallest enclosing ball.
/// Runs min(1/eps^2, max_iterations) steps; the radius reported is the
/// largest distance from the returned center.
Ball min_enclosing_ball(const std::vector<Vector>& points, double eps = 1e-6,
                        std::size_t max_iterations = 1'000'000);

/// Euclidean regularizer centred at the smallest enclosing ball of the body,
/// which has the smallest depth among 1-strongly convex (l2) regularizers.
Regularizer minimal_depth_regularizer(const ConvexBody& body);

}  // namespace noregret
