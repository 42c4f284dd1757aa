#include "noregret/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "noregret/errors.hpp"

namespace noregret {

Norm dual_of(Norm norm) {
  switch (norm) {
    case Norm::l1:
      return Norm::linf;
    case Norm::l2:
      return Norm::l2;
    case Norm::linf:
      return Norm::l1;
  }
  return Norm::l2;
}

std::string_view to_string(Norm norm) {
  switch (norm) {
    case Norm::l1:
      return "l1";
    case Norm::l2:
      return "l2";
    case Norm::linf:
      return "linf";
  }
  return "?";
}

Norm parse_norm(std::string_view name) {
  if (name == "l1") return Norm::l1;
  if (name == "l2") return Norm::l2;
  if (name == "linf") return Norm::linf;
  throw InvalidInput("unknown norm '" + std::string(name) + "'");
}

double dot(ConstSpan a, ConstSpan b) {
  require_dim(b, a.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(ConstSpan v, Norm which) {
  switch (which) {
    case Norm::l1: {
      double s = 0.0;
      for (double x : v) s += std::abs(x);
      return s;
    }
    case Norm::l2:
      return std::sqrt(squared_l2(v));
    case Norm::linf: {
      double m = 0.0;
      for (double x : v) m = std::max(m, std::abs(x));
      return m;
    }
  }
  return 0.0;
}

double squared_l2(ConstSpan v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double distance_l2(ConstSpan a, ConstSpan b) {
  require_dim(b, a.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vector add_scaled(ConstSpan a, double scale, ConstSpan b) {
  require_dim(b, a.size());
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * b[i];
  return out;
}

Vector scaled(ConstSpan v, double scale) {
  Vector out(v.begin(), v.end());
  for (double& x : out) x *= scale;
  return out;
}

void add_in_place(Vector& acc, ConstSpan v) {
  require_dim(v, acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

bool all_finite(ConstSpan v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

void require_finite(ConstSpan v, std::string_view what) {
  if (!all_finite(v)) throw InvalidInput(std::string(what) + " has non-finite entries");
}

void require_dim(ConstSpan v, std::size_t dim) {
  if (v.size() != dim) throw DimensionMismatch(dim, v.size());
}

double max_abs_diff(ConstSpan a, ConstSpan b) {
  require_dim(b, a.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double log_sum_exp(ConstSpan y) {
  if (y.empty()) throw InvalidInput("log_sum_exp of an empty vector");
  const double top = *std::max_element(y.begin(), y.end());
  double s = 0.0;
  for (double v : y) s += std::exp(v - top);
  return top + std::log(s);
}

}  // namespace noregret
