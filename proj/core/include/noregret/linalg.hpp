#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace noregret {

using Vector = std::vector<double>;
using ConstSpan = std::span<const double>;

/// Primal norm attached to an action set. The dual norm follows from it.
enum class Norm { l1, l2, linf };

Norm dual_of(Norm norm);
std::string_view to_string(Norm norm);
Norm parse_norm(std::string_view name);

double dot(ConstSpan a, ConstSpan b);
double norm(ConstSpan v, Norm which);
double squared_l2(ConstSpan v);
double distance_l2(ConstSpan a, ConstSpan b);

/// out = a + scale * b
Vector add_scaled(ConstSpan a, double scale, ConstSpan b);
Vector scaled(ConstSpan v, double scale);
void add_in_place(Vector& acc, ConstSpan v);

bool all_finite(ConstSpan v);
/// Throws InvalidInput naming `what` if any entry is NaN or infinite.
void require_finite(ConstSpan v, std::string_view what);
/// Throws DimensionMismatch if `v.size() != dim`.
void require_dim(ConstSpan v, std::size_t dim);

double max_abs_diff(ConstSpan a, ConstSpan b);

/// Shift-stable log(sum exp(y_i)).
double log_sum_exp(ConstSpan y);

}  // namespace noregret
