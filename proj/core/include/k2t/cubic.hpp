#pragma once

#include <vector>

namespace k2t {

/// Real roots of a*x^3 + b*x^2 + c*x + d (a != 0), ascending. Uses the
/// trigonometric form when the discriminant admits three real roots and
/// Cardano otherwise; every root gets two Newton steps in long double.
std::vector<double> cubic_real_roots(double a, double b, double c, double d);

/// Largest real root of the monic cubic x^3 + b*x^2 + c*x + d.
double largest_cubic_root(double b, double c, double d);

}  // namespace k2t
