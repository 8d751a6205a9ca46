#include "k2t/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "k2t/errors.hpp"

namespace k2t {

namespace {

long double polish(long double x, long double a, long double b, long double c, long double d) {
  for (int step = 0; step < 2; ++step) {
    const long double f = ((a * x + b) * x + c) * x + d;
    const long double df = (3 * a * x + 2 * b) * x + c;
    if (df == 0) break;
    x -= f / df;
  }
  return x;
}

}  // namespace

std::vector<double> cubic_real_roots(double a, double b, double c, double d) {
  if (a == 0) throw DomainError("cubic_real_roots: leading coefficient is zero");
  using std::numbers::pi_v;
  const long double A = b / static_cast<long double>(a);
  const long double B = c / static_cast<long double>(a);
  const long double C = d / static_cast<long double>(a);

  // Depressed cubic y^3 + p*y + q with x = y - A/3.
  const long double shift = A / 3;
  const long double p = B - A * A / 3;
  const long double q = 2 * A * A * A / 27 - A * B / 3 + C;
  const long double disc = q * q / 4 + p * p * p / 27;

  std::vector<long double> roots;
  if (p == 0 && q == 0) {
    roots = {-shift};
  } else if (disc <= 0) {
    const long double m = 2 * std::sqrt(-p / 3);
    long double arg = (3 * q) / (p * m);
    arg = std::clamp(arg, -1.0L, 1.0L);
    const long double theta = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) roots.push_back(m * std::cos(theta - 2 * pi_v<long double> * k / 3) - shift);
  } else {
    const long double sq = std::sqrt(disc);
    const long double u = std::cbrt(-q / 2 + sq);
    const long double v = std::cbrt(-q / 2 - sq);
    roots = {u + v - shift};
  }

  std::vector<double> out;
  out.reserve(roots.size());
  for (long double r : roots) out.push_back(static_cast<double>(polish(r, 1, A, B, C)));
  std::sort(out.begin(), out.end());
  return out;
}

double largest_cubic_root(double b, double c, double d) { return cubic_real_roots(1, b, c, d).back(); }

}  // namespace k2t
