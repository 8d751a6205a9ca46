#include <cmath>
#include <string>

#include "k2t/cubic.hpp"
#include "k2t/errors.hpp"
#include "k2t/spectral.hpp"

namespace k2t {

namespace {

void require_family_range(std::int64_t t, std::int64_t n, const char* who) {
  if (t < 2 || n < t + 1) {
    throw DomainError(std::string(who) + ": need t >= 2 and n >= t+1 (got t=" + std::to_string(t) +
                      ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

CubicCoefficients ft_cubic(std::int64_t t, std::int64_t n) {
  require_family_range(t, n, "ft_cubic");
  const std::int64_t s = (n - 1) % t;
  // (x - s + 1)(x^2 - (t-1)x - (n-1)) + s(t-s), expanded.
  const auto b = -static_cast<double>(t + s - 2);
  const auto c = static_cast<double>((s - 1) * (t - 1) - (n - 1));
  const auto d = static_cast<double>((s - 1) * (n - 1) + s * (t - s));
  return {b, c, d};
}

double ft_mu_exact(std::int64_t t, std::int64_t n) {
  require_family_range(t, n, "ft_mu_exact");
  const std::int64_t s = (n - 1) % t;
  if (s == 0) {
    // Largest root of x^2 - (t-1)x - (n-1).
    const long double tm1 = static_cast<long double>(t - 1);
    return static_cast<double>(tm1 / 2 + std::sqrt(tm1 * tm1 / 4 + static_cast<long double>(n - 1)));
  }
  const auto [b, c, d] = ft_cubic(t, n);
  return largest_cubic_root(b, c, d);
}

double bound_upper(std::int64_t t, std::int64_t n) {
  if (t < 2 || n < 1) throw DomainError("bound_upper: need t >= 2 and n >= 1");
  const long double tl = static_cast<long double>(t);
  return static_cast<double>((tl - 1) / 2 +
                             std::sqrt(static_cast<long double>(n) + (tl * tl - 2 * tl - 3) / 4));
}

double bound_lower(std::int64_t t, std::int64_t n) {
  if (t < 2 || n < 1) throw DomainError("bound_lower: need t >= 2 and n >= 1");
  const long double correction = static_cast<long double>(t * (t + 1)) / (8.0L * static_cast<long double>(n));
  return static_cast<double>(static_cast<long double>(bound_upper(t, n)) - correction);
}

double general_theorem_threshold(std::int64_t t) { return 400.0 * std::pow(static_cast<double>(t), 6); }

bool bound_lower_in_range(std::int64_t t, std::int64_t n) {
  return t >= 4 && static_cast<double>(n) >= general_theorem_threshold(t);
}

double bound_ysh(std::int64_t n) {
  if (n < 2) throw DomainError("bound_ysh: need n >= 2");
  return static_cast<double>(1.5L + std::sqrt(static_cast<long double>(n) - 1.75L));
}

BoundSet bounds(std::int64_t t, std::int64_t n) {
  BoundSet b;
  b.upper = bound_upper(t, n);
  b.lower = bound_lower(t, n);
  b.lower_in_range = bound_lower_in_range(t, n);
  if (t == 3 && n >= 2) b.ysh = bound_ysh(n);
  return b;
}

double hub_lemma_threshold(std::int64_t t) {
  const double a = static_cast<double>(t - 1);
  const double b = static_cast<double>(5 * t - 3);
  return 16.0 * a * a * a * a * b * b;
}

}  // namespace k2t
