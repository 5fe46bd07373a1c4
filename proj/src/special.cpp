#include "nws/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nws {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955126;  // 2/sqrt(pi)

// Maclaurin series of erfi: (2/sqrt(pi)) sum y^(2k+1) / (k! (2k+1)).
// All terms are positive, so there is no cancellation; usable until e^{y^2}
// overflows.
double erfi_series(double y) {
  const double y2 = y * y;
  double term = y;  // y^(2k+1)/k!
  double sum = y;
  for (int k = 1; k < 4000; ++k) {
    term *= y2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) < std::abs(sum) * 1e-17) break;
  }
  return kTwoOverSqrtPi * sum;
}

// sum_k (2k-1)!! / (2y^2)^k, the correction series of the large-y expansion
// erfi(y) ~ e^{y^2} / (y sqrt(pi)) * sum. Truncated at the smallest term.
double erfi_asymptotic_sum(double y) {
  const double inv = 1.0 / (2.0 * y * y);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (2 * k - 1) * inv;
    if (next >= term) break;  // series started diverging
    term = next;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

}  // namespace

double erfi(double y) {
  if (std::abs(y) < 26.0) return erfi_series(y);
  return y > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

double log_erfi(double y) {
  if (!(y > 0.0)) throw std::domain_error("log_erfi: y must be positive");
  if (y < 20.0) return std::log(erfi_series(y));
  return y * y - std::log(y * std::sqrt(std::numbers::pi)) + std::log(erfi_asymptotic_sum(y));
}

double dawson(double y) {
  const double ay = std::abs(y);
  if (ay < 26.0) {
    return 0.5 * std::sqrt(std::numbers::pi) * std::exp(-y * y) * erfi_series(y);
  }
  return erfi_asymptotic_sum(ay) / (2.0 * y);
}

double log_erf_ratio(double beta, double t) {
  if (t < 0.0) throw std::domain_error("log_erf_ratio: t must be nonnegative");
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  const double z = beta * t;
  if (std::abs(z) < 1e-8) {
    // erf(sqrt(z))/sqrt(beta) = 2 sqrt(t/pi) (1 - z/3 + z^2/10 - ...)
    return std::log(kTwoOverSqrtPi * std::sqrt(t) * (1.0 - z / 3.0 + z * z / 10.0));
  }
  if (beta > 0.0) return std::log(std::erf(std::sqrt(z)) / std::sqrt(beta));
  const double y = std::sqrt(-z);
  return log_erfi(y) - 0.5 * std::log(-beta);
}

double erf_ratio(double beta, double t) {
  if (t < 0.0) throw std::domain_error("erf_ratio: t must be nonnegative");
  if (t == 0.0) return 0.0;
  const double z = beta * t;
  if (std::abs(z) < 1e-8) return kTwoOverSqrtPi * std::sqrt(t) * (1.0 - z / 3.0 + z * z / 10.0);
  if (beta > 0.0) return std::erf(std::sqrt(z)) / std::sqrt(beta);
  return std::exp(log_erf_ratio(beta, t));
}

}  // namespace nws
