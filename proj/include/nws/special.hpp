#ifndef NWS_SPECIAL_HPP
#define NWS_SPECIAL_HPP

namespace nws {

// Dawson's integral D(y) = exp(-y^2) * integral_0^y exp(u^2) du.
double dawson(double y);

// erfi(y) = -i erf(iy), real for real y. Grows like exp(y^2); use log_erfi
// when overflow is a concern.
double erfi(double y);

// log(erfi(y)) for y > 0, finite for arbitrarily large y.
double log_erfi(double y);

// The analytic-in-beta ratio erf(sqrt(beta t)) / sqrt(beta) for real beta and
// t >= 0. Continues through beta = 0 (series) and beta < 0 (erfi branch).
// Overflow-safe: returns the log of the (always positive) value.
double log_erf_ratio(double beta, double t);

// Plain value of the ratio above; may overflow to +inf for very negative beta.
double erf_ratio(double beta, double t);

}  // namespace nws

#endif
