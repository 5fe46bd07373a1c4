#ifndef NWS_PARAMS_HPP
#define NWS_PARAMS_HPP

#include <stdexcept>

namespace nws {

// Constants of u_t - nu u_xx + alpha u - epsilon u^n = 0. The codomain
// coefficient gamma is tied to epsilon by convention (see codomain module).
struct NwsParams {
  double nu;
  double alpha;
  double epsilon;
  int n;
  double gamma;

  NwsParams(double nu_, double alpha_, double epsilon_, int n_)
      : nu(nu_), alpha(alpha_), epsilon(epsilon_), n(n_), gamma(epsilon_) {
    if (!(nu > 0.0)) throw std::invalid_argument("NwsParams: nu must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("NwsParams: alpha must be positive");
    if (n < 2) throw std::invalid_argument("NwsParams: n must be >= 2");
  }
};

}  // namespace nws

#endif
