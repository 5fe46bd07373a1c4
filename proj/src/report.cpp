#include "nws/report.hpp"

#include <cmath>
#include <stdexcept>

namespace nws {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Supported: return "SUPPORTED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict judge(double residual, double error_estimate, double support_factor, double refute_factor) {
  if (!(support_factor > 0.0) || !(refute_factor > support_factor))
    throw std::invalid_argument("judge: need 0 < support_factor < refute_factor");
  if (!std::isfinite(residual) || !std::isfinite(error_estimate)) return Verdict::Inconclusive;
  if (residual <= support_factor * error_estimate) return Verdict::Supported;
  if (residual > refute_factor * error_estimate) return Verdict::Refuted;
  return Verdict::Inconclusive;
}

ClaimReport ClaimReport::make(std::string id, std::string ref, double residual, double error_estimate,
                              double support_factor, double refute_factor) {
  ClaimReport r;
  r.claim_id = std::move(id);
  r.paper_ref = std::move(ref);
  r.residual = residual;
  r.error_estimate = error_estimate;
  r.verdict = judge(residual, error_estimate, support_factor, refute_factor);
  return r;
}

}  // namespace nws
