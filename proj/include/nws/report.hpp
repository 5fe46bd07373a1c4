#ifndef NWS_REPORT_HPP
#define NWS_REPORT_HPP

#include <map>
#include <string>

namespace nws {

enum class Verdict { Supported, Refuted, Inconclusive };

const char* to_string(Verdict v);

// A measured residual is judged against the numerical error estimate, never
// against an assumed outcome.
Verdict judge(double residual, double error_estimate, double support_factor = 10.0, double refute_factor = 100.0);

// One verified claim: what was measured, how noisy the measurement is, and
// the resulting verdict.
struct ClaimReport {
  std::string claim_id;
  std::string paper_ref;  // short human-readable tag for the claim being tested
  double residual = 0.0;
  double error_estimate = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, std::string> metadata;

  static ClaimReport make(std::string id, std::string ref, double residual, double error_estimate,
                          double support_factor = 10.0, double refute_factor = 100.0);
};

}  // namespace nws

#endif
