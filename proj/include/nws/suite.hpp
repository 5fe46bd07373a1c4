#ifndef NWS_SUITE_HPP
#define NWS_SUITE_HPP

#include <string>
#include <vector>

#include "nws/config.hpp"
#include "nws/report.hpp"

namespace nws {

enum class SweepQuantity { FOfS, UOfX, Trajectory };

// Runs every mapped claim and returns the reports sorted by claim_id. A
// failure inside one claim yields an INCONCLUSIVE report with diagnostics;
// the suite always completes.
std::vector<ClaimReport> run_claim_suite(const ExperimentConfig& config);

// One JSON object per report, fixed key order; identical inputs give
// byte-identical output.
std::string report_to_json(const ClaimReport& r);
std::string reports_to_jsonl(const std::vector<ClaimReport>& reports);

// Writes a plotting CSV under config.csv_dir and returns its path.
std::string export_sweep(const ExperimentConfig& config, SweepQuantity quantity);

}  // namespace nws

#endif
