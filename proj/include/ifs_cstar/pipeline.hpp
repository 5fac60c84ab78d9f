#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifs_cstar/config.hpp"
#include "ifs_cstar/orbit_basis.hpp"
#include "ifs_cstar/report.hpp"

namespace ifs_cstar {

struct RunOptions {
  std::string command = "verdict";  // check, verify or verdict
  bool timing = false;
};

// Runs every structural check, honouring the configuration's `assume` list.
HypothesisLedger run_conditions(const RunConfig& cfg);

// Explicit seeds are refined; "auto" seeds are searched. Refinement runs at
// twice the basis depth. The refinement record is written to `record`.
std::vector<Point> select_seeds(const RunConfig& cfg, SeedRefinement& record);

// Re-checks every failing witness in the ledger exactly.
SuiteResult run_condition_suite(const RunConfig& cfg, const HypothesisLedger& ledger);
SuiteResult run_identity_suite(const BasisPtr& basis, const RunConfig& cfg);
SuiteResult run_graded_suite(const BasisPtr& basis, const RunConfig& cfg, EvidenceSummary& evidence);

Report run_pipeline(const RunConfig& cfg, const RunOptions& options);

}  // namespace ifs_cstar
