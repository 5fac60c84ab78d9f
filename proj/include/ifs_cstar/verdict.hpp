#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ifs_cstar/conditions.hpp"

namespace ifs_cstar {

struct HypothesisLedger {
  std::optional<ConditionResult> embeddings;
  std::optional<ConditionResult> osc;
  std::optional<ConditionResult> clopen_images;
  std::optional<SigmaResult> sigma;
  std::optional<ConditionResult> essentially_free;
  std::optional<ConditionResult> graph_separation;
  std::optional<SeedRefinement> seed_refinement;
};

// Matrix-level evidence from a refined basis.
struct EvidenceSummary {
  std::size_t identity_passed = 0;
  std::size_t identity_failed = 0;
  // Nonzero diagonal entries found in components of nonzero degree.
  std::size_t off_degree_diagonals = 0;
  std::size_t off_degree_scanned = 0;
};

enum class MasaVerdict { yes, no, inconclusive };
enum class CartanVerdict { yes, no, inconclusive, not_applicable };
std::string to_string(MasaVerdict v);
std::string to_string(CartanVerdict v);

struct Verdict {
  MasaVerdict masa = MasaVerdict::inconclusive;
  CartanVerdict cartan = CartanVerdict::inconclusive;
  std::vector<std::string> applied;
  std::vector<std::string> failed;  // hypotheses that are false or unknown
  std::vector<std::string> notes;
  std::optional<EvidenceSummary> evidence;
};

// Throws InternalError when a hypothesis check is missing from the ledger, or
// when evidence contradicts a masa conclusion.
Verdict evaluate_verdict(const AffineIfs& ifs, const HypothesisLedger& ledger,
                         const std::optional<EvidenceSummary>& evidence);

}  // namespace ifs_cstar
