#include "ifs_cstar/verdict.hpp"

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

std::string to_string(MasaVerdict v) {
  switch (v) {
    case MasaVerdict::yes: return "true";
    case MasaVerdict::no: return "false";
    case MasaVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(CartanVerdict v) {
  switch (v) {
    case CartanVerdict::yes: return "true";
    case CartanVerdict::no: return "false";
    case CartanVerdict::inconclusive: return "inconclusive";
    case CartanVerdict::not_applicable: return "not-applicable";
  }
  return "inconclusive";
}

Verdict evaluate_verdict(const AffineIfs& ifs, const HypothesisLedger& ledger,
                         const std::optional<EvidenceSummary>& evidence) {
  (void)ifs;
  std::string missing;
  auto need = [&](bool present, const char* name) {
    if (present) return;
    if (!missing.empty()) missing += ", ";
    missing += name;
  };
  need(ledger.embeddings.has_value(), "embeddings");
  need(ledger.osc.has_value(), "osc");
  need(ledger.clopen_images.has_value(), "clopen_images");
  need(ledger.sigma.has_value(), "sigma");
  need(ledger.essentially_free.has_value(), "essentially_free");
  need(ledger.graph_separation.has_value(), "graph_separation");
  if (!missing.empty()) throw InternalError("ledger incomplete: missing " + missing);

  Verdict v;
  v.evidence = evidence;
  const bool embeddings = ledger.embeddings->certified_true();
  const bool osc = ledger.osc->certified_true();
  const bool clopen = ledger.clopen_images->certified_true();
  const bool sigma = ledger.sigma->decided && ledger.sigma->consistent;
  const ConditionResult& ef = *ledger.essentially_free;
  const bool free = ef.certified_true();
  const bool not_free = ef.holds == Tri::no;

  for (const auto* c : {&*ledger.embeddings, &*ledger.osc, &*ledger.clopen_images, &ef, &*ledger.graph_separation})
    if (c->method == Method::user_asserted) {
      v.notes.emplace_back("some hypotheses are user-asserted rather than checked");
      break;
    }
  if (ef.holds == Tri::yes && ef.up_to_depth)
    v.notes.push_back("essential freeness holds only up to word length " + std::to_string(*ef.up_to_depth) +
                      "; not certified for all words");

  if (embeddings && osc && not_free) {
    v.masa = MasaVerdict::no;
    v.cartan = CartanVerdict::not_applicable;
    v.applied.emplace_back("Thm 6.1.2");
    v.notes.emplace_back("the not-masa conclusion is drawn only under the open set condition");
    return v;
  }

  if (embeddings && osc && clopen && sigma && free) {
    if (evidence && evidence->off_degree_diagonals > 0)
      throw InternalError("evidence contradicts the masa conclusion: " +
                          std::to_string(evidence->off_degree_diagonals) +
                          " nonzero diagonal entries in components of nonzero degree");
    v.masa = MasaVerdict::yes;
    v.applied.emplace_back("Thm 6.1.4");
    const Tri gs = ledger.graph_separation->holds;
    if (gs == Tri::yes) {
      v.cartan = CartanVerdict::yes;
      v.applied.emplace_back("Thm 6.2.1");
    } else if (gs == Tri::no) {
      v.cartan = CartanVerdict::no;
      v.applied.emplace_back("Thm 6.2.1");
    } else {
      v.cartan = CartanVerdict::inconclusive;
      v.failed.emplace_back("graph_separation");
    }
    return v;
  }

  v.masa = MasaVerdict::inconclusive;
  v.cartan = CartanVerdict::inconclusive;
  if (!embeddings) v.failed.emplace_back("embeddings");
  if (!osc) v.failed.emplace_back("osc");
  if (!not_free) {
    if (!clopen) v.failed.emplace_back("clopen_images");
    if (!sigma) v.failed.emplace_back("sigma");
    if (!free) v.failed.emplace_back("essentially_free");
  }
  return v;
}

}  // namespace ifs_cstar
