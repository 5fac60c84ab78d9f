#include "doctest.h"

#include <algorithm>

#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/pipeline.hpp"
#include "ifs_cstar/random.hpp"
#include "ifs_cstar/verdict.hpp"
#include "support.hpp"

using namespace ifs_cstar;
using namespace testing_support;

namespace {

ConditionResult holding(Tri t, std::optional<int> up_to = std::nullopt) {
  ConditionResult r;
  r.holds = t;
  r.up_to_depth = up_to;
  return r;
}

SigmaResult sigma(bool consistent) {
  SigmaResult s;
  s.decided = true;
  s.consistent = consistent;
  return s;
}

HypothesisLedger all_hold(Tri graph_separation) {
  HypothesisLedger l;
  l.embeddings = holding(Tri::yes);
  l.osc = holding(Tri::yes);
  l.clopen_images = holding(Tri::yes);
  l.sigma = sigma(true);
  l.essentially_free = holding(Tri::yes);
  l.graph_separation = holding(graph_separation);
  l.seed_refinement = SeedRefinement{};
  return l;
}

Tri random_tri(Rng& rng) { return static_cast<Tri>(rng.below(3)); }

HypothesisLedger random_ledger(Rng& rng) {
  HypothesisLedger l = all_hold(random_tri(rng));
  l.embeddings = holding(random_tri(rng));
  l.osc = holding(random_tri(rng));
  l.clopen_images = holding(random_tri(rng));
  l.sigma = sigma(rng.coin());
  const Tri ef = random_tri(rng);
  l.essentially_free = holding(ef, ef == Tri::yes && rng.coin() ? std::optional<int>(4) : std::nullopt);
  return l;
}

RunConfig gallery_config(const char* name) { return load_config_text(gallery_entry(name).config); }

bool cites(const Verdict& v, const char* thm) {
  return std::find(v.applied.begin(), v.applied.end(), thm) != v.applied.end();
}

}  // namespace

TEST_CASE("verdict: half maps are a masa but not Cartan") {
  const RunConfig cfg = gallery_config("halfmaps");
  const Verdict v = evaluate_verdict(cfg.ifs, run_conditions(cfg), std::nullopt);
  CHECK(v.masa == MasaVerdict::yes);
  CHECK(v.cartan == CartanVerdict::no);
  CHECK(v.applied == std::vector<std::string>{"Thm 6.1.4", "Thm 6.2.1"});
}

TEST_CASE("verdict: cantor is a Cartan masa") {
  const RunConfig cfg = gallery_config("cantor");
  const Verdict v = evaluate_verdict(cfg.ifs, run_conditions(cfg), std::nullopt);
  CHECK(v.masa == MasaVerdict::yes);
  CHECK(v.cartan == CartanVerdict::yes);
  CHECK(v.applied == std::vector<std::string>{"Thm 6.1.4", "Thm 6.2.1"});
}

TEST_CASE("verdict: duplicate maps are inconclusive") {
  const RunConfig cfg = gallery_config("duplicate");
  const HypothesisLedger l = run_conditions(cfg);
  CHECK(l.osc->holds == Tri::no);
  CHECK(l.essentially_free->holds == Tri::no);
  const Verdict v = evaluate_verdict(cfg.ifs, l, std::nullopt);
  CHECK(v.masa == MasaVerdict::inconclusive);
  CHECK(v.failed == std::vector<std::string>{"osc"});
  CHECK(v.applied.empty());
}

TEST_CASE("verdict rules on hand-built ledgers") {
  HypothesisLedger l = all_hold(Tri::unknown);
  Verdict v = evaluate_verdict(halfmaps(), l, std::nullopt);
  CHECK(v.masa == MasaVerdict::yes);
  CHECK(v.cartan == CartanVerdict::inconclusive);
  CHECK(v.failed == std::vector<std::string>{"graph_separation"});

  l.essentially_free = holding(Tri::no);
  v = evaluate_verdict(halfmaps(), l, std::nullopt);
  CHECK(v.masa == MasaVerdict::no);
  CHECK(v.cartan == CartanVerdict::not_applicable);
  CHECK(v.applied == std::vector<std::string>{"Thm 6.1.2"});

  l.essentially_free = holding(Tri::yes, 4);
  v = evaluate_verdict(halfmaps(), l, std::nullopt);
  CHECK(v.masa == MasaVerdict::inconclusive);
  CHECK(v.failed == std::vector<std::string>{"essentially_free"});
  CHECK_FALSE(v.notes.empty());

  HypothesisLedger missing = all_hold(Tri::yes);
  missing.sigma.reset();
  CHECK_THROWS_WITH_AS(evaluate_verdict(halfmaps(), missing, std::nullopt), "ledger incomplete: missing sigma",
                       InternalError);
}

TEST_CASE("evidence never overrides the theorems") {
  EvidenceSummary e;
  e.identity_failed = 3;
  const Verdict v = evaluate_verdict(cantor(), all_hold(Tri::yes), e);
  CHECK(v.masa == MasaVerdict::yes);
  REQUIRE(v.evidence);
  CHECK(v.evidence->identity_failed == 3);
  e.off_degree_diagonals = 1;
  CHECK_THROWS_AS(evaluate_verdict(cantor(), all_hold(Tri::yes), e), InternalError);
}

TEST_CASE("verdict consistency and citation completeness (fuzz)") {
  Rng rng(91);
  for (int trial = 0; trial < 500; ++trial) {
    const HypothesisLedger l = random_ledger(rng);
    const Verdict v = evaluate_verdict(cantor(), l, std::nullopt);
    if (v.cartan == CartanVerdict::yes) CHECK(v.masa == MasaVerdict::yes);
    const bool base = l.embeddings->certified_true() && l.osc->certified_true();
    switch (v.masa) {
      case MasaVerdict::no:
        CHECK(base);
        CHECK(l.essentially_free->holds == Tri::no);
        CHECK(v.applied == std::vector<std::string>{"Thm 6.1.2"});
        break;
      case MasaVerdict::yes:
        CHECK(base);
        CHECK(l.clopen_images->certified_true());
        CHECK(l.sigma->consistent);
        CHECK(l.essentially_free->certified_true());
        CHECK(cites(v, "Thm 6.1.4"));
        CHECK(cites(v, "Thm 6.2.1") == (l.graph_separation->holds != Tri::unknown));
        CHECK(v.applied.size() == (cites(v, "Thm 6.2.1") ? 2u : 1u));
        break;
      case MasaVerdict::inconclusive:
        CHECK(v.applied.empty());
        CHECK_FALSE(v.failed.empty());
        break;
    }
  }
}

TEST_CASE("adding a passing hypothesis never flips a decided verdict (fuzz)") {
  Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const HypothesisLedger before = random_ledger(rng);
    HypothesisLedger after = before;
    // Turn one undecided hypothesis into a certified pass.
    switch (rng.below(6)) {
      case 0: if (after.embeddings->holds == Tri::unknown) after.embeddings = holding(Tri::yes); break;
      case 1: if (after.osc->holds == Tri::unknown) after.osc = holding(Tri::yes); break;
      case 2: if (after.clopen_images->holds == Tri::unknown) after.clopen_images = holding(Tri::yes); break;
      case 3:
        if (after.essentially_free->holds == Tri::unknown || after.essentially_free->up_to_depth)
          after.essentially_free = holding(Tri::yes);
        break;
      case 4: if (after.graph_separation->holds == Tri::unknown) after.graph_separation = holding(Tri::yes); break;
      default: after.sigma = sigma(true); break;
    }
    const Verdict v0 = evaluate_verdict(cantor(), before, std::nullopt);
    const Verdict v1 = evaluate_verdict(cantor(), after, std::nullopt);
    if (v0.masa != MasaVerdict::inconclusive) CHECK(v1.masa == v0.masa);
    if (v0.cartan == CartanVerdict::yes || v0.cartan == CartanVerdict::no) CHECK(v1.cartan == v0.cartan);
  }
}

TEST_CASE("verdict names") {
  CHECK(to_string(MasaVerdict::yes) == "true");
  CHECK(to_string(CartanVerdict::not_applicable) == "not-applicable");
  CHECK(to_string(MasaVerdict::inconclusive) == "inconclusive");
}
