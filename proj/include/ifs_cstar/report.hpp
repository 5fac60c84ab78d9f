#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ifs_cstar/verdict.hpp"

namespace ifs_cstar {

class SparseOp;

using ojson = nlohmann::ordered_json;

struct InvariantResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  ojson counterexample;  // first failure; null when none
};

struct SuiteResult {
  std::string name;
  bool skipped = false;
  std::string reason{};
  std::vector<InvariantResult> invariants{};

  InvariantResult& invariant(const std::string& name);
  std::size_t failures() const;
  std::size_t passes() const;
};

struct BasisSummary {
  std::vector<Point> seeds;
  int depth = 0;
  std::size_t size = 0;
};

struct Timing {
  double total_ms = 0;
  std::map<std::string, double> suites_ms;
};

struct Report {
  std::string command;
  ojson config;
  std::optional<HypothesisLedger> ledger;
  std::optional<BasisSummary> basis;
  std::optional<Verdict> verdict;
  std::vector<SuiteResult> suites;
  std::optional<Timing> timing;  // absent unless timing was requested

  std::size_t failures() const;
};

ojson to_json(const ConditionResult& r);
ConditionResult condition_from_json(const nlohmann::json& j);
ojson to_json(const SigmaResult& s);
SigmaResult sigma_from_json(const nlohmann::json& j);
ojson to_json(const SeedRefinement& s);
SeedRefinement refinement_from_json(const nlohmann::json& j);
ojson to_json(const HypothesisLedger& l);
HypothesisLedger ledger_from_json(const nlohmann::json& j);
ojson to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

// Matrix entries as [row, col, re_num, re_den, im_num, im_den].
ojson entries_to_json(const SparseOp& a);

ojson report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);

// 0 ok, 3 invariant failure, 4 inconclusive verdict under strict.
int report_exit_code(const Report& r, bool strict);

}  // namespace ifs_cstar
