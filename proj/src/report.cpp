#include "ifs_cstar/report.hpp"

#include <sstream>

#include "ifs_cstar/config.hpp"
#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/sparse_op.hpp"

namespace ifs_cstar {

using nlohmann::json;

InvariantResult& SuiteResult::invariant(const std::string& n) {
  for (auto& inv : invariants)
    if (inv.name == n) return inv;
  invariants.push_back({n, 0, 0, nullptr});
  return invariants.back();
}

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& inv : invariants) n += inv.failed;
  return n;
}

std::size_t SuiteResult::passes() const {
  std::size_t n = 0;
  for (const auto& inv : invariants) n += inv.passed;
  return n;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failures();
  return n;
}

namespace {

ojson points_json(const std::vector<Point>& pts) {
  ojson a = ojson::array();
  for (const auto& p : pts) a.push_back(to_string(p));
  return a;
}

std::vector<Point> points_from(const json& j) {
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(parse_point(e.get<std::string>()));
  return out;
}

ojson word_json(const IndexWord& w) {
  ojson a = ojson::array();
  for (int l : w.letters()) a.push_back(l);
  return a;
}

IndexWord word_from(const json& j) { return IndexWord(j.get<std::vector<int>>()); }

ojson map_json(const AffineMap& m) {
  ojson e;
  e["linear"] = ojson::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_string(m.linear()(r, c)));
    e["linear"].push_back(row);
  }
  e["offset"] = ojson::array();
  for (const auto& b : m.offset()) e["offset"].push_back(to_string(b));
  return e;
}

AffineMap map_from(const json& j) {
  const auto& off = j.at("offset");
  const std::size_t d = off.size();
  RationalMatrix m(d, d);
  std::vector<Rational> offset;
  for (std::size_t r = 0; r < d; ++r) {
    offset.push_back(parse_rational(off[r].get<std::string>()));
    for (std::size_t c = 0; c < d; ++c) m(r, c) = parse_rational(j.at("linear")[r][c].get<std::string>());
  }
  return {m, offset};
}

ojson tri_json(Tri t) {
  switch (t) {
    case Tri::yes: return true;
    case Tri::no: return false;
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

Tri tri_from(const json& j) {
  if (j.is_boolean()) return j.get<bool>() ? Tri::yes : Tri::no;
  return tri_from_string(j.get<std::string>());
}

std::string value_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

ojson to_json(const ConditionResult& r) {
  ojson j;
  j["holds"] = tri_json(r.holds);
  j["method"] = to_string(r.method);
  j["witness_points"] = points_json(r.witness_points);
  j["witness_words"] = ojson::array();
  for (const auto& w : r.witness_words) j["witness_words"].push_back(word_json(w));
  j["notes"] = r.notes;
  j["resolution"] = r.resolution ? ojson(*r.resolution) : ojson(nullptr);
  j["up_to_depth"] = r.up_to_depth ? ojson(*r.up_to_depth) : ojson(nullptr);
  return j;
}

ConditionResult condition_from_json(const json& j) {
  ConditionResult r;
  r.holds = tri_from(j.at("holds"));
  r.method = method_from_string(j.at("method").get<std::string>());
  r.witness_points = points_from(j.at("witness_points"));
  for (const auto& w : j.at("witness_words")) r.witness_words.push_back(word_from(w));
  r.notes = j.at("notes").get<std::string>();
  if (!j.at("resolution").is_null()) r.resolution = j.at("resolution").get<int>();
  if (!j.at("up_to_depth").is_null()) r.up_to_depth = j.at("up_to_depth").get<int>();
  return r;
}

ojson to_json(const SigmaResult& s) {
  ojson j;
  j["decided"] = s.decided;
  j["consistent"] = s.consistent;
  j["branches"] = ojson::array();
  for (const auto& b : s.branches) {
    ojson e;
    e["index"] = b.index;
    e["region"] = ojson::array();
    for (const auto& side : b.region.sides)
      e["region"].push_back({{"lo", to_string(side.lo)},
                             {"hi", to_string(side.hi)},
                             {"lo_closed", side.lo_closed},
                             {"hi_closed", side.hi_closed}});
    e["inverse"] = map_json(b.inverse);
    j["branches"].push_back(e);
  }
  j["overlap_witnesses"] = points_json(s.overlap_witnesses);
  j["notes"] = s.notes;
  return j;
}

SigmaResult sigma_from_json(const json& j) {
  SigmaResult s;
  s.decided = j.at("decided").get<bool>();
  s.consistent = j.at("consistent").get<bool>();
  for (const auto& e : j.at("branches")) {
    SigmaBranch b;
    b.index = e.at("index").get<int>();
    for (const auto& side : e.at("region"))
      b.region.sides.push_back({parse_rational(side.at("lo").get<std::string>()),
                                parse_rational(side.at("hi").get<std::string>()), side.at("lo_closed").get<bool>(),
                                side.at("hi_closed").get<bool>()});
    b.inverse = map_from(e.at("inverse"));
    s.branches.push_back(std::move(b));
  }
  s.overlap_witnesses = points_from(j.at("overlap_witnesses"));
  s.notes = j.at("notes").get<std::string>();
  return s;
}

ojson to_json(const SeedRefinement& s) {
  ojson j;
  j["depth"] = s.depth;
  j["kept"] = points_json(s.kept);
  j["removed"] = ojson::array();
  for (const auto& r : s.removed)
    j["removed"].push_back({{"seed", to_string(r.seed)},
                            {"reason", r.reason},
                            {"word_a", word_json(r.word_a)},
                            {"word_b", word_json(r.word_b)},
                            {"point", to_string(r.point)}});
  return j;
}

SeedRefinement refinement_from_json(const json& j) {
  SeedRefinement s;
  s.depth = j.at("depth").get<int>();
  s.kept = points_from(j.at("kept"));
  for (const auto& e : j.at("removed"))
    s.removed.push_back({parse_point(e.at("seed").get<std::string>()), e.at("reason").get<std::string>(),
                         word_from(e.at("word_a")), word_from(e.at("word_b")),
                         parse_point(e.at("point").get<std::string>())});
  return s;
}

ojson to_json(const HypothesisLedger& l) {
  ojson j;
  auto cond = [](const std::optional<ConditionResult>& c) { return c ? to_json(*c) : ojson(nullptr); };
  j["embeddings"] = cond(l.embeddings);
  j["osc"] = cond(l.osc);
  j["clopen_images"] = cond(l.clopen_images);
  j["sigma"] = l.sigma ? to_json(*l.sigma) : ojson(nullptr);
  j["essentially_free"] = cond(l.essentially_free);
  j["graph_separation"] = cond(l.graph_separation);
  j["seed_refinement"] = l.seed_refinement ? to_json(*l.seed_refinement) : ojson(nullptr);
  return j;
}

HypothesisLedger ledger_from_json(const json& j) {
  HypothesisLedger l;
  auto cond = [&](const char* key) -> std::optional<ConditionResult> {
    if (j.at(key).is_null()) return std::nullopt;
    return condition_from_json(j.at(key));
  };
  l.embeddings = cond("embeddings");
  l.osc = cond("osc");
  l.clopen_images = cond("clopen_images");
  if (!j.at("sigma").is_null()) l.sigma = sigma_from_json(j.at("sigma"));
  l.essentially_free = cond("essentially_free");
  l.graph_separation = cond("graph_separation");
  if (!j.at("seed_refinement").is_null()) l.seed_refinement = refinement_from_json(j.at("seed_refinement"));
  return l;
}

ojson to_json(const Verdict& v) {
  ojson j;
  switch (v.masa) {
    case MasaVerdict::yes: j["masa"] = true; break;
    case MasaVerdict::no: j["masa"] = false; break;
    case MasaVerdict::inconclusive: j["masa"] = "inconclusive"; break;
  }
  switch (v.cartan) {
    case CartanVerdict::yes: j["cartan"] = true; break;
    case CartanVerdict::no: j["cartan"] = false; break;
    default: j["cartan"] = to_string(v.cartan); break;
  }
  j["applied"] = v.applied;
  j["failed"] = v.failed;
  j["notes"] = v.notes;
  if (v.evidence)
    j["evidence"] = {{"identity_passed", v.evidence->identity_passed},
                     {"identity_failed", v.evidence->identity_failed},
                     {"off_degree_scanned", v.evidence->off_degree_scanned},
                     {"off_degree_diagonals", v.evidence->off_degree_diagonals}};
  else
    j["evidence"] = nullptr;
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  const json& masa = j.at("masa");
  if (masa.is_boolean())
    v.masa = masa.get<bool>() ? MasaVerdict::yes : MasaVerdict::no;
  else if (masa.get<std::string>() == "inconclusive")
    v.masa = MasaVerdict::inconclusive;
  else
    throw ConfigError("bad masa value in report");
  const json& cartan = j.at("cartan");
  if (cartan.is_boolean()) {
    v.cartan = cartan.get<bool>() ? CartanVerdict::yes : CartanVerdict::no;
  } else {
    const auto s = cartan.get<std::string>();
    if (s == "inconclusive")
      v.cartan = CartanVerdict::inconclusive;
    else if (s == "not-applicable")
      v.cartan = CartanVerdict::not_applicable;
    else
      throw ConfigError("bad cartan value in report");
  }
  v.applied = j.at("applied").get<std::vector<std::string>>();
  v.failed = j.at("failed").get<std::vector<std::string>>();
  v.notes = j.at("notes").get<std::vector<std::string>>();
  if (!j.at("evidence").is_null()) {
    const json& e = j.at("evidence");
    v.evidence = EvidenceSummary{e.at("identity_passed").get<std::size_t>(), e.at("identity_failed").get<std::size_t>(),
                                 e.at("off_degree_diagonals").get<std::size_t>(),
                                 e.at("off_degree_scanned").get<std::size_t>()};
  }
  return v;
}

ojson entries_to_json(const SparseOp& a) {
  ojson out = ojson::array();
  for (const auto& [r, c, v] : a.entries())
    out.push_back({r, c, v.re().get_num().get_str(), v.re().get_den().get_str(), v.im().get_num().get_str(),
                   v.im().get_den().get_str()});
  return out;
}

ojson report_to_json(const Report& r) {
  ojson j;
  j["command"] = r.command;
  j["config"] = r.config;
  j["ledger"] = r.ledger ? to_json(*r.ledger) : ojson(nullptr);
  if (r.basis)
    j["basis"] = {{"seeds", points_json(r.basis->seeds)}, {"depth", r.basis->depth}, {"size", r.basis->size}};
  else
    j["basis"] = nullptr;
  j["verdict"] = r.verdict ? to_json(*r.verdict) : ojson(nullptr);
  j["suites"] = ojson::array();
  for (const auto& s : r.suites) {
    ojson e;
    e["name"] = s.name;
    e["skipped"] = s.skipped;
    e["reason"] = s.reason;
    e["passed"] = s.passes();
    e["failed"] = s.failures();
    e["invariants"] = ojson::array();
    for (const auto& inv : s.invariants)
      e["invariants"].push_back(
          {{"name", inv.name}, {"passed", inv.passed}, {"failed", inv.failed}, {"counterexample", inv.counterexample}});
    j["suites"].push_back(e);
  }
  if (r.timing) {
    ojson t;
    t["measured"] = true;
    t["total_ms"] = r.timing->total_ms;
    t["suites_ms"] = r.timing->suites_ms;
    j["timing"] = t;
  } else {
    j["timing"] = {{"measured", false}};
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  if (!j.at("ledger").is_null()) r.ledger = ledger_from_json(j.at("ledger"));
  if (!j.at("basis").is_null())
    r.basis = BasisSummary{points_from(j.at("basis").at("seeds")), j.at("basis").at("depth").get<int>(),
                           j.at("basis").at("size").get<std::size_t>()};
  if (!j.at("verdict").is_null()) r.verdict = verdict_from_json(j.at("verdict"));
  for (const auto& e : j.at("suites")) {
    SuiteResult s;
    s.name = e.at("name").get<std::string>();
    s.skipped = e.at("skipped").get<bool>();
    s.reason = e.at("reason").get<std::string>();
    for (const auto& inv : e.at("invariants"))
      s.invariants.push_back({inv.at("name").get<std::string>(), inv.at("passed").get<std::size_t>(),
                              inv.at("failed").get<std::size_t>(), ojson(inv.at("counterexample"))});
    r.suites.push_back(std::move(s));
  }
  const json& t = j.at("timing");
  if (t.at("measured").get<bool>()) {
    Timing timing;
    timing.total_ms = t.at("total_ms").get<double>();
    timing.suites_ms = t.at("suites_ms").get<std::map<std::string, double>>();
    r.timing = timing;
  }
  return r;
}

namespace {

void text_condition(std::ostringstream& out, const std::string& name, const ConditionResult& c) {
  out << "  " << name << ": " << to_string(c.holds) << " [" << to_string(c.method);
  if (c.resolution) out << ", resolution " << *c.resolution;
  if (c.up_to_depth) out << ", up to depth " << *c.up_to_depth;
  out << "]";
  if (!c.notes.empty()) out << " " << c.notes;
  out << "\n";
  if (!c.witness_points.empty() || !c.witness_words.empty()) {
    out << "    witness:";
    for (const auto& p : c.witness_points) out << " " << to_string(p);
    for (const auto& w : c.witness_words) out << " " << to_string(w);
    out << "\n";
  }
}

}  // namespace

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "system: " << value_text(r.config.value("name", ojson("unnamed"))) << "\n";
  if (r.basis) {
    out << "basis: " << r.basis->size << " points, depth " << r.basis->depth << ", seeds";
    for (const auto& s : r.basis->seeds) out << " " << to_string(s);
    out << "\n";
  }
  if (r.ledger) {
    const HypothesisLedger& l = *r.ledger;
    out << "hypotheses:\n";
    if (l.embeddings) text_condition(out, "embeddings", *l.embeddings);
    if (l.osc) text_condition(out, "osc", *l.osc);
    if (l.clopen_images) text_condition(out, "clopen_images", *l.clopen_images);
    if (l.sigma) {
      out << "  sigma: " << (l.sigma->decided ? (l.sigma->consistent ? "consistent" : "inconsistent") : "undecided");
      if (!l.sigma->notes.empty()) out << " " << l.sigma->notes;
      out << "\n";
    }
    if (l.essentially_free) text_condition(out, "essentially_free", *l.essentially_free);
    if (l.graph_separation) text_condition(out, "graph_separation", *l.graph_separation);
    if (l.seed_refinement) {
      out << "  seed refinement (depth " << l.seed_refinement->depth << "): kept";
      for (const auto& p : l.seed_refinement->kept) out << " " << to_string(p);
      out << "\n";
      for (const auto& rm : l.seed_refinement->removed)
        out << "    removed " << to_string(rm.seed) << ": " << rm.reason << "\n";
    }
  }
  for (const auto& s : r.suites) {
    out << "suite " << s.name << ": ";
    if (s.skipped) {
      out << "skipped (" << s.reason << ")\n";
      continue;
    }
    out << s.passes() << " passed, " << s.failures() << " failed\n";
    for (const auto& inv : s.invariants) {
      out << "  " << inv.name << ": " << inv.passed << " passed, " << inv.failed << " failed\n";
      if (!inv.counterexample.is_null()) out << "    counterexample: " << inv.counterexample.dump() << "\n";
    }
  }
  if (r.verdict) {
    const Verdict& v = *r.verdict;
    out << "verdict: masa = " << to_string(v.masa) << ", cartan = " << to_string(v.cartan) << "\n";
    if (!v.applied.empty()) {
      out << "  applied: ";
      for (std::size_t i = 0; i < v.applied.size(); ++i) out << (i ? ", " : "") << v.applied[i];
      out << "\n";
    }
    if (!v.failed.empty()) {
      out << "  failed or unknown:";
      for (const auto& f : v.failed) out << " " << f;
      out << "\n";
    }
    for (const auto& n : v.notes) out << "  note: " << n << "\n";
  }
  if (r.timing) out << "timing: " << r.timing->total_ms << " ms\n";
  return out.str();
}

int report_exit_code(const Report& r, bool strict) {
  if (r.failures() > 0) return 3;
  if (strict && r.verdict &&
      (r.verdict->masa == MasaVerdict::inconclusive || r.verdict->cartan == CartanVerdict::inconclusive))
    return 4;
  return 0;
}

}  // namespace ifs_cstar
