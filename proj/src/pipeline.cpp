#include "ifs_cstar/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "ifs_cstar/chains.hpp"
#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/graded_op.hpp"
#include "ifs_cstar/norm.hpp"
#include "ifs_cstar/random.hpp"
#include "ifs_cstar/representation.hpp"

namespace ifs_cstar {

namespace {

bool assumed(const RunConfig& cfg, const std::string& name) {
  return std::find(cfg.assume.begin(), cfg.assume.end(), name) != cfg.assume.end();
}

ConditionResult asserted() {
  ConditionResult r;
  r.holds = Tri::yes;
  r.method = Method::user_asserted;
  r.notes = "asserted in the configuration";
  return r;
}

template <typename F>
ConditionResult guarded(F&& check) {
  try {
    return check();
  } catch (const UnsupportedError& e) {
    ConditionResult r;
    r.holds = Tri::unknown;
    r.method = Method::cover_approximate;
    r.notes = e.what();
    return r;
  }
}

ojson column_json(const SparseOp& a, std::size_t c) {
  ojson out = ojson::array();
  for (const auto& [r, v] : a.column(c)) out.push_back({r, to_string(v)});
  return out;
}

// Records one equality check between two operators on their common valid columns.
void record_equal(InvariantResult& inv, const SparseOp& lhs, const SparseOp& rhs, ojson payload) {
  const auto bad = first_mismatch_on_valid_columns(lhs, rhs);
  if (!bad) {
    ++inv.passed;
    return;
  }
  ++inv.failed;
  if (!inv.counterexample.is_null()) return;
  payload["column"] = *bad;
  payload["column_point"] = to_string(lhs.basis()->point(*bad));
  payload["lhs"] = column_json(lhs, *bad);
  payload["rhs"] = column_json(rhs, *bad);
  inv.counterexample = std::move(payload);
}

void record(InvariantResult& inv, bool ok, const std::function<ojson()>& payload) {
  if (ok) {
    ++inv.passed;
    return;
  }
  ++inv.failed;
  if (inv.counterexample.is_null()) inv.counterexample = payload();
}

double max_abs_on_chains(const ChainFn& f, const std::vector<Chain>& chains) {
  double best = 0;
  for (const auto& c : chains) best = std::max(best, std::sqrt(to_double(evaluate(f, c).norm2())));
  return best;
}

}  // namespace

HypothesisLedger run_conditions(const RunConfig& cfg) {
  const AffineIfs& ifs = cfg.ifs;
  HypothesisLedger l;
  l.embeddings = assumed(cfg, "embeddings") ? asserted() : guarded([&] { return check_embeddings(ifs); });
  if (assumed(cfg, "osc")) {
    l.osc = asserted();
  } else if (ifs.open_set()) {
    l.osc = guarded([&] { return check_open_set_condition(ifs, cfg.resolution); });
  } else {
    ConditionResult r;
    r.holds = Tri::unknown;
    r.notes = "no candidate open set given";
    l.osc = r;
  }
  l.clopen_images =
      assumed(cfg, "clopen_images") ? asserted() : guarded([&] { return check_clopen_iterated_image(ifs, cfg.clopen_depth); });
  if (assumed(cfg, "sigma")) {
    SigmaResult s;
    s.decided = true;
    s.consistent = true;
    s.notes = "asserted in the configuration";
    l.sigma = s;
  } else {
    try {
      l.sigma = construct_left_inverse(ifs);
    } catch (const Error& e) {
      SigmaResult s;
      s.decided = false;
      s.notes = e.what();
      l.sigma = s;
    }
  }
  l.essentially_free = assumed(cfg, "essentially_free")
                           ? asserted()
                           : guarded([&] { return check_essential_freeness(ifs, cfg.freeness_depth); });
  l.graph_separation =
      assumed(cfg, "graph_separation") ? asserted() : guarded([&] { return check_graph_separation(ifs); });
  return l;
}

std::vector<Point> select_seeds(const RunConfig& cfg, SeedRefinement& record) {
  const int refine_depth = 2 * cfg.depth;
  if (cfg.seeds) {
    record = scan_seed_set(cfg.ifs, *cfg.seeds, refine_depth);
    if (record.kept.empty()) throw NoAdmissibleSeeds();
    return record.kept;
  }
  std::vector<Point> seeds;
  try {
    seeds = auto_seeds(cfg.ifs, cfg.seed_count, refine_depth, cfg.rng_seed);
  } catch (const NoAdmissibleSeeds&) {
    record = SeedRefinement{refine_depth, {}, {}};
    throw;
  }
  record = scan_seed_set(cfg.ifs, seeds, refine_depth);
  return record.kept;
}

SuiteResult run_condition_suite(const RunConfig& cfg, const HypothesisLedger& l) {
  const AffineIfs& ifs = cfg.ifs;
  SuiteResult s{.name = "conditions"};
  if (l.graph_separation && l.graph_separation->holds == Tri::no &&
      l.graph_separation->method != Method::user_asserted) {
    const auto& g = *l.graph_separation;
    const Point& x = g.witness_points.at(0);
    const bool ok = apply_word(ifs, g.witness_words.at(0), x) == apply_word(ifs, g.witness_words.at(1), x) &&
                    space_contains(ifs.space(), x).inside;
    record(s.invariant("graph-separation-witness"), ok, [&] { return to_json(g); });
  }
  if (l.essentially_free && l.essentially_free->holds == Tri::no) {
    const auto& e = *l.essentially_free;
    const AffineMap a = compose_word(ifs, e.witness_words.at(0));
    const AffineMap b = compose_word(ifs, e.witness_words.at(1));
    bool ok = !(e.witness_words[0] == e.witness_words[1]);
    for (const auto& v : hull_vertices(ifs.space())) ok = ok && a(v) == b(v);
    record(s.invariant("essential-freeness-witness"), ok, [&] { return to_json(e); });
  }
  if (l.sigma && l.sigma->decided && l.sigma->consistent && !l.sigma->branches.empty()) {
    std::vector<Point> sample = hull_vertices(ifs.space());
    if (l.seed_refinement)
      sample.insert(sample.end(), l.seed_refinement->kept.begin(), l.seed_refinement->kept.end());
    for (const auto& x : sample)
      for (int k = 1; k <= ifs.size(); ++k) {
        const auto back = (*l.sigma)(ifs.map(k)(x));
        record(s.invariant("left-inverse"), back && *back == x, [&] {
          return ojson{{"point", to_string(x)}, {"branch", k}};
        });
      }
  }
  if (l.seed_refinement) {
    const SeedRefinement again = scan_seed_set(ifs, l.seed_refinement->kept, l.seed_refinement->depth);
    record(s.invariant("refinement-idempotent"), again.removed.empty() && again.kept == l.seed_refinement->kept,
           [&] { return to_json(again); });
  }
  return s;
}

SuiteResult run_identity_suite(const BasisPtr& basis, const RunConfig& cfg) {
  SuiteResult s{.name = "identities"};
  const AffineIfs& ifs = basis->ifs();
  const std::size_t d = ifs.dim();
  const auto D = static_cast<std::size_t>(basis->depth());
  const std::size_t top = std::min<std::size_t>(2, D);
  const std::size_t top3 = std::min<std::size_t>(3, D);
  const double N = ifs.size();
  Rng rng(cfg.rng_seed);
  const SparseOp unit = rho_0(basis, PolyFn::constant(0, d, 1));
  std::vector<std::vector<Chain>> chains;
  for (std::size_t n = 0; n <= top; ++n) chains.push_back(enumerate_chains(*basis, n));
  std::map<int, std::set<std::pair<std::size_t, std::size_t>>> pairs_by_degree;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::vector<ChainFn> f, g;
    for (std::size_t n = 0; n <= top; ++n) {
      f.push_back(random_chain_fn(rng, n, d, 2));
      g.push_back(random_chain_fn(rng, n, d, 2));
    }
    auto fg = [&](std::size_t m, std::size_t n) {
      return ojson{{"trial", trial}, {"m", m}, {"n", n}, {"f", to_string(f[m])}, {"g", to_string(g[n])}};
    };

    if (D >= 1) {
      const SparseOp rf = rho_n(basis, 1, f[1]);
      const SparseOp rg = rho_n(basis, 1, g[1]);
      record_equal(s.invariant("inner-product"), rf.adjoint() * rg, rho_0(basis, inner_product_fn(ifs, f[1], g[1])),
                   fg(1, 1));
      record_equal(s.invariant("module-action"), rho_0(basis, f[0]) * rg, rho_n(basis, 1, left_action(f[0], g[1])),
                   ojson{{"trial", trial}, {"a", to_string(f[0])}, {"f", to_string(g[1])}});
      record_equal(s.invariant("unit"), unit * rf, rf, fg(1, 1));
      const SparseOp faithful = diag_expectation(rf.adjoint() * rf).valid_part();
      record(s.invariant("faithful-expectation"), faithful.is_zero() == rf.valid_part().is_zero(),
             [&] { return fg(1, 1); });
    }
    for (std::size_t m = 0; m <= top; ++m)
      for (std::size_t n = 0; n <= top; ++n) {
        if (m + n <= D)
          record_equal(s.invariant("box-product"), rho_n(basis, m, f[m]) * rho_n(basis, n, g[n]),
                       rho_n(basis, m + n, boxdot(f[m], g[n])), fg(m, n));
        record_equal(s.invariant("box-adjoint-product"), rho_n(basis, m, f[m]) * rho_n(basis, n, g[n]).adjoint(),
                     rho_mn(basis, m, n, boxtimes(f[m], g[n])), fg(m, n));
        const BichainFn h = random_bichain_fn(rng, m, n, d, 2);
        record_equal(s.invariant("adjoint-symmetry"), rho_mn(basis, m, n, h).adjoint(),
                     rho_mn(basis, n, m, h.swapped_conjugate()),
                     ojson{{"trial", trial}, {"m", m}, {"n", n}, {"f", to_string(h)}});
      }
    for (std::size_t n = 1; n <= top; ++n) {
      const SparseOp p = (rho_n(basis, n, f[n]).adjoint() * rho_n(basis, n, g[n])).valid_part();
      record(s.invariant("en-star-en-diagonal"), classify_relation(p) == Relation::diagonal, [&] { return fg(n, n); });
    }
    for (std::size_t m = 0; m <= top3; ++m)
      for (std::size_t n = 0; n <= top3; ++n) {
        const BichainFn h = random_bichain_fn(rng, m, n, d, 2);
        const SparseOp a = rho_mn(basis, m, n, h);
        const int degree = static_cast<int>(m) - static_cast<int>(n);
        auto payload = [&](std::size_t r, std::size_t c) {
          return ojson{{"trial", trial}, {"m", m}, {"n", n}, {"f", to_string(h)}, {"row", r}, {"column", c}};
        };
        for (const auto& [r, c, v] : a.entries()) {
          record(s.invariant("support-discipline"), witnessed_pair(*basis, r, c, m, n), [&] { return payload(r, c); });
          pairs_by_degree[degree].emplace(r, c);
          if (m != n)
            record(s.invariant("degree-vanishing"), r != c, [&] { return payload(r, c); });
        }
      }
    for (std::size_t n = 1; n <= top; ++n) {
      const NormEstimate est = op_norm_estimate(rho_n(basis, n, f[n]));
      const double sup = max_abs_on_chains(f[n], chains[n]);
      const double upper = std::pow(N, static_cast<double>(n) / 2) * sup;
      record(s.invariant("norm-sandwich"), est.estimate >= sup - 1e-9 && est.estimate <= upper + 1e-9, [&] {
        return ojson{{"trial", trial}, {"n", n}, {"f", to_string(f[n])}, {"estimate", est.estimate},
                     {"max_abs", sup}};
      });
    }
    if (D >= 1) {
      const int k = static_cast<int>(rng.between(1, ifs.size()));
      const SparseOp alpha = rho_0(basis, f[0]) * rho_branch(basis, k, f[1]);
      const SparseOp beta = rho_0(basis, g[0]);
      const bool qm = classify_relation(alpha) != Relation::general;
      const bool ok = qm && classify_relation(alpha.adjoint() * beta * alpha) == Relation::diagonal &&
                      classify_relation(alpha * beta * alpha.adjoint()) == Relation::diagonal;
      record(s.invariant("normalizer"), ok, [&] {
        return ojson{{"trial", trial}, {"branch", k}, {"a", to_string(f[0])}, {"f", to_string(f[1])},
                     {"b", to_string(g[0])}};
      });
    }
  }

  // Pair sets of distinct degrees must not meet.
  for (auto it = pairs_by_degree.begin(); it != pairs_by_degree.end(); ++it)
    for (auto jt = std::next(it); jt != pairs_by_degree.end(); ++jt) {
      std::vector<std::pair<std::size_t, std::size_t>> common;
      std::set_intersection(it->second.begin(), it->second.end(), jt->second.begin(), jt->second.end(),
                            std::back_inserter(common));
      record(s.invariant("degree-pairs-disjoint"), common.empty(), [&] {
        return ojson{{"degree_a", it->first}, {"degree_b", jt->first}, {"row", common[0].first},
                     {"column", common[0].second}};
      });
    }
  return s;
}

SuiteResult run_graded_suite(const BasisPtr& basis, const RunConfig& cfg, EvidenceSummary& evidence) {
  SuiteResult s{.name = "graded"};
  const std::size_t d = basis->ifs().dim();
  const auto D = static_cast<std::size_t>(basis->depth());
  const std::size_t top = std::min<std::size_t>(2, D);
  Rng rng(cfg.rng_seed + 1);

  auto random_graded = [&](std::optional<int> only_degree) {
    GradedOp a(basis);
    for (std::size_t m = 0; m <= top; ++m)
      for (std::size_t n = 0; n <= top; ++n) {
        const int k = static_cast<int>(m) - static_cast<int>(n);
        if (only_degree && k != *only_degree) continue;
        if (!only_degree && rng.coin()) continue;
        a.add(k, rho_mn(basis, m, n, random_bichain_fn(rng, m, n, d, 2)));
      }
    return a;
  };
  auto equal = [](const GradedOp& a, const GradedOp& b) {
    std::set<int> degrees;
    for (const auto& [k, x] : a.components()) degrees.insert(k);
    for (const auto& [k, x] : b.components()) degrees.insert(k);
    const SparseOp zero(a.basis());
    for (int k : degrees) {
      const auto ia = a.components().find(k);
      const auto ib = b.components().find(k);
      const SparseOp& x = ia == a.components().end() ? zero : ia->second;
      const SparseOp& y = ib == b.components().end() ? zero : ib->second;
      if (!equal_on_valid_columns(x, y)) return false;
    }
    return true;
  };
  auto support_json = [](const GradedOp& a) { return ojson(a.support()); };

  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int lim = static_cast<int>(top);
    const int i = static_cast<int>(rng.between(-lim, lim));
    const int j = static_cast<int>(rng.between(-lim, lim));
    const GradedOp a = random_graded(i);
    const GradedOp b = random_graded(j);
    const GradedOp ab = graded_multiply(a, b);
    const auto sup = ab.support();
    record(s.invariant("degrees-add"), std::all_of(sup.begin(), sup.end(), [&](int k) { return k == i + j; }), [&] {
      return ojson{{"trial", trial}, {"degree_a", i}, {"degree_b", j}, {"support", support_json(ab)}};
    });
    const GradedOp adj = graded_adjoint(a);
    const auto adj_sup = adj.support();
    record(s.invariant("adjoint-negates-degree"),
           std::all_of(adj_sup.begin(), adj_sup.end(), [&](int k) { return k == -i; }) && equal(graded_adjoint(adj), a),
           [&] { return ojson{{"trial", trial}, {"degree", i}, {"support", support_json(adj)}}; });

    const GradedOp mixed = random_graded(std::nullopt);
    const GradedOp e = graded_expectation(mixed);
    record(s.invariant("expectation-idempotent"), equal(graded_expectation(e), e),
           [&] { return ojson{{"trial", trial}}; });
    for (const auto& [k, x] : mixed.components()) {
      if (k == 0) continue;
      for (std::size_t c = 0; c < x.size(); ++c) {
        ++evidence.off_degree_scanned;
        if (!x.get(c, c).is_zero()) ++evidence.off_degree_diagonals;
      }
    }
    const auto esup = e.support();
    record(s.invariant("expectation-degree-zero"), std::all_of(esup.begin(), esup.end(), [](int k) { return k == 0; }),
           [&] { return ojson{{"trial", trial}, {"support", support_json(e)}}; });

    if (D >= 1) {
      const ChainFn f = random_chain_fn(rng, 1, d, 2);
      const ChainFn g = random_chain_fn(rng, 1, d, 2);
      GradedOp x(basis), y(basis);
      x.add(1, rho_n(basis, 1, f));
      y.add(-1, rho_n(basis, 1, g).adjoint());
      const GradedOp xy = graded_multiply(x, y);
      record_equal(s.invariant("graded-box-adjoint"), xy.components().at(0), rho_mn(basis, 1, 1, boxtimes(f, g)),
                   ojson{{"trial", trial}, {"f", to_string(f)}, {"g", to_string(g)}});
    }
  }
  return s;
}

Report run_pipeline(const RunConfig& cfg, const RunOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  Timing timing;
  auto lap = [&](const std::string& name, Clock::time_point from) {
    timing.suites_ms[name] = std::chrono::duration<double, std::milli>(Clock::now() - from).count();
  };
  auto wants = [&](const std::string& suite) {
    return std::find(cfg.suites.begin(), cfg.suites.end(), suite) != cfg.suites.end();
  };
  const bool check = options.command == "check";
  const bool verify = options.command == "verify";
  const bool verdict = options.command == "verdict";
  if (!check && !verify && !verdict) throw ConfigError("unknown command: " + options.command);

  Report report;
  report.command = options.command;
  report.config = config_to_json(cfg);

  HypothesisLedger ledger;
  if (check || verdict) {
    const auto t = Clock::now();
    ledger = run_conditions(cfg);
    lap("conditions", t);
  }

  SeedRefinement refinement;
  BasisPtr basis;
  std::string no_basis_reason;
  try {
    const auto seeds = select_seeds(cfg, refinement);
    if (!check) basis = OrbitBasis::build(cfg.ifs, seeds, cfg.depth);
  } catch (const NoAdmissibleSeeds& e) {
    if (verify) throw;
    no_basis_reason = e.what();
  }
  ledger.seed_refinement = refinement;
  if (basis) report.basis = BasisSummary{basis->seeds(), basis->depth(), basis->size()};

  if (check || verdict) {
    report.ledger = ledger;
    report.suites.push_back(run_condition_suite(cfg, ledger));
  }

  std::optional<EvidenceSummary> evidence;
  const bool run_identities = verify || (verdict && wants("identities"));
  const bool run_graded = verify || (verdict && wants("graded"));
  if (run_identities || run_graded) {
    if (!basis) {
      for (const char* name : {"identities", "graded"})
        if ((name == std::string("identities") && run_identities) || (name == std::string("graded") && run_graded))
          report.suites.push_back(SuiteResult{.name = name, .skipped = true, .reason = no_basis_reason});
    } else {
      EvidenceSummary ev;
      if (run_identities) {
        const auto t = Clock::now();
        report.suites.push_back(run_identity_suite(basis, cfg));
        lap("identities", t);
      }
      if (run_graded) {
        const auto t = Clock::now();
        report.suites.push_back(run_graded_suite(basis, cfg, ev));
        lap("graded", t);
      }
      for (const auto& s : report.suites) {
        if (s.name == "conditions") continue;
        ev.identity_passed += s.passes();
        ev.identity_failed += s.failures();
      }
      evidence = ev;
    }
  }

  if (verdict) report.verdict = evaluate_verdict(cfg.ifs, ledger, evidence);

  timing.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (options.timing) report.timing = timing;
  return report;
}

}  // namespace ifs_cstar
