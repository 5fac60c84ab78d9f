// Acceptance run: one line per criterion, non-zero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "ifs_cstar/chains.hpp"
#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/graded_op.hpp"
#include "ifs_cstar/norm.hpp"
#include "ifs_cstar/pipeline.hpp"
#include "ifs_cstar/random.hpp"
#include "ifs_cstar/report.hpp"
#include "ifs_cstar/representation.hpp"
#include "oracles.hpp"

using namespace ifs_cstar;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

RunConfig gallery_config(const std::string& name) { return load_config_text(gallery_entry(name).config); }

// Refined auto-seed basis of a gallery system at its configured depth.
BasisPtr gallery_basis(const std::string& name) {
  const RunConfig cfg = gallery_config(name);
  SeedRefinement record;
  return OrbitBasis::build(cfg.ifs, select_seeds(cfg, record), cfg.depth);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome gallery_verdicts() {
  Outcome o;
  struct Expect {
    const char* name;
    MasaVerdict masa;
    CartanVerdict cartan;
  };
  for (const Expect& e : {Expect{"halfmaps", MasaVerdict::yes, CartanVerdict::no},
                          Expect{"cantor", MasaVerdict::yes, CartanVerdict::yes}}) {
    const auto t0 = Clock::now();
    const Report r = run_pipeline(gallery_config(e.name), RunOptions{});
    const double secs = seconds_since(t0);
    const Verdict& v = *r.verdict;
    const bool ok = v.masa == e.masa && v.cartan == e.cartan &&
                    v.applied == std::vector<std::string>{"Thm 6.1.4", "Thm 6.2.1"} && secs < 5.0 &&
                    r.failures() == 0;
    o.pass = o.pass && ok;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + e.name + " masa=" + to_string(v.masa) +
                " cartan=" + to_string(v.cartan) + fmt(" in %.2fs", secs);
  }
  return o;
}

Outcome witness_exactness() {
  const AffineIfs h = gallery_config("halfmaps").ifs;
  const ConditionResult r = check_graph_separation(h);
  Outcome o;
  o.pass = r.holds == Tri::no && r.witness_points.size() == 1;
  if (!o.pass) return {false, "no single witness"};
  const Point& x = r.witness_points[0];
  const Point a = h.map(1)(x), b = h.map(2)(x);
  o.pass = a == b && x == pt("1") && a == pt("1/2");
  o.detail = "x=" + to_string(x) + " gamma_1(x)=" + to_string(a) + " gamma_2(x)=" + to_string(b);
  return o;
}

Outcome identity_suite() {
  const auto t0 = Clock::now();
  std::size_t checked = 0, failed = 0, vacuous = 0;
  for (const char* name : {"cantor", "halfmaps"}) {
    const BasisPtr b = gallery_basis(name);
    const AffineIfs& ifs = b->ifs();
    const auto depth = static_cast<std::size_t>(b->depth());
    Rng rng(gallery_config(name).rng_seed);
    auto check = [&](bool ok) {
      ++checked;
      if (!ok) ++failed;
    };
    for (int trial = 0; trial < 50; ++trial) {
      const ChainFn f1 = random_chain_fn(rng, 1, ifs.dim(), 2);
      const ChainFn g1 = random_chain_fn(rng, 1, ifs.dim(), 2);
      check(equal_on_valid_columns(rho_n(b, 1, f1).adjoint() * rho_n(b, 1, g1),
                                   rho_0(b, inner_product_fn(ifs, f1, g1))));
      for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t n = 0; n <= 2; ++n) {
          const ChainFn f = random_chain_fn(rng, m, ifs.dim(), 2);
          const ChainFn g = random_chain_fn(rng, n, ifs.dim(), 2);
          if (m + n <= depth)
            check(equal_on_valid_columns(rho_n(b, m, f) * rho_n(b, n, g), rho_n(b, m + n, boxdot(f, g))));
          else if ((rho_n(b, m, f) * rho_n(b, n, g)).valid_columns().empty())
            ++vacuous;  // no column of the product is inside the truncation
          else
            check(false);
          check(equal_on_valid_columns(rho_n(b, m, f) * rho_n(b, n, g).adjoint(), rho_mn(b, m, n, boxtimes(f, g))));
          const BichainFn h = random_bichain_fn(rng, m, n, ifs.dim(), 2);
          check(equal_on_valid_columns(rho_mn(b, m, n, h).adjoint(), rho_mn(b, n, m, h.swapped_conjugate())));
        }
    }
  }
  const double secs = seconds_since(t0);
  return {failed == 0 && secs < 60.0, std::to_string(checked) + " identities, " + std::to_string(failed) +
                                          " failures, " + std::to_string(vacuous) +
                                          " box products with m+n > D have no valid column" + fmt(", %.2fs", secs)};
}

Outcome degree_vanishing() {
  std::size_t diagonals = 0, nonzero = 0, graded = 0, stray = 0;
  for (const char* name : {"cantor", "halfmaps"}) {
    const BasisPtr b = gallery_basis(name);
    const std::size_t dim = b->ifs().dim();
    Rng rng(gallery_config(name).rng_seed + 1);
    for (int trial = 0; trial < 100; ++trial) {
      for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 3; ++n) {
          if (m == n) continue;
          const SparseOp a = rho_mn(b, m, n, random_bichain_fn(rng, m, n, dim, 2));
          for (std::size_t i = 0; i < b->size(); ++i) {
            ++diagonals;
            if (!a.get(i, i).is_zero()) ++nonzero;
          }
        }
      GradedOp g(b);
      const int terms = 1 + static_cast<int>(rng.below(4));
      for (int t = 0; t < terms; ++t) {
        const auto m = static_cast<std::size_t>(rng.below(4));
        const auto n = static_cast<std::size_t>(rng.below(4));
        g.add(static_cast<int>(m) - static_cast<int>(n), rho_mn(b, m, n, random_bichain_fn(rng, m, n, dim, 2)));
      }
      ++graded;
      for (int k : graded_expectation(g).support())
        if (k != 0) ++stray;
    }
  }
  return {nonzero == 0 && stray == 0, std::to_string(diagonals) + " off-degree diagonal entries scanned, " +
                                          std::to_string(nonzero) + " nonzero; " + std::to_string(graded) +
                                          " graded expectations, " + std::to_string(stray) + " off-degree components"};
}

Outcome support_discipline() {
  std::size_t entries = 0, unwitnessed = 0, overlaps = 0;
  for (const char* name : {"cantor", "halfmaps"}) {
    const BasisPtr b = gallery_basis(name);
    const std::size_t dim = b->ifs().dim();
    Rng rng(gallery_config(name).rng_seed + 2);
    std::map<int, std::set<std::pair<std::size_t, std::size_t>>> by_degree;
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<BichainFn> fs{BichainFn::constant(m, n, dim, 1)};
        for (int t = 0; t < 5; ++t) fs.push_back(random_bichain_fn(rng, m, n, dim, 2));
        for (const auto& f : fs)
          for (const auto& [row, col, v] : rho_mn(b, m, n, f).entries()) {
            ++entries;
            if (!witnessed_pair(*b, row, col, m, n)) ++unwitnessed;
            by_degree[static_cast<int>(m) - static_cast<int>(n)].insert({row, col});
          }
      }
    for (auto i = by_degree.begin(); i != by_degree.end(); ++i)
      for (auto j = std::next(i); j != by_degree.end(); ++j)
        for (const auto& p : i->second)
          if (j->second.count(p)) ++overlaps;
  }
  return {unwitnessed == 0 && overlaps == 0, std::to_string(entries) + " entries, " + std::to_string(unwitnessed) +
                                                 " unwitnessed, " + std::to_string(overlaps) +
                                                 " pairs shared between degrees"};
}

Outcome norm_sandwich() {
  const BasisPtr b = gallery_basis("cantor");
  const double N = b->alphabet();
  Outcome o;
  for (std::size_t n = 1; n <= 2; ++n) {
    const double est = op_norm_estimate(rho_n(b, n, ChainFn::constant(n, 1, 1)).valid_part()).estimate;
    const double expected = std::pow(N, n / 2.0);
    if (std::abs(est - expected) > 1e-9) o.pass = false;
    o.detail += "|rho_" + std::to_string(n) + "(1)|=" + fmt("%.12f", est) + "; ";
  }
  Rng rng(11);
  int inside = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
    const ChainFn f = random_chain_fn(rng, n, 1, 2);
    double sup = 0;
    for (const auto& c : enumerate_chains(*b, n)) sup = std::max(sup, evaluate(f, c).abs());
    const double est = op_norm_estimate(rho_n(b, n, f).valid_part()).estimate;
    if (est >= sup - 1e-9 && est <= std::pow(N, n / 2.0) * sup + 1e-9) ++inside;
  }
  if (inside != 20) o.pass = false;
  o.detail += std::to_string(inside) + "/20 random estimates inside the bounds";
  return o;
}

Outcome normalizer_law() {
  const BasisPtr b = gallery_basis("cantor");
  Rng rng(13);
  int good = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // alpha: a product of branch-restricted graph operators, their adjoints
    // and diagonal factors.
    SparseOp alpha = rho_0(b, random_chain_fn(rng, 0, 1, 2));
    const int factors = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < factors; ++t) {
      SparseOp step = rho_branch(b, 1 + static_cast<int>(rng.below(2)), random_chain_fn(rng, 1, 1, 2));
      if (rng.coin()) step = step.adjoint();
      alpha = step * alpha;
      if (rng.coin()) alpha = rho_0(b, random_chain_fn(rng, 0, 1, 2)) * alpha;
    }
    const SparseOp beta = rho_0(b, random_chain_fn(rng, 0, 1, 2));
    const Relation ra = classify_relation(alpha);
    const bool qm = ra == Relation::quasi_monomial || ra == Relation::diagonal;
    if (qm && classify_relation(alpha.adjoint() * beta * alpha) == Relation::diagonal &&
        classify_relation(alpha * beta * alpha.adjoint()) == Relation::diagonal)
      ++good;
  }
  const BasisPtr h = gallery_basis("halfmaps");
  bool raised = false;
  try {
    split_by_branch(h->ifs(), ChainFn::constant(1, 1, 1));
  } catch (const NotSeparatedError&) {
    raised = true;
  }
  const Relation r1 = classify_relation(rho_n(h, 1, ChainFn::constant(1, 1, 1)));
  return {good == 100 && raised && r1 == Relation::general,
          std::to_string(good) + "/100 normalizer trials; half-maps split " +
              (raised ? "raises NotSeparatedError" : "did not raise") + ", rho_1(1) is " + to_string(r1)};
}

Outcome spanning_ranks() {
  const BasisPtr b = OrbitBasis::build(gallery_config("cantor").ifs, {pt("2/3")}, 4);
  const RankComparison dot = boxdot_span_ranks(*b, 1, 1, 2);
  const RankComparison times = boxtimes_span_ranks(*b, 1, 1, 2);
  return {dot.product_rank == dot.full_rank && times.product_rank == times.full_rank,
          "boxdot rank " + std::to_string(dot.product_rank) + "/" + std::to_string(dot.full_rank) + " on " +
              std::to_string(dot.samples) + " chains; boxtimes rank " + std::to_string(times.product_rank) + "/" +
              std::to_string(times.full_rank) + " on " + std::to_string(times.samples) + " bichains"};
}

// A point of the Cantor set: 0.p(r)(r)... in base 3 with digits 0 and 2.
Point random_cantor_point(Rng& rng) {
  const auto p = static_cast<unsigned>(rng.below(4));
  const auto r = 1 + static_cast<unsigned>(rng.below(3));
  mpz_class prefix = 0, block = 0, pp = 1, pr = 1;
  for (unsigned i = 0; i < p; ++i) prefix = 3 * prefix + 2 * static_cast<long>(rng.below(2)), pp *= 3;
  for (unsigned i = 0; i < r; ++i) block = 3 * block + 2 * static_cast<long>(rng.below(2)), pr *= 3;
  Rational x = Rational(prefix) / Rational(pp) + Rational(block) / (Rational(pp) * Rational(pr - 1));
  x.canonicalize();
  return Point{x};
}

Outcome seed_refinement_oracle() {
  int agree = 0, total = 0, removed = 0;
  for (const char* name : {"cantor", "halfmaps"}) {
    const AffineIfs ifs = gallery_config(name).ifs;
    const bool is_cantor = std::holds_alternative<CantorSpace>(ifs.space());
    Rng rng(17);
    std::vector<Point> seeds;
    while (seeds.size() < 50) {
      const Point s = is_cantor ? random_cantor_point(rng) : Point{frac(rng.between(1, 29), 30)};
      if (ifs.open_set()->contains(s)) seeds.push_back(s);
    }
    auto refined = [&](const std::vector<Point>& batch) {
      try {
        return refine_seed_set(ifs, batch, 3).kept;
      } catch (const NoAdmissibleSeeds&) {
        return std::vector<Point>{};
      }
    };
    for (const auto& s : seeds) {
      const auto kept = refined({s});
      if (kept.empty()) ++removed;
      agree += kept == brute_force_kept(ifs, {s}, 3);
      ++total;
    }
    for (std::size_t i = 0; i + 5 <= seeds.size(); i += 5) {
      const std::vector<Point> batch(seeds.begin() + static_cast<long>(i), seeds.begin() + static_cast<long>(i + 5));
      agree += refined(batch) == brute_force_kept(ifs, batch, 3);
      ++total;
    }
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " seed sets agree (" +
                              std::to_string(removed) + " single seeds removed)"};
}

Outcome determinism_round_trip() {
  bool same = true, round = true;
  for (const char* name : {"cantor", "halfmaps", "duplicate"}) {
    const RunConfig cfg = gallery_config(name);
    const std::string a = report_to_json(run_pipeline(cfg, RunOptions{})).dump(2);
    const std::string b = report_to_json(run_pipeline(cfg, RunOptions{})).dump(2);
    same = same && a == b;
    const Report back = report_from_json(nlohmann::json::parse(a));
    round = round && nlohmann::json::parse(report_to_json(back).dump()) == nlohmann::json::parse(a);
  }
  Rng rng(19);
  int exact = 0;
  for (int i = 0; i < 200; ++i) {
    ConditionResult c;
    c.holds = Tri::no;
    Rational x = random_rational(rng, 1000000007, 998244353);
    x *= x * x;
    c.witness_points = {Point{x}};
    const ConditionResult back = condition_from_json(nlohmann::json::parse(to_json(c).dump()));
    const Rational& y = back.witness_points.at(0)[0];
    exact += y.get_num() == x.get_num() && y.get_den() == x.get_den();
  }
  return {same && round && exact == 200, std::string(same ? "byte-identical" : "differing") + " repeated reports, " +
                                             (round ? "lossless" : "lossy") + " report round trip, " +
                                             std::to_string(exact) + "/200 rationals exact"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gallery verdicts", gallery_verdicts},
      {"witness exactness", witness_exactness},
      {"representation identities", identity_suite},
      {"degree vanishing", degree_vanishing},
      {"support discipline", support_discipline},
      {"norm sandwich", norm_sandwich},
      {"normalizer law", normalizer_law},
      {"spanning ranks", spanning_ranks},
      {"seed refinement oracle", seed_refinement_oracle},
      {"determinism and round trip", determinism_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
