#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifs_cstar/chain_fn.hpp"
#include "ifs_cstar/ifs.hpp"
#include "ifs_cstar/region.hpp"

namespace ifs_cstar {

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);
Tri tri_from_string(const std::string& s);

enum class Method { exact_affine, contraction_criterion, cover_approximate, user_asserted };
std::string to_string(Method m);
Method method_from_string(const std::string& s);

// Outcome of one structural check. A `no` always carries a witness that can
// be re-checked exactly.
struct ConditionResult {
  Tri holds = Tri::unknown;
  Method method = Method::exact_affine;
  std::vector<Point> witness_points;
  std::vector<IndexWord> witness_words;
  std::string notes;
  std::optional<int> resolution;   // cover-approximate checks
  std::optional<int> up_to_depth;  // `yes` is only certified for words this long

  bool certified_true() const { return holds == Tri::yes && !up_to_depth; }
};

struct SigmaBranch {
  int index = 0;  // 1-based map index
  Region region;  // gamma_k(X) (closed box, or Cantor cell)
  AffineMap inverse;
};

// Left inverse sigma of the system, glued from branch inverses.
struct SigmaResult {
  std::vector<SigmaBranch> branches;
  bool decided = true;  // false when the space is not supported
  bool consistent = false;
  std::vector<Point> overlap_witnesses;
  std::string notes;

  // Evaluates sigma at a point of gamma(X) using the first branch whose
  // region contains it.
  std::optional<Point> operator()(const Point& y) const;
};

struct RemovedSeed {
  Point seed;
  std::string reason;
  IndexWord word_a;
  IndexWord word_b;
  Point point;  // where the two words coincide
};

struct SeedRefinement {
  int depth = 0;
  std::vector<Point> kept;
  std::vector<RemovedSeed> removed;
};

// All maps injective (nonzero determinant).
ConditionResult check_embeddings(const AffineIfs& ifs);

ConditionResult check_open_set_condition(const AffineIfs& ifs, const OpenSetSpec& open_set, int resolution);
// Uses the system's own open set; throws ConfigError("open set required") when absent.
ConditionResult check_open_set_condition(const AffineIfs& ifs, int resolution);

ConditionResult check_graph_separation(const AffineIfs& ifs);

// The automatic path first tries the contraction criterion (injective proper
// contractions, the system's open set passing the OSC check, no isolated
// points); otherwise word maps up to `depth` are compared on the hull.
enum class FreenessPath { automatic, exact_only };
ConditionResult check_essential_freeness(const AffineIfs& ifs, int depth,
                                         FreenessPath path = FreenessPath::automatic);

// Throws NoAdmissibleSeeds when nothing survives, ConfigError for seeds
// outside the space or the open set.
SeedRefinement refine_seed_set(const AffineIfs& ifs, const std::vector<Point>& seeds, int depth);
// Same scan without the empty-result error.
SeedRefinement scan_seed_set(const AffineIfs& ifs, const std::vector<Point>& seeds, int depth);

SigmaResult construct_left_inverse(const AffineIfs& ifs);

ConditionResult check_clopen_iterated_image(const AffineIfs& ifs, int n_max);

// a(gamma_k(x)) == 0 for every sample x and every k.
bool vanishes_on_image(const AffineIfs& ifs, const PolyFn& a, const std::vector<Point>& sample);

}  // namespace ifs_cstar
