#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ifs_cstar/ifs.hpp"

namespace ifs_cstar {

struct RunConfig {
  std::string name;
  AffineIfs ifs;
  std::optional<std::vector<Point>> seeds{};  // nullopt means "auto"
  int depth = 3;
  std::vector<std::string> suites{"conditions", "identities", "graded", "verdict"};
  std::uint64_t rng_seed = 1;
  int seed_count = 2;
  int trials = 50;
  int resolution = 6;        // Cantor density cell level
  int freeness_depth = 4;    // word length for the exact essential-freeness path
  int clopen_depth = 3;
  std::vector<std::string> assume{};  // hypotheses taken as given
  bool allow_noncontractive = false;
};

// Accepted hypothesis names for `assume`.
const std::vector<std::string>& hypothesis_names();

// "2/3" or "(1/3,1/4)".
Point parse_point(const std::string& text);
// Comma-separated one-dimensional seeds or parenthesised points.
std::vector<Point> parse_seed_list(const std::string& text);

RunConfig parse_config(const nlohmann::json& j);
// Throws ConfigError on IO failure, ParseError (with byte offset) on bad JSON.
RunConfig load_config(const std::string& path);
RunConfig load_config_text(const std::string& text);
// Canonical echo of the configuration.
nlohmann::ordered_json config_to_json(const RunConfig& c);

// Random rational points (denominators <= 1000) in U, or in the space when U
// is absent, kept when they survive refinement at `refine_depth`. Attractor
// systems draw images of fixed points instead.
std::vector<Point> auto_seeds(const AffineIfs& ifs, int count, int refine_depth, std::uint64_t rng_seed);

}  // namespace ifs_cstar
