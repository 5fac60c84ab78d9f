#include "ifs_cstar/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ifs_cstar/conditions.hpp"
#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/random.hpp"

namespace ifs_cstar {

using nlohmann::json;

namespace {

Rational rational_field(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ConfigError(where + ": expected a rational string like \"1/3\"");
}

std::vector<Rational> rational_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError(where + ": expected an array");
  std::vector<Rational> out;
  for (const auto& e : v) out.push_back(rational_field(e, where));
  return out;
}

AffineMap parse_map(const json& v, std::size_t index) {
  const std::string where = "maps[" + std::to_string(index) + "]";
  if (v.is_array()) {
    const auto ab = rational_list(v, where);
    if (ab.size() != 2) throw ConfigError(where + ": expected [a, b] for x -> a x + b");
    return AffineMap::scalar(ab[0], ab[1]);
  }
  if (!v.is_object()) throw ConfigError(where + ": expected [a, b] or {linear, offset}");
  if (v.contains("expr")) throw ConfigError(where + ": only affine maps are supported");
  if (!v.contains("linear") || !v.contains("offset")) throw ConfigError(where + ": missing linear or offset");
  const auto offset = rational_list(v.at("offset"), where + ".offset");
  const json& rows = v.at("linear");
  if (!rows.is_array() || rows.size() != offset.size()) throw ConfigError(where + ".linear: expected a square matrix");
  RationalMatrix m(offset.size(), offset.size());
  for (std::size_t r = 0; r < offset.size(); ++r) {
    const auto row = rational_list(rows[r], where + ".linear");
    if (row.size() != offset.size()) throw ConfigError(where + ".linear: expected a square matrix");
    for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
  }
  return {m, offset};
}

SpaceDescriptor parse_space(const json& v) {
  if (!v.is_object() || !v.contains("type")) throw ConfigError("space: expected an object with a type");
  const std::string type = v.at("type").get<std::string>();
  if (type == "interval") {
    const Rational lo = v.contains("lo") ? rational_field(v.at("lo"), "space.lo") : Rational(0);
    const Rational hi = v.contains("hi") ? rational_field(v.at("hi"), "space.hi") : Rational(1);
    if (hi < lo) throw ConfigError("space: empty interval");
    return BoxSpace{{{lo, hi}}};
  }
  if (type == "box") {
    BoxSpace box;
    if (!v.contains("sides") || !v.at("sides").is_array()) throw ConfigError("space.sides: expected an array");
    for (const auto& s : v.at("sides")) {
      const auto lh = rational_list(s, "space.sides");
      if (lh.size() != 2 || lh[1] < lh[0]) throw ConfigError("space.sides: expected [lo, hi] with lo <= hi");
      box.sides.push_back({lh[0], lh[1]});
    }
    if (box.sides.empty()) throw ConfigError("space.sides: empty");
    return box;
  }
  if (type == "cantor") return CantorSpace{};
  if (type == "attractor") {
    AttractorSpace a;
    if (v.contains("tolerance")) a.tolerance = v.at("tolerance").get<double>();
    return a;
  }
  throw ConfigError("space: unknown type \"" + type + "\"");
}

OpenSetSpec parse_open_set(const json& v) {
  OpenSetSpec u;
  if (v.is_string()) {
    u.boxes.push_back(parse_open_box(v.get<std::string>()));
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_string()) throw ConfigError("open_set: expected strings like \"(0,1)\"");
      u.boxes.push_back(parse_open_box(e.get<std::string>()));
    }
  } else {
    throw ConfigError("open_set: expected a string or a list of strings");
  }
  return u;
}

int positive_int(const json& v, const std::string& where, int min) {
  if (!v.is_number_integer() || v.get<long>() < min || v.get<long>() > 1000000)
    throw ConfigError(where + ": expected an integer >= " + std::to_string(min));
  return v.get<int>();
}

std::string json_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ConfigError(where + ": expected a string");
  return v.get<std::string>();
}

}  // namespace

const std::vector<std::string>& hypothesis_names() {
  static const std::vector<std::string> names{"embeddings",      "osc",  "clopen_images",
                                              "essentially_free", "sigma", "graph_separation"};
  return names;
}

Point parse_point(const std::string& text) {
  std::string t = text;
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw ParseError("empty point", 0);
  if (t.front() != '(') return Point{parse_rational(t)};
  if (t.back() != ')') throw ParseError("expected ')' closing a point", t.size());
  std::vector<Rational> coords;
  std::size_t start = 1;
  while (start < t.size()) {
    std::size_t end = t.find(',', start);
    if (end == std::string::npos) end = t.size() - 1;
    coords.push_back(parse_rational(std::string_view(t).substr(start, end - start)));
    start = end + 1;
  }
  return Point(std::move(coords));
}

std::vector<Point> parse_seed_list(const std::string& text) {
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    std::size_t end;
    if (text[i] == '(') {
      end = text.find(')', i);
      if (end == std::string::npos) throw ParseError("unterminated point", i);
      ++end;
    } else {
      end = text.find(',', i);
      if (end == std::string::npos) end = text.size();
    }
    out.push_back(parse_point(text.substr(i, end - i)));
    i = end;
  }
  if (out.empty()) throw ConfigError("empty seed list");
  return out;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  static const std::vector<std::string> known{"name",       "space",        "maps",        "open_set", "seeds",
                                              "depth",      "suites",       "rng_seed",    "seed_count", "trials",
                                              "resolution", "freeness_depth", "clopen_depth", "assume",
                                              "allow_noncontractive"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown configuration key: " + key);
  if (!j.contains("space")) throw ConfigError("missing key: space");
  if (!j.contains("maps") || !j.at("maps").is_array()) throw ConfigError("missing key: maps");

  std::vector<AffineMap> maps;
  for (std::size_t i = 0; i < j.at("maps").size(); ++i) maps.push_back(parse_map(j.at("maps")[i], i));
  std::optional<OpenSetSpec> open_set;
  if (j.contains("open_set") && !j.at("open_set").is_null()) open_set = parse_open_set(j.at("open_set"));

  RunConfig c{.name = j.contains("name") ? json_string(j.at("name"), "name") : std::string("unnamed"),
              .ifs = AffineIfs(parse_space(j.at("space")), std::move(maps), std::move(open_set))};

  if (j.contains("allow_noncontractive")) c.allow_noncontractive = j.at("allow_noncontractive").get<bool>();
  if (!c.allow_noncontractive && !std::holds_alternative<AttractorSpace>(c.ifs.space()))
    for (int k = 1; k <= c.ifs.size(); ++k)
      if (!contraction_bounds(c.ifs.map(k)).proper)
        throw ConfigError("map " + std::to_string(k) +
                          " is not a proper contraction; set allow_noncontractive to accept it");

  if (j.contains("seeds")) {
    const json& s = j.at("seeds");
    if (s.is_string() && s.get<std::string>() == "auto") {
      c.seeds.reset();
    } else if (s.is_array()) {
      std::vector<Point> pts;
      for (const auto& e : s) pts.push_back(parse_point(json_string(e, "seeds")));
      c.seeds = std::move(pts);
    } else {
      throw ConfigError("seeds: expected \"auto\" or a list of points");
    }
  }
  if (j.contains("depth")) c.depth = positive_int(j.at("depth"), "depth", 1);
  if (j.contains("suites")) {
    static const std::vector<std::string> allowed{"conditions", "identities", "graded", "verdict"};
    c.suites.clear();
    for (const auto& e : j.at("suites")) {
      const std::string s = json_string(e, "suites");
      if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) throw ConfigError("unknown suite: " + s);
      c.suites.push_back(s);
    }
  }
  if (j.contains("rng_seed")) {
    if (!j.at("rng_seed").is_number_unsigned()) throw ConfigError("rng_seed: expected a non-negative integer");
    c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  }
  if (j.contains("seed_count")) c.seed_count = positive_int(j.at("seed_count"), "seed_count", 1);
  if (j.contains("trials")) c.trials = positive_int(j.at("trials"), "trials", 1);
  if (j.contains("resolution")) c.resolution = positive_int(j.at("resolution"), "resolution", 1);
  if (j.contains("freeness_depth")) c.freeness_depth = positive_int(j.at("freeness_depth"), "freeness_depth", 1);
  if (j.contains("clopen_depth")) c.clopen_depth = positive_int(j.at("clopen_depth"), "clopen_depth", 1);
  if (j.contains("assume")) {
    for (const auto& e : j.at("assume")) {
      const std::string h = json_string(e, "assume");
      const auto& names = hypothesis_names();
      if (std::find(names.begin(), names.end(), h) == names.end()) throw ConfigError("assume: unknown hypothesis " + h);
      c.assume.push_back(h);
    }
  }
  return c;
}

RunConfig load_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    return parse_config(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_config_text(buffer.str());
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  nlohmann::ordered_json space;
  space["type"] = space_kind(c.ifs.space());
  if (const auto* box = std::get_if<BoxSpace>(&c.ifs.space())) {
    if (box->is_interval()) {
      space["lo"] = to_string(box->sides[0].lo);
      space["hi"] = to_string(box->sides[0].hi);
    } else {
      for (const auto& s : box->sides) space["sides"].push_back({to_string(s.lo), to_string(s.hi)});
    }
  } else if (const auto* a = std::get_if<AttractorSpace>(&c.ifs.space())) {
    space["tolerance"] = a->tolerance;
  }
  j["space"] = space;
  j["maps"] = nlohmann::ordered_json::array();
  for (const auto& m : c.ifs.maps()) {
    if (m.dim() == 1) {
      j["maps"].push_back({to_string(m.linear()(0, 0)), to_string(m.offset()[0])});
      continue;
    }
    nlohmann::ordered_json e;
    for (std::size_t r = 0; r < m.dim(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t col = 0; col < m.dim(); ++col) row.push_back(to_string(m.linear()(r, col)));
      e["linear"].push_back(row);
    }
    for (const auto& b : m.offset()) e["offset"].push_back(to_string(b));
    j["maps"].push_back(e);
  }
  if (c.ifs.open_set()) {
    j["open_set"] = nlohmann::ordered_json::array();
    for (const auto& b : c.ifs.open_set()->boxes) j["open_set"].push_back(to_string(b));
  } else {
    j["open_set"] = nullptr;
  }
  if (c.seeds) {
    j["seeds"] = nlohmann::ordered_json::array();
    for (const auto& p : *c.seeds) j["seeds"].push_back(to_string(p));
  } else {
    j["seeds"] = "auto";
  }
  j["depth"] = c.depth;
  j["suites"] = c.suites;
  j["rng_seed"] = c.rng_seed;
  j["seed_count"] = c.seed_count;
  j["trials"] = c.trials;
  j["resolution"] = c.resolution;
  j["freeness_depth"] = c.freeness_depth;
  j["clopen_depth"] = c.clopen_depth;
  j["assume"] = c.assume;
  j["allow_noncontractive"] = c.allow_noncontractive;
  return j;
}

namespace {

constexpr std::int64_t kMaxDenominator = 1000;

std::optional<Point> candidate_in_box(Rng& rng, const BoxSpace& box, const std::optional<OpenSetSpec>& u) {
  std::vector<Rational> coords;
  const OpenBox* target = nullptr;
  if (u) target = &u->boxes[rng.below(u->boxes.size())];
  for (std::size_t i = 0; i < box.sides.size(); ++i) {
    Rational lo = box.sides[i].lo;
    Rational hi = box.sides[i].hi;
    if (target) {
      lo = std::max(lo, target->sides[i].first);
      hi = std::min(hi, target->sides[i].second);
    }
    const auto q = rng.between(1, kMaxDenominator);
    const Rational ql = lo * q;
    const Rational qh = hi * q;
    mpz_class first = ql.get_num() / ql.get_den();  // truncates toward zero
    if (Rational(first) < ql) ++first;
    mpz_class last = qh.get_num() / qh.get_den();
    if (Rational(last) > qh) --last;
    if (first > last) return std::nullopt;
    const mpz_class span = last - first + 1;
    const auto offset = rng.below(span.fits_ulong_p() ? span.get_ui() : 1000000UL);
    Rational x{first + mpz_class(static_cast<unsigned long>(offset)), mpz_class(static_cast<long>(q))};
    x.canonicalize();
    coords.push_back(x);
  }
  Point p(std::move(coords));
  if (u && !u->contains(p)) return std::nullopt;
  return p;
}

std::optional<Point> candidate_in_cantor(Rng& rng, const std::optional<OpenSetSpec>& u) {
  const auto q = rng.between(1, kMaxDenominator);
  const auto start = rng.between(0, q);
  for (std::int64_t step = 0; step <= q; ++step) {
    const auto p = (start + step) % (q + 1);
    Rational x{mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q))};
    x.canonicalize();
    const Point pt{x};
    if (!cantor_contains(x)) continue;
    if (u && !u->contains(pt)) continue;
    return pt;
  }
  return std::nullopt;
}

std::optional<Point> candidate_in_attractor(Rng& rng, const AffineIfs& ifs) {
  auto random_word = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<int> letters(static_cast<std::size_t>(rng.between(lo, hi)));
    for (auto& l : letters) l = static_cast<int>(rng.between(1, ifs.size()));
    return IndexWord(std::move(letters));
  };
  try {
    const Point fixed = word_fixed_point(ifs, random_word(2, 4));
    Point p = apply_word(ifs, random_word(1, 3), fixed);
    if (ifs.open_set() && !ifs.open_set()->contains(p)) return std::nullopt;
    return p;
  } catch (const FixedSetNotPoint&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Point> auto_seeds(const AffineIfs& ifs, int count, int refine_depth, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  std::vector<Point> kept;
  const int attempts = 100 * std::max(count, 1);
  for (int attempt = 0; attempt < attempts && static_cast<int>(kept.size()) < count; ++attempt) {
    std::optional<Point> cand;
    if (const auto* box = std::get_if<BoxSpace>(&ifs.space()))
      cand = candidate_in_box(rng, *box, ifs.open_set());
    else if (std::holds_alternative<CantorSpace>(ifs.space()))
      cand = candidate_in_cantor(rng, ifs.open_set());
    else
      cand = candidate_in_attractor(rng, ifs);
    if (!cand || std::find(kept.begin(), kept.end(), *cand) != kept.end()) continue;
    std::vector<Point> trial = kept;
    trial.push_back(*cand);
    const SeedRefinement r = scan_seed_set(ifs, trial, refine_depth);
    if (r.removed.empty()) kept.push_back(*cand);
  }
  if (kept.empty()) throw NoAdmissibleSeeds();
  return kept;
}

}  // namespace ifs_cstar
