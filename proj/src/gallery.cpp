#include "ifs_cstar/gallery.hpp"

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries{
      {"cantor", "middle-thirds Cantor set, x/3 and x/3 + 2/3", R"json({
  "name": "cantor",
  "space": {"type": "cantor"},
  "maps": [["1/3", "0"], ["1/3", "2/3"]],
  "open_set": "(0,1)",
  "seeds": "auto",
  "depth": 3,
  "rng_seed": 7
}
)json"},
      {"halfmaps", "[0,1] with x/2 and -x/2 + 1 (graphs meet at x = 1)", R"json({
  "name": "halfmaps",
  "space": {"type": "interval", "lo": "0", "hi": "1"},
  "maps": [["1/2", "0"], ["-1/2", "1"]],
  "open_set": "(0,1)",
  "seeds": "auto",
  "depth": 3,
  "rng_seed": 7
}
)json"},
      {"duplicate", "[0,1] with two copies of x/2", R"json({
  "name": "duplicate",
  "space": {"type": "interval", "lo": "0", "hi": "1"},
  "maps": [["1/2", "0"], ["1/2", "0"]],
  "open_set": "(0,1)",
  "seeds": "auto",
  "depth": 3,
  "rng_seed": 7
}
)json"}};
  return entries;
}

const GalleryEntry& gallery_entry(const std::string& name) {
  for (const auto& e : gallery())
    if (e.name == name) return e;
  throw ConfigError("no gallery entry named " + name);
}

}  // namespace ifs_cstar
