#pragma once

#include <string>
#include <vector>

namespace ifs_cstar {

struct GalleryEntry {
  std::string name;
  std::string description;
  std::string config;  // JSON text, identical to gallery/<name>.json
};

const std::vector<GalleryEntry>& gallery();
// Throws ConfigError for unknown names.
const GalleryEntry& gallery_entry(const std::string& name);

}  // namespace ifs_cstar
