#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace algebroid {

struct CatalogCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Directory holding manifest.json and the files it names; baked in at
/// build time.
std::filesystem::path default_catalog_dir();

/// Runs every entry of <dir>/manifest.json. Entry failures, including
/// thrown errors, become failed checks; only an unreadable manifest throws.
std::vector<CatalogCheck> run_catalog(const std::filesystem::path& dir);

}  // namespace algebroid
