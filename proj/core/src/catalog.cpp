#include "axial/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef AXIAL_DEFAULT_CATALOG_DIR
#define AXIAL_DEFAULT_CATALOG_DIR ""
#endif

namespace axial {

std::string catalog_dir() {
  if (const char* env = std::getenv("AXIAL_CATALOG_DIR")) return env;
  return AXIAL_DEFAULT_CATALOG_DIR;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(catalog_dir(), ec))
    if (entry.path().extension() == ".json")
      names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

GroupSpec catalog_group(const std::string& name) {
  std::filesystem::path p = std::filesystem::path(catalog_dir()) / (name + ".json");
  std::ifstream in(p);
  if (!in) throw UnknownGroup(name);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw BadInput("unreadable group file " + p.string() + ": " + e.what());
  }
  return group_from_json(j);
}

TranspositionClass catalog_class(const std::string& name) {
  return build_class(catalog_group(name));
}

}  // namespace axial
