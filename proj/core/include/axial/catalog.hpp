#pragma once

#include "axial/json_io.hpp"

namespace axial {

struct UnknownGroup : std::runtime_error {
  explicit UnknownGroup(const std::string& name)
      : std::runtime_error("no catalog entry named " + name) {}
};

/// Catalog directory: $AXIAL_CATALOG_DIR when set, else the build-time default.
std::string catalog_dir();

/// Names of the shipped groups (sorted).
std::vector<std::string> catalog_names();

/// Loads <dir>/<name>.json.
GroupSpec catalog_group(const std::string& name);

/// Loads, digest-checks, and closes the class.
TranspositionClass catalog_class(const std::string& name);

}  // namespace axial
