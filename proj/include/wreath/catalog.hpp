#pragma once

#include "wreath/system.hpp"

namespace wreath {

/// A named built-in recursion system with a short description of where it
/// comes from. Deep-immutable.
struct CatalogEntry {
  std::string name;
  std::uint32_t degree;
  RecursionSystem system;
  std::string notes;
};

const CatalogEntry& catalog_get(std::string_view name);

std::vector<std::string> catalog_names();

} // namespace wreath
