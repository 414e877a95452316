#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mero/function_file.hpp"

namespace mero {

/// Named regression functions with their expected smoothness.
struct CatalogEntry {
  std::string name;
  FunctionFile file;
  bool smooth;
};

const std::vector<CatalogEntry>& regression_catalog();

/// Throws std::out_of_range for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace mero
