#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stuckknot/diagram.hpp"

namespace stuckknot {

struct CatalogEntry {
  std::string name;
  std::string text;
  std::string provenance;
  std::optional<std::string> homflypt;   ///< expected rigid HOMFLYPT, rendered
  std::optional<std::string> normalized; ///< expected normalized bracket, rendered
};

const std::vector<CatalogEntry> &catalog();

/// Throws UnknownEntry.
const CatalogEntry &catalog_entry(std::string_view name);

StuckDiagram catalog_diagram(std::string_view name);

} // namespace stuckknot
