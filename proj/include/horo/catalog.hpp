// Bundled example fans and horospherical models, addressable on the command
// line as "catalog:NAME".

#ifndef HORO_CATALOG_HPP
#define HORO_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

namespace horo {

struct CatalogEntry {
  std::string name;
  std::string kind;  // "fan" or "model"
  std::string description;
  std::string json_text;
};

/// All entries, fans first, each group in a fixed order.
const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);

}  // namespace horo

#endif  // HORO_CATALOG_HPP
