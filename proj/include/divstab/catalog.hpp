// Bundled example catalog: fans, model sequences, Okounkov bodies and
// curve-blowup parameter sets, each with expected values and provenance.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "divstab/json_io.hpp"

namespace divstab {

struct ExpectedValue {
  std::string value;       // canonical rational / vector / enum rendering
  std::string provenance;  // "literature" or "oracle"
  std::string note;        // citation or oracle description
};

struct CatalogEntry {
  std::string id;
  std::string kind;  // fan | sequence | okounkov_body | curve_blowup_params
  Json payload;
  std::map<std::string, ExpectedValue> expected;
};

// DIVSTAB_CATALOG_DIR overrides the bundled location.
std::string catalog_dir();

std::vector<std::string> catalog_ids();
CatalogEntry load_catalog_entry(const std::string& id);

CatalogEntry catalog_entry_from_json(const Json& j);
Json catalog_entry_to_json(const CatalogEntry& entry);

}  // namespace divstab
