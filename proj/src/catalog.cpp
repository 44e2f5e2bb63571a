#include "divstab/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#ifndef DIVSTAB_BUNDLED_CATALOG_DIR
#define DIVSTAB_BUNDLED_CATALOG_DIR ""
#endif

namespace divstab {

namespace fs = std::filesystem;

std::string catalog_dir() {
  if (const char* env = std::getenv("DIVSTAB_CATALOG_DIR"); env && *env) return env;
  return DIVSTAB_BUNDLED_CATALOG_DIR;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  const fs::path dir = catalog_dir();
  if (!fs::is_directory(dir)) return ids;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") ids.push_back(entry.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

CatalogEntry load_catalog_entry(const std::string& id) {
  const fs::path path = fs::path(catalog_dir()) / (id + ".json");
  if (!fs::exists(path))
    throw parse_error("no catalog entry '" + id + "' under " + catalog_dir());
  return catalog_entry_from_json(read_json_file(path.string()));
}

CatalogEntry catalog_entry_from_json(const Json& j) {
  CatalogEntry entry;
  if (!j.is_object()) throw parse_error("catalog entry must be an object");
  if (!j.contains("id") || !j.at("id").is_string())
    throw parse_error("catalog entry needs a string id");
  entry.id = j.at("id").get<std::string>();
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw parse_error("catalog entry needs a string kind");
  entry.kind = j.at("kind").get<std::string>();
  static const std::vector<std::string> kinds{"fan", "sequence", "okounkov_body",
                                              "curve_blowup_params"};
  if (std::find(kinds.begin(), kinds.end(), entry.kind) == kinds.end())
    throw parse_error("unknown catalog kind '" + entry.kind + "'");
  if (!j.contains("payload")) throw parse_error("catalog entry needs a payload");
  entry.payload = j.at("payload");
  if (j.contains("expected")) {
    const Json& exp = j.at("expected");
    if (!exp.is_object()) throw parse_error("expected must be an object");
    for (auto it = exp.begin(); it != exp.end(); ++it) {
      const Json& e = it.value();
      ExpectedValue ev;
      if (!e.contains("value") || !e.at("value").is_string())
        throw parse_error("expected value needs a string value");
      ev.value = e.at("value").get<std::string>();
      if (!e.contains("provenance") || !e.at("provenance").is_string())
        throw parse_error("expected value needs a provenance");
      ev.provenance = e.at("provenance").get<std::string>();
      if (ev.provenance != "literature" && ev.provenance != "oracle")
        throw parse_error("provenance must be 'literature' or 'oracle'");
      if (!e.contains("note") || !e.at("note").is_string() || e.at("note").get<std::string>().empty())
        throw parse_error("expected value needs a nonempty note naming its source");
      ev.note = e.at("note").get<std::string>();
      entry.expected[it.key()] = std::move(ev);
    }
  }
  return entry;
}

Json catalog_entry_to_json(const CatalogEntry& entry) {
  Json j;
  j["id"] = entry.id;
  j["kind"] = entry.kind;
  j["payload"] = entry.payload;
  Json exp = Json::object();
  for (const auto& [name, ev] : entry.expected) {
    Json e;
    e["value"] = ev.value;
    e["provenance"] = ev.provenance;
    e["note"] = ev.note;
    exp[name] = std::move(e);
  }
  j["expected"] = std::move(exp);
  return j;
}

}  // namespace divstab
