#pragma once

// Bundled data files (F_1 .. F_16) with an index of FNV-1a checksums.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtc/errors.hpp"
#include "mtc/free_fermion.hpp"
#include "mtc/io.hpp"

#ifndef MTC_DEFAULT_CATALOG
#define MTC_DEFAULT_CATALOG "data/catalog"
#endif

namespace mtc {

struct CatalogEntry {
  std::string path;  // relative to the catalog directory
  std::string name;
  std::string checksum;  // 16 hex digits
};

/// 64-bit FNV-1a, as 16 lowercase hex digits.
inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// $MTC_CATALOG if set and non-empty, else the directory configured at build time.
inline std::filesystem::path catalog_dir() {
  if (const char* env = std::getenv("MTC_CATALOG"); env != nullptr && *env != '\0') return env;
  return MTC_DEFAULT_CATALOG;
}

inline std::vector<CatalogEntry> read_index(const std::filesystem::path& dir) {
  const auto index = dir / "index.json";
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(index.string()));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed catalog index", index.string() + ": byte " + std::to_string(e.byte));
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("catalog index needs an \"entries\" array", index.string());
  std::vector<CatalogEntry> out;
  for (const auto& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("path") || !e.contains("name") || !e.contains("checksum") ||
        !e["path"].is_string() || !e["name"].is_string() || !e["checksum"].is_string())
      throw ParseError("catalog entry needs string path, name and checksum", index.string());
    out.push_back({e["path"].get<std::string>(), e["name"].get<std::string>(),
                   e["checksum"].get<std::string>()});
  }
  return out;
}

/// True iff the file's current checksum matches the index.
inline bool verify(const std::filesystem::path& dir, const CatalogEntry& e) {
  return fnv1a64(read_text((dir / e.path).string())) == e.checksum;
}

/// Finds `name` in the catalog and loads it; nullopt if absent.
inline std::optional<MtcFile> load_catalog_entry(const std::string& name,
                                                 const std::filesystem::path& dir = catalog_dir()) {
  if (!std::filesystem::exists(dir / "index.json")) return std::nullopt;
  for (const auto& e : read_index(dir))
    if (e.name == name) {
      if (!verify(dir, e)) throw InputError("catalog entry " + name + " fails its checksum");
      return load((dir / e.path).string());
    }
  return std::nullopt;
}

/// Loads a path, falling back to a catalog name such as "F_3".
inline MtcFile load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load(arg);
  if (auto entry = load_catalog_entry(arg)) return *entry;
  throw InputError("no such file or catalog entry: '" + arg + "'");
}

/// Writes F_1 .. F_16 and index.json into `dir`.
inline std::vector<CatalogEntry> write_catalog(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<CatalogEntry> entries;
  nlohmann::json list = nlohmann::json::array();
  for (long l = 1; l <= 16; ++l) {
    const std::string text = emit(ising_like(l));
    char file[16];
    std::snprintf(file, sizeof file, "F%02ld.mtc", l);
    save((dir / file).string(), text);
    CatalogEntry e{file, "F_" + std::to_string(l), fnv1a64(text)};
    list.push_back({{"path", e.path}, {"name", e.name}, {"checksum", e.checksum}});
    entries.push_back(std::move(e));
  }
  nlohmann::json index{{"format", "mtc-catalog/1"}, {"entries", std::move(list)}};
  save((dir / "index.json").string(), index.dump(1) + "\n");
  return entries;
}

}  // namespace mtc
