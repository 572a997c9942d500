#pragma once

// Machine-readable reports and the content-addressed result cache.
//
// A report is an ordered JSON object:
//   {"schema_version", "tool", "version", "command", "params", "inputs",
//    "status", ..., "rows": [...]}
// "rows" is the primary table; CSV and Markdown render it together with the
// scalar metadata.  Nothing time-dependent is recorded unless asked for, so
// equal inputs give byte-identical reports.

#include <optional>
#include <string>

#include "cyclotome/io.hpp"

namespace cyclotome {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

std::string sha256_hex(const std::string& bytes);
/// Hash of the raw file contents; throws InputError if unreadable.
std::string file_sha256(const std::string& path);

Json make_report(const std::string& command, const Json& params, const Json& inputs);

/// "json" (pretty, trailing newline), "csv" or "md".
std::string render(const Json& report, const std::string& format);

/// One file per key under dir, named by the key.  Writes go through a
/// temporary file and a rename, so readers never see partial entries.
class ResultCache {
 public:
  explicit ResultCache(std::string dir);

  /// SHA-256 over the tool version, the canonical command and the input hashes.
  static std::string key(const std::string& canonical_command, const Json& input_hashes);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;
  std::string path_of(const std::string& key) const;

 private:
  std::string dir_;
};

}  // namespace cyclotome
