#include "cyclotome/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string file_sha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return sha256_hex(ss.str());
}

Json make_report(const std::string& command, const Json& params, const Json& inputs) {
  Json r;
  r["schema_version"] = kSchemaVersion;
  r["tool"] = "cyclotome";
  r["version"] = kToolVersion;
  r["command"] = command;
  r["params"] = params;
  r["inputs"] = inputs;
  r["status"] = "ok";
  return r;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

std::vector<std::string> columns(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [k, v] : row.items()) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  return cols;
}

// Scalar top-level fields and flattened objects (params.x, ...).
std::vector<std::pair<std::string, std::string>> metadata(const Json& report) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : report.items()) {
    if (k == "rows") continue;
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) out.emplace_back(k + "." + k2, cell(v2));
    } else {
      out.emplace_back(k, cell(v));
    }
  }
  return out;
}

}  // namespace

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  const Json rows = report.contains("rows") ? report["rows"] : Json::array();
  const auto cols = columns(rows);
  std::ostringstream out;
  if (format == "csv") {
    for (const auto& [k, v] : metadata(report)) out << "# " << k << "=" << v << "\n";
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_escape(cols[c]);
    if (!cols.empty()) out << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        out << (c ? "," : "") << csv_escape(row.contains(cols[c]) ? cell(row[cols[c]]) : "");
      }
      out << "\n";
    }
    return out.str();
  }
  if (format == "md") {
    out << "# cyclotome " << cell(report.value("command", Json(""))) << "\n\n";
    for (const auto& [k, v] : metadata(report)) {
      if (k == "command") continue;
      out << "- " << k << ": " << md_escape(v) << "\n";
    }
    if (!cols.empty()) {
      out << "\n|";
      for (const auto& c : cols) out << " " << md_escape(c) << " |";
      out << "\n|";
      for (std::size_t c = 0; c < cols.size(); ++c) out << " --- |";
      out << "\n";
      for (const auto& row : rows) {
        out << "|";
        for (const auto& c : cols) out << " " << md_escape(row.contains(c) ? cell(row[c]) : "") << " |";
        out << "\n";
      }
    }
    return out.str();
  }
  throw InputError("unknown format \"" + format + "\" (expected json, csv or md)");
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw InputError(dir_ + ": cannot create cache directory: " + ec.message());
}

std::string ResultCache::key(const std::string& canonical_command, const Json& input_hashes) {
  Json material;
  material["version"] = kToolVersion;
  material["schema_version"] = kSchemaVersion;
  material["command"] = canonical_command;
  material["inputs"] = input_hashes;
  return sha256_hex(material.dump());
}

std::string ResultCache::path_of(const std::string& key) const { return (fs::path(dir_) / key).string(); }

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_of(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  std::random_device rd;
  const std::string tmp = path_of(key) + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(tmp + ": cannot write cache entry");
    out << value;
  }
  std::error_code ec;
  fs::rename(tmp, path_of(key), ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InputError(path_of(key) + ": cannot store cache entry");
  }
}

}  // namespace cyclotome
