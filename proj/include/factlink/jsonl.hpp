#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "factlink/common.hpp"

namespace factlink {

using Json = nlohmann::json;

inline std::string line_context(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line) + ": ";
}

// Calls fn(record, line_number) for every non-blank line. Unknown fields
// in records are left for callers to ignore.
template <typename Fn>
void read_jsonl(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string() + ": cannot open");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const std::exception& e) {
      throw LoadError(line_context(path, line_no) + "invalid JSON: " + e.what());
    }
    fn(record, line_no);
  }
}

inline const Json& require_field(const Json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw LoadError(ctx + "missing field \"" + key + "\"");
  return *it;
}

inline std::string require_string(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = require_field(j, key, ctx);
  if (!v.is_string()) throw LoadError(ctx + "field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace factlink
