#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace toric {

struct ReportSection {
  std::string title;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> entries;

  ReportSection& add(std::string key, nlohmann::ordered_json value) {
    entries.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

struct Report {
  std::string command;
  std::string input_digest;
  std::vector<ReportSection> sections;
  bool ok = true;
  std::string error_code;
  std::string error_message;

  ReportSection& section(std::string title) {
    sections.push_back({std::move(title), {}});
    return sections.back();
  }
  void set_error(std::string code, std::string message);

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace toric
