#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace sp6 {

enum class ReportFormat { markdown, json, csv };

struct ReportRow {
  std::vector<std::string> labels;
  std::vector<std::string> values;
  std::string provenance;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportTable {
  std::string kind;
  std::vector<std::string> label_headers;
  std::vector<std::string> value_headers;
  std::vector<ReportRow> rows;

  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

std::string render(const ReportTable& table, ReportFormat format);

nlohmann::json table_to_json(const ReportTable& table);
ReportTable table_from_json(const nlohmann::json& j);

}  // namespace sp6
