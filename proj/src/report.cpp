#include "sp6/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace sp6 {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const ReportTable& table, ReportFormat format) {
  if (format == ReportFormat::json) return table_to_json(table).dump(2) + "\n";

  std::ostringstream os;
  std::vector<std::string> headers = table.label_headers;
  headers.insert(headers.end(), table.value_headers.begin(), table.value_headers.end());

  if (format == ReportFormat::csv) {
    for (size_t i = 0; i < headers.size(); ++i) os << (i ? "," : "") << csv_escape(headers[i]);
    os << "\n";
    for (const ReportRow& r : table.rows) {
      size_t col = 0;
      for (const std::string& v : r.labels) os << (col++ ? "," : "") << csv_escape(v);
      for (const std::string& v : r.values) os << (col++ ? "," : "") << csv_escape(v);
      os << "\n";
    }
    return os.str();
  }

  // Markdown with padded columns.
  std::vector<size_t> width(headers.size());
  for (size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
  auto cells = [&](const ReportRow& r) {
    std::vector<std::string> c = r.labels;
    c.insert(c.end(), r.values.begin(), r.values.end());
    return c;
  };
  for (const ReportRow& r : table.rows) {
    auto c = cells(r);
    for (size_t i = 0; i < c.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], c[i].size());
  }
  auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };
  os << "| ";
  for (size_t i = 0; i < headers.size(); ++i) os << pad(headers[i], width[i]) << " | ";
  os << "\n|";
  for (size_t i = 0; i < headers.size(); ++i) os << std::string(width[i] + 2, '-') << "|";
  os << "\n";
  for (const ReportRow& r : table.rows) {
    auto c = cells(r);
    os << "| ";
    for (size_t i = 0; i < headers.size(); ++i)
      os << pad(i < c.size() ? c[i] : "", width[i]) << " | ";
    os << "\n";
  }
  return os.str();
}

nlohmann::json table_to_json(const ReportTable& table) {
  nlohmann::json j;
  j["kind"] = table.kind;
  j["label_headers"] = table.label_headers;
  j["value_headers"] = table.value_headers;
  j["rows"] = nlohmann::json::array();
  for (const ReportRow& r : table.rows) {
    nlohmann::json row;
    row["labels"] = r.labels;
    row["values"] = r.values;
    row["provenance"] = r.provenance;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

ReportTable table_from_json(const nlohmann::json& j) {
  ReportTable t;
  t.kind = j.at("kind").get<std::string>();
  t.label_headers = j.at("label_headers").get<std::vector<std::string>>();
  t.value_headers = j.at("value_headers").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    ReportRow r;
    r.labels = row.at("labels").get<std::vector<std::string>>();
    r.values = row.at("values").get<std::vector<std::string>>();
    r.provenance = row.at("provenance").get<std::string>();
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace sp6
