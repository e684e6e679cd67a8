#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace sp6 {

// Directory holding cohomology_facts.json and fixtures/. Resolution order:
// explicit override, SP6_DATA_DIR environment variable, compile-time default.
void set_data_dir(std::string dir);
const std::string& data_dir();

nlohmann::json load_json(const std::string& relative_path);

}  // namespace sp6
