#include "sp6/data.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#ifndef SP6_DEFAULT_DATA_DIR
#define SP6_DEFAULT_DATA_DIR "data"
#endif

namespace sp6 {

namespace {
std::string& data_dir_storage() {
  static std::string dir = [] {
    if (const char* env = std::getenv("SP6_DATA_DIR")) return std::string(env);
    return std::string(SP6_DEFAULT_DATA_DIR);
  }();
  return dir;
}
}  // namespace

void set_data_dir(std::string dir) { data_dir_storage() = std::move(dir); }

const std::string& data_dir() { return data_dir_storage(); }

nlohmann::json load_json(const std::string& relative_path) {
  const std::string path = data_dir() + "/" + relative_path;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace sp6
