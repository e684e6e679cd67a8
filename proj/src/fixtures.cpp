#include "sp6/fixtures.hpp"

#include "sp6/data.hpp"

#include <nlohmann/json.hpp>

namespace sp6 {

namespace {

using nlohmann::json;

std::array<Rat, 3> rat_triple(const json& j) {
  return {rat_parse(j.at(0).get<std::string>()), rat_parse(j.at(1).get<std::string>()),
          rat_parse(j.at(2).get<std::string>())};
}

std::map<std::pair<int, int>, long> page_dims(const json& j) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& e : j) out[{e.at("p").get<int>(), e.at("q").get<int>()}] = e.at("dim").get<long>();
  return out;
}

std::map<std::string, std::vector<Fixtures::FaceLineRow>> face_tables(const json& j) {
  std::map<std::string, std::vector<Fixtures::FaceLineRow>> out;
  for (const auto& [face, rows] : j.items()) {
    for (const auto& r : rows) {
      Fixtures::FaceLineRow row;
      row.q = r.at("q").get<int>();
      row.w = r.at("w").get<std::string>();
      row.display = r.value("display", "");
      row.dim = r.value("dim", 1L);
      out[face].push_back(std::move(row));
    }
  }
  return out;
}

Fixtures load() {
  Fixtures fx;

  {
    json j = load_json("fixtures/weyl_table.json");
    for (const auto& r : j.at("rows")) {
      Fixtures::WeylRow row;
      row.name = r.at("w").get<std::string>();
      row.inverse_name = r.at("w_inv").get<std::string>();
      row.len = r.at("len").get<int>();
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) row.alpha_images[i][k] = r.at("alpha_images").at(i).at(k).get<int>();
      fx.weyl_table.push_back(std::move(row));
    }
  }

  {
    json j = load_json("fixtures/kostant_sets.json");
    for (const auto& [name, words] : j.items())
      fx.kostant_sets[name] = words.get<std::vector<std::string>>();
  }

  {
    json j = load_json("fixtures/filtered_sets.json");
    for (const auto& [name, words] : j.at("sets").items())
      fx.filtered_sets[name] = words.get<std::vector<std::string>>();
    fx.filtered_a2_early_printing =
        j.at("a2_early_printing").get<std::vector<std::string>>();
  }

  {
    json j = load_json("fixtures/trivial_weights.json");
    for (const auto& [name, rows] : j.items()) {
      for (const auto& r : rows) {
        Fixtures::WeightRow row;
        row.w = r.at("w").get<std::string>();
        row.m = rat_triple(r.at("m"));
        fx.trivial_weights[name].push_back(std::move(row));
      }
    }
  }

  {
    json j = load_json("fixtures/symbolic_spots.json");
    for (const auto& r : j) {
      Fixtures::SymbolicSpot spot;
      spot.parabolic = r.at("parabolic").get<std::string>();
      spot.w = r.at("w").get<std::string>();
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 4; ++k)
          spot.coeff[i][k] = rat_parse(r.at("coeff").at(i).at(k).get<std::string>());
      fx.symbolic_spots.push_back(std::move(spot));
    }
  }

  {
    json j = load_json("fixtures/face_tables.json");
    fx.face_decorated = face_tables(j.at("decorated"));
    fx.face_evaluated = face_tables(j.at("evaluated"));
  }

  {
    json j = load_json("fixtures/page_shapes.json");
    fx.e1_dims = page_dims(j.at("e1"));
    fx.e2_dims = page_dims(j.at("e2"));
    fx.e3_dims = page_dims(j.at("e3"));
  }

  {
    json j = load_json("fixtures/d1_matrices.json");
    for (const auto& b : j.at("blocks")) {
      Fixtures::D1Block block;
      block.p = b.at("p").get<int>();
      block.q = b.at("q").get<int>();
      for (const auto& l : b.at("rows"))
        block.row_lines.emplace_back(l.at(0).get<std::string>(), l.at(1).get<std::string>());
      for (const auto& l : b.at("cols"))
        block.col_lines.emplace_back(l.at(0).get<std::string>(), l.at(1).get<std::string>());
      for (const auto& row : b.at("entries")) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(rat_parse(v.get<std::string>()));
        block.entries.push_back(std::move(r));
      }
      fx.d1_blocks.push_back(std::move(block));
    }
    for (const auto& r : j.at("ranks"))
      fx.d1_ranks[{r.at("p").get<int>(), r.at("q").get<int>()}] = r.at("rank").get<long>();
  }

  {
    json j = load_json("fixtures/main_theorem.json");
    auto v = j.at("H").get<std::vector<long>>();
    for (size_t i = 0; i < 12 && i < v.size(); ++i) fx.boundary_dims[i] = v[i];
  }

  return fx;
}

}  // namespace

const Fixtures::D1Block* Fixtures::d1_block(int p, int q) const {
  for (const D1Block& b : d1_blocks)
    if (b.p == p && b.q == q) return &b;
  return nullptr;
}

const Fixtures& fixtures() {
  static const Fixtures fx = load();
  return fx;
}

}  // namespace sp6
