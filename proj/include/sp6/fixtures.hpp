#pragma once

#include "sp6/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sp6 {

// Reference tables transcribed from the published computation; loaded from
// plain JSON committed under data/fixtures and compared bit-exactly.
struct Fixtures {
  struct WeylRow {
    std::string name, inverse_name;
    int len = 0;
    std::array<std::array<int, 3>, 3> alpha_images{};  // w^{-1}(alpha_i) in alpha-coords
  };
  std::vector<WeylRow> weyl_table;

  std::map<std::string, std::vector<std::string>> kostant_sets;
  std::map<std::string, std::vector<std::string>> filtered_sets;
  // The earlier printing of the a2 list (contains a duplicate entry).
  std::vector<std::string> filtered_a2_early_printing;

  struct WeightRow {
    std::string w;
    std::array<Rat, 3> m{};
  };
  std::map<std::string, std::vector<WeightRow>> trivial_weights;

  struct SymbolicSpot {
    std::string parabolic, w;
    std::array<std::array<Rat, 4>, 3> coeff{};  // constant, n1, n2, n3
  };
  std::vector<SymbolicSpot> symbolic_spots;

  struct FaceLineRow {
    int q = 0;
    std::string w;
    std::string display;
    long dim = 0;
  };
  std::map<std::string, std::vector<FaceLineRow>> face_decorated;
  std::map<std::string, std::vector<FaceLineRow>> face_evaluated;

  std::map<std::pair<int, int>, long> e1_dims, e2_dims, e3_dims;

  struct D1Block {
    int p = 0, q = 0;
    std::vector<std::pair<std::string, std::string>> row_lines, col_lines;
    std::vector<std::vector<Rat>> entries;
  };
  std::vector<D1Block> d1_blocks;
  const D1Block* d1_block(int p, int q) const;

  std::map<std::pair<int, int>, long> d1_ranks;

  std::array<long, 12> boundary_dims{};
};

const Fixtures& fixtures();

}  // namespace sp6
