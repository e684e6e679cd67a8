#pragma once

#include "sp6/rootsys.hpp"
#include "sp6/weight.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sp6 {

// Signed permutation of the three epsilon-letters: w(e_j) = sign[j] * e_{perm[j]}.
// Words multiply left-to-right as group elements, so from_word({1,2}) is the
// map v -> s1(s2(v)).
struct WeylElement {
  std::array<uint8_t, 3> perm{0, 1, 2};
  std::array<int8_t, 3> sign{1, 1, 1};

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  // Raw structural order; display order is by (length, canonical word).
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return std::tie(a.perm, a.sign) < std::tie(b.perm, b.sign);
  }
};

WeylElement weyl_identity();
WeylElement simple_generator(int i);  // i in {1,2,3}
WeylElement multiply(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& a);
WeylElement from_word(std::span<const int> word);
WeylElement from_word(std::initializer_list<int> word);

Weight act(const WeylElement& w, const Weight& v);

// Number of positive roots sent negative.
int length(const WeylElement& w);

// Lexicographically smallest reduced word, by greedy smallest left descent.
std::vector<int> canonical_word(const WeylElement& w);

// "e" for the identity, otherwise "s" followed by the canonical word digits.
std::string weyl_name(const WeylElement& w);
std::optional<WeylElement> weyl_from_name(std::string_view name);

// Dot action w . lambda = w(lambda + rho) - rho.
Weight dot(const WeylElement& w, const Weight& lambda);

// Alpha-coordinates of w^{-1}(alpha_i), i in {1,2,3}.
std::array<int, 3> inverse_simple_image(const WeylElement& w, int i);

// All 48 elements, identity first, sorted by (length, canonical word).
const std::vector<WeylElement>& enumerate_weyl();

// Comparator matching the enumeration order.
bool weyl_display_less(const WeylElement& a, const WeylElement& b);

}  // namespace sp6
