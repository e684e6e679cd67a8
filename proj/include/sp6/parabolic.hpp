#pragma once

#include "sp6/weyl.hpp"

#include <string>
#include <vector>

namespace sp6 {

// Standard parabolic P_I for a nonempty subset I of {1,2,3}. |I| is the
// parabolic rank, so the singletons are the maximal parabolics and the full
// set is the Borel.
class Parabolic {
 public:
  Parabolic() = default;
  explicit Parabolic(std::initializer_list<int> indices);

  static Parabolic from_mask(unsigned mask);  // bits 0..2 for alpha_1..alpha_3
  static std::optional<Parabolic> parse(std::string_view name);  // a1..a23, b
  static const std::vector<Parabolic>& all();  // the seven, by (rank, indices)

  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  int rank() const;
  std::vector<int> indices() const;             // members of I, ascending
  std::vector<int> levi_simple_indices() const; // complement of I, ascending
  unsigned mask() const { return mask_; }
  bool subset_of(const Parabolic& other) const {
    return (mask_ & other.mask()) == mask_;
  }

  std::string name() const;  // "a1", "a12", ..., "b" for the Borel

  friend bool operator==(const Parabolic&, const Parabolic&) = default;
  friend bool operator<(const Parabolic& a, const Parabolic& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.mask_ < b.mask_;
  }

 private:
  unsigned mask_ = 0;
};

struct LeviFactor {
  enum class Kind { GL1, GL2, GL3, Sp2, Sp4 };
  Kind kind;
  // Which gamma^I coefficient slots (0-based) feed this factor's weight,
  // in the factor's own order. Frozen per the Levi table; the Kuenneth
  // assembly in the cohomology database depends on it.
  std::vector<int> slots;
};

std::string levi_factor_name(LeviFactor::Kind k);

struct LeviDescriptor {
  std::vector<LeviFactor> factors;   // left-to-right as in the Levi table
  std::vector<int> levi_simple;      // indices of Delta_M = pi \ I
  std::string display;               // e.g. "GL2 x Sp2"
};

LeviDescriptor levi_data(const Parabolic& I);

// Subgroup of W generated by { s_j : alpha_j in Delta_M }, enumerated in
// display order.
std::vector<WeylElement> weyl_levi(const Parabolic& I);

// Kostant representatives via condition (A): w^{-1}(alpha) positive for all
// alpha in Delta_M. Sorted by (length, canonical word).
std::vector<WeylElement> kostant_reps(const Parabolic& I);

// Independent route via condition (B): w(Phi-) cap Phi+ inside Phi+(u_P).
std::vector<WeylElement> kostant_reps_condition_b(const Parabolic& I);

// True iff w2 = s*w for some s in the Levi Weyl group of the source I.
// Requires I strictly contained in J.
bool kostant_match(const Parabolic& I, const WeylElement& w,
                   const Parabolic& J, const WeylElement& w2);

// (-1)^j where j is the 1-based position of the added simple root within the
// sorted target set J = I u {k}.
int epsilon_sign(const Parabolic& I, const Parabolic& J);

}  // namespace sp6
