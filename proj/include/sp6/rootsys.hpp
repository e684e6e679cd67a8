#pragma once

#include "sp6/weight.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sp6 {

// The C3 root system in epsilon-coordinates:
//   Phi = { +-e_i +- e_j (i<j) } u { +-2 e_i },  |Phi| = 18, |Phi+| = 9.
struct Root {
  std::array<int, 3> eps;  // integer epsilon-coordinates
  bool positive;

  Weight weight() const { return Weight(eps[0], eps[1], eps[2]); }
};

enum class RootClass { positive, negative, not_a_root };

struct RootSystemC3 {
  std::vector<Root> all_roots;        // 18, positives first
  std::vector<Root> positive_roots;   // 9, in the order the positive system is listed
  std::array<Weight, 3> simple;       // alpha1 = e1-e2, alpha2 = e2-e3, alpha3 = 2e3
  std::array<Weight, 3> fundamental;  // gamma1 = e1, gamma2 = e1+e2, gamma3 = e1+e2+e3
  std::array<Weight, 3> simple_coroot;  // e1-e2, e2-e3, e3
  Weight rho;                         // (3,2,1)
};

RootSystemC3 build_root_system();

// Shared immutable instance; the system is canonical data, not state.
const RootSystemC3& root_system();

RootClass classify_root(const Weight& v);

// s1 swaps c1,c2; s2 swaps c2,c3; s3 negates c3. i in {1,2,3}.
Weight simple_reflection(int i, const Weight& v);

// Coordinates of v in the basis of simple roots (alpha-basis), exact.
std::array<Rat, 3> to_alpha_coords(const Weight& v);
Weight from_alpha_coords(const std::array<Rat, 3>& a);

}  // namespace sp6
