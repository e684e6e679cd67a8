#include "sp6/rootsys.hpp"

#include <stdexcept>

namespace sp6 {

RootSystemC3 build_root_system() {
  RootSystemC3 rs;
  // Positive system as listed: e1-e2, e1-e3, e2-e3, e1+e2, e1+e3, e2+e3, 2e1, 2e2, 2e3.
  const std::array<std::array<int, 3>, 9> pos = {{{1, -1, 0},
                                                  {1, 0, -1},
                                                  {0, 1, -1},
                                                  {1, 1, 0},
                                                  {1, 0, 1},
                                                  {0, 1, 1},
                                                  {2, 0, 0},
                                                  {0, 2, 0},
                                                  {0, 0, 2}}};
  for (const auto& c : pos) {
    rs.positive_roots.push_back(Root{c, true});
    rs.all_roots.push_back(Root{c, true});
  }
  for (const auto& c : pos) rs.all_roots.push_back(Root{{-c[0], -c[1], -c[2]}, false});

  rs.simple = {Weight(1, -1, 0), Weight(0, 1, -1), Weight(0, 0, 2)};
  rs.fundamental = {Weight(1, 0, 0), Weight(1, 1, 0), Weight(1, 1, 1)};
  rs.simple_coroot = {Weight(1, -1, 0), Weight(0, 1, -1), Weight(0, 0, 1)};
  rs.rho = Weight(3, 2, 1);
  return rs;
}

const RootSystemC3& root_system() {
  static const RootSystemC3 rs = build_root_system();
  return rs;
}

RootClass classify_root(const Weight& v) {
  for (const Root& r : root_system().all_roots) {
    if (r.weight() == v) return r.positive ? RootClass::positive : RootClass::negative;
  }
  return RootClass::not_a_root;
}

Weight simple_reflection(int i, const Weight& v) {
  switch (i) {
    case 1: return {v.c2, v.c1, v.c3};
    case 2: return {v.c1, v.c3, v.c2};
    case 3: return {v.c1, v.c2, -v.c3};
    default: throw std::invalid_argument("simple reflection index must be 1, 2 or 3");
  }
}

// alpha1 = e1-e2, alpha2 = e2-e3, alpha3 = 2e3:
//   a*alpha1 + b*alpha2 + c*alpha3 = (a, b-a, 2c-b).
std::array<Rat, 3> to_alpha_coords(const Weight& v) {
  Rat a = v.c1;
  Rat b = v.c1 + v.c2;
  Rat c = (v.c1 + v.c2 + v.c3) / 2;
  return {a, b, c};
}

Weight from_alpha_coords(const std::array<Rat, 3>& x) {
  return {x[0], x[1] - x[0], 2 * x[2] - x[1]};
}

}  // namespace sp6
