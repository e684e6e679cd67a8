#include "sp6/parity.hpp"

#include <stdexcept>

namespace sp6 {

namespace {

// "odd" below means: an integer of odd parity. Half-integer coefficients can
// occur next to a GL2-type fundamental weight, but only when a companion
// coefficient is already odd, so every clause that fires is integral.
SurvivalVerdict sheaf(const std::string& why) { return {Survival::sheaf_zero, why}; }
SurvivalVerdict cohom(const std::string& why) { return {Survival::cohomology_zero, why}; }
SurvivalVerdict ok() { return {Survival::survives, ""}; }

}  // namespace

SurvivalVerdict survives(const Parabolic& I, const LeviWeightCoords& m) {
  if (!(m.parabolic == I)) throw std::invalid_argument("coords belong to a different parabolic");
  switch (I.mask()) {
    case 7:  // Borel: all of m1, m2, m3 must be even
      if (!is_even(m.m1)) return sheaf("m1 odd");
      if (!is_even(m.m2)) return sheaf("m2 odd");
      if (!is_even(m.m3)) return sheaf("m3 odd");
      return ok();
    case 3:  // {a1,a2}
      if (is_odd(m.m1)) return sheaf("m1 odd");
      if (is_odd(m.m2)) return sheaf("m2 odd");
      if (is_odd(m.m3)) return sheaf("m3 odd");
      return ok();
    case 5:  // {a1,a3}
      if (is_odd(m.m1)) return sheaf("m1 odd");
      if (is_odd(m.m2)) return sheaf("m2 odd");
      if (m.m2 == 0 && is_odd(m.m3)) return cohom("m2 = 0 and m3 odd");
      return ok();
    case 6:  // {a2,a3}
      if (is_odd(m.m1)) return sheaf("m1 odd");
      if (is_odd(m.m3)) return sheaf("m3 odd");
      if (m.m1 == 0 && is_odd(m.m2)) return cohom("m1 = 0 and m2 odd");
      return ok();
    case 1:  // {a1}
      if (is_odd(m.m1)) return sheaf("m1 odd");
      if (is_odd(m.m2)) return sheaf("m2 odd");
      return ok();
    case 2:  // {a2}
      if (is_odd(m.m1)) return sheaf("m1 odd");
      if (is_odd(m.m3)) return sheaf("m3 odd");
      if (m.m1 == 0 && is_odd(m.m2)) return cohom("m1 = 0 and m2 odd");
      return ok();
    case 4:  // {a3}
      if (is_odd(m.m1 + m.m3)) return sheaf("m1 + m3 odd");
      return ok();
    default:
      throw std::invalid_argument("empty parabolic index set");
  }
}

std::vector<WeylElement> filtered_reps(const Parabolic& I, const Weight& lambda) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : kostant_reps(I)) {
    LeviWeightCoords m = to_levi_coords(I, dot(w, lambda));
    if (survives(I, m).status == Survival::survives) out.push_back(w);
  }
  return out;
}

}  // namespace sp6
