#pragma once

#include "sp6/leviweights.hpp"

#include <string>
#include <vector>

namespace sp6 {

// Outcome of the per-parabolic vanishing lemmas for one Kostant weight.
// sheaf_zero: the local system itself vanishes.
// cohomology_zero: the local system is nonzero but all its cohomology dies.
enum class Survival { survives, sheaf_zero, cohomology_zero };

struct SurvivalVerdict {
  Survival status;
  std::string reason;  // which clause fired, empty when it survives
};

SurvivalVerdict survives(const Parabolic& I, const LeviWeightCoords& m);

// Kostant representatives whose summand survives the vanishing lemmas.
std::vector<WeylElement> filtered_reps(const Parabolic& I, const Weight& lambda = Weight());

}  // namespace sp6
