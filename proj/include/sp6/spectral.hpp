#pragma once

#include "sp6/cohomdb.hpp"
#include "sp6/linalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sp6 {

// One basis line of the E1-page. Columns p = 0,1,2 hold the faces of
// parabolic rank p+1; q is the total degree.
struct E1Line {
  int p = 0, q = 0;
  Parabolic parabolic;
  WeylElement w;
  int internal_degree = 0;
  long dim = 0;         // evaluated, >= 1 (zero lines are dropped at assembly)
  std::string display;  // formal dimension expression
  int ordinal = 0;      // position within E1^{p,q}

  std::string label() const { return parabolic.name() + ":" + weyl_name(w); }
};

struct E1Page {
  std::map<std::pair<int, int>, std::vector<E1Line>> entries;

  const std::vector<E1Line>& lines(int p, int q) const;
  long dim(int p, int q) const;
  int max_q() const;
};

E1Page assemble_E1(const Weight& lambda = Weight());

// True iff source line (I,w) restricts to target line (J,w2): I inside J with
// one more simple root, w2 = s*w for some s in the source's Levi Weyl group.
// Rows index E1^{p+1,q} lines, columns index E1^{p,q} lines.
std::vector<std::vector<bool>> support_d1(const E1Page& page, int p, int q);

enum class SignPolicy { pure_epsilon, paper_fixture, solved };

std::string sign_policy_name(SignPolicy p);
std::optional<SignPolicy> sign_policy_parse(std::string_view s);

struct Differentials {
  SignPolicy policy = SignPolicy::pure_epsilon;
  std::map<std::pair<int, int>, Matrix> blocks;  // (p,q) -> E1^{p,q} -> E1^{p+1,q}

  const Matrix* block(int p, int q) const;
};

// A fixture matrix whose nonzero support disagrees with the combinatorial
// support rule; build-breaking.
class FixtureMismatch : public std::runtime_error {
 public:
  explicit FixtureMismatch(const std::string& what) : std::runtime_error(what) {}
};

Differentials build_d1(const E1Page& page, SignPolicy policy);

struct D2SquaredDefect {
  int q = 0;
  size_t target = 0, source = 0;  // line ordinals in E1^{2,q} and E1^{0,q}
  Rat value;
};

// Nonzero entries of the composites E1^{0,q} -> E1^{2,q}; empty means the
// sign assignment is consistent.
std::vector<D2SquaredDefect> d_squared_defect(const E1Page& page, const Differentials& d);

// Transfer sign per supported pair; the differential entry is epsilon * eta.
struct SignAssignment {
  // key: (q, step 0|1, target ordinal, source ordinal) -> eta
  std::map<std::array<int, 4>, int> eta;
};

struct SignSolution {
  SignAssignment assignment;
  Differentials diff;
  std::map<std::pair<int, int>, size_t> rank_profile;
};

// All sign assignments with d o d = 0, enumerated up to gauge (simultaneous
// flip of every entry incident to one line). Throws if none exists.
std::vector<SignSolution> solve_signs(const E1Page& page);

struct E2Entry {
  long dim = 0;
  std::vector<std::string> labels;
  // p=0: kernel vectors in E1^{p,q} coordinates; p=2: indices of coker
  // representative lines. Used by the d2 support analysis.
  std::vector<std::vector<Rat>> kernel;
  std::vector<size_t> coker_lines;
};

struct E2Page {
  std::map<std::pair<int, int>, E2Entry> entries;
  long dim(int p, int q) const;
};

E2Page compute_E2(const E1Page& page, const Differentials& d);

// Support analysis for d2 : E2^{0,q} -> E2^{2,q-1}. The zig-zag entries are
// never needed here: at trivial coefficients the support is empty.
struct D2Support {
  int q = 0;
  std::vector<size_t> sources;  // E1^{0,q} ordinals appearing in the kernel
  std::vector<size_t> targets;  // E1^{2,q-1} ordinals representing the cokernel
  std::vector<std::pair<size_t, size_t>> supported;  // (target, source)
};

std::vector<D2Support> d2_support(const E1Page& page, const E2Page& e2);

// Matrices E2^{0,q} -> E2^{2,q-1} in the stored kernel/cokernel bases. With
// trivial coefficients every support set is empty and every matrix is zero;
// a nonempty support would need the zig-zag lift and throws instead.
std::map<int, Matrix> build_d2(const E1Page& page, const E2Page& e2);

struct E3Page {
  std::map<std::pair<int, int>, long> dims;
  std::map<std::pair<int, int>, std::vector<std::string>> labels;
  long dim(int p, int q) const;
};

E3Page compute_E3(const E1Page& page, const E2Page& e2);

struct BoundaryCohomology {
  std::array<long, 12> dims{};
  std::array<std::vector<std::pair<int, int>>, 12> contributors;
};

BoundaryCohomology boundary_cohomology(SignPolicy policy = SignPolicy::solved,
                                       const Weight& lambda = Weight());

}  // namespace sp6
