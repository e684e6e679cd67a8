#include "sp6/verify.hpp"

#include "sp6/fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace sp6 {

namespace {

using Check = CheckResult;

Check pass(std::string name, std::string note = "") {
  return {std::move(name), true, std::move(note)};
}
Check fail(std::string name, std::string diff) {
  return {std::move(name), false, std::move(diff)};
}

std::vector<std::string> names_of(const std::vector<WeylElement>& ws) {
  std::vector<std::string> out;
  for (const WeylElement& w : ws) out.push_back(weyl_name(w));
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
  return s;
}

Check check_weyl_table() {
  const auto& fx = fixtures().weyl_table;
  const auto& all = enumerate_weyl();
  if (fx.size() != all.size())
    return fail("weyl-table", "expected 48 rows, fixture has " + std::to_string(fx.size()));
  for (size_t i = 0; i < all.size(); ++i) {
    const WeylElement& w = all[i];
    std::ostringstream diff;
    if (weyl_name(w) != fx[i].name)
      diff << "row " << i << ": name " << weyl_name(w) << " != " << fx[i].name << "; ";
    if (weyl_name(inverse(w)) != fx[i].inverse_name)
      diff << "row " << i << ": inverse " << weyl_name(inverse(w)) << " != " << fx[i].inverse_name
           << "; ";
    if (length(w) != fx[i].len)
      diff << "row " << i << ": length " << length(w) << " != " << fx[i].len << "; ";
    for (int a = 1; a <= 3; ++a) {
      auto img = inverse_simple_image(w, a);
      const auto& want = fx[i].alpha_images[a - 1];
      if (img != want)
        diff << "row " << i << " (" << fx[i].name << "): w^{-1}(alpha_" << a << ") mismatch; ";
    }
    if (!diff.str().empty()) return fail("weyl-table", diff.str());
  }
  return pass("weyl-table", "48 rows regenerated");
}

Check check_kostant_sets() {
  for (const Parabolic& I : Parabolic::all()) {
    auto got = names_of(kostant_reps(I));
    const auto& want = fixtures().kostant_sets.at(I.name());
    if (got != want)
      return fail("kostant-sets", I.name() + ": got [" + join(got) + "] want [" + join(want) + "]");
  }
  return pass("kostant-sets", "sizes 6/12/8/24/24/24/48");
}

Check check_kostant_conditions() {
  for (const Parabolic& I : Parabolic::all()) {
    if (kostant_reps(I) != kostant_reps_condition_b(I))
      return fail("kostant-conditions", I.name() + ": conditions (A) and (B) disagree");
  }
  return pass("kostant-conditions", "(A) == (B) for all seven parabolics");
}

Check check_levi_coset_structure() {
  for (const Parabolic& I : Parabolic::all()) {
    auto reps = kostant_reps(I);
    auto levi = weyl_levi(I);
    if (reps.size() * levi.size() != 48)
      return fail("levi-coset-structure",
                  I.name() + ": |W^P| * |W_M| = " + std::to_string(reps.size() * levi.size()));
    // Unique factorization w = s * u with additive lengths.
    std::set<WeylElement> seen;
    for (const WeylElement& s : levi)
      for (const WeylElement& u : reps) {
        WeylElement w = multiply(s, u);
        if (!seen.insert(w).second)
          return fail("levi-coset-structure", I.name() + ": factorization not unique");
        if (length(w) != length(s) + length(u))
          return fail("levi-coset-structure", I.name() + ": lengths not additive at " +
                                                  weyl_name(s) + " * " + weyl_name(u));
      }
    if (seen.size() != 48)
      return fail("levi-coset-structure", I.name() + ": factorization misses elements");
    // Nesting W^{P_I} within W^{P_J} for I inside J.
    for (const Parabolic& J : Parabolic::all()) {
      if (!(I.subset_of(J)) || I == J) continue;
      auto big = kostant_reps(J);
      for (const WeylElement& w : reps)
        if (std::find(big.begin(), big.end(), w) == big.end())
          return fail("levi-coset-structure",
                      I.name() + " not nested in " + J.name() + " at " + weyl_name(w));
    }
  }
  return pass("levi-coset-structure", "product, unique factorization, nesting");
}

Check check_epsilon_coherence() {
  for (const Parabolic& I : Parabolic::all()) {
    if (I.rank() != 1) continue;
    std::vector<Parabolic> mids;
    for (const Parabolic& J : Parabolic::all())
      if (J.rank() == 2 && I.subset_of(J)) mids.push_back(J);
    Parabolic pi{1, 2, 3};
    int prod0 = epsilon_sign(I, mids[0]) * epsilon_sign(mids[0], pi);
    int prod1 = epsilon_sign(I, mids[1]) * epsilon_sign(mids[1], pi);
    if (prod0 != -prod1)
      return fail("epsilon-coherence", I.name() + ": two-step signs do not anticommute");
  }
  return pass("epsilon-coherence", "two-step epsilon products anticommute");
}

Check check_weight_tables_trivial() {
  for (const Parabolic& I : Parabolic::all()) {
    const auto& want = fixtures().trivial_weights.at(I.name());
    auto reps = kostant_reps(I);
    if (reps.size() != want.size())
      return fail("weight-tables-trivial", I.name() + ": row count mismatch");
    for (size_t i = 0; i < reps.size(); ++i) {
      if (weyl_name(reps[i]) != want[i].w)
        return fail("weight-tables-trivial",
                    I.name() + " row " + std::to_string(i) + ": order mismatch");
      LeviWeightCoords m = to_levi_coords(I, dot(reps[i], Weight()));
      if (m.m1 != want[i].m[0] || m.m2 != want[i].m[1] || m.m3 != want[i].m[2])
        return fail("weight-tables-trivial",
                    I.name() + " row " + want[i].w + ": (" + rat_str(m.m1) + "," + rat_str(m.m2) +
                        "," + rat_str(m.m3) + ") != (" + rat_str(want[i].m[0]) + "," +
                        rat_str(want[i].m[1]) + "," + rat_str(want[i].m[2]) + ")");
    }
  }
  return pass("weight-tables-trivial", "146 rows cell-for-cell");
}

Check check_weight_tables_symbolic_spots() {
  for (const auto& spot : fixtures().symbolic_spots) {
    Parabolic I = *Parabolic::parse(spot.parabolic);
    WeylElement w = *weyl_from_name(spot.w);
    auto sym = symbolic_levi_coords(I, w);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 4; ++k)
        if (sym[i].c[k] != spot.coeff[i][k])
          return fail("weight-tables-symbolic-spots",
                      spot.parabolic + " " + spot.w + ": coefficient mismatch in column " +
                          std::to_string(i + 1));
  }
  return pass("weight-tables-symbolic-spots",
              std::to_string(fixtures().symbolic_spots.size()) + " rows");
}

Check check_weight_tables_random_lambda() {
  std::mt19937 rng(20240613);
  std::uniform_int_distribution<int> pick(0, 20);
  for (int trial = 0; trial < 100; ++trial) {
    Rat n1 = pick(rng), n2 = pick(rng), n3 = pick(rng);
    Weight lambda = lambda_from_n(n1, n2, n3);
    for (const Parabolic& I : Parabolic::all()) {
      for (const WeylElement& w : kostant_reps(I)) {
        auto sym = symbolic_levi_coords(I, w);
        LeviWeightCoords direct = to_levi_coords(I, dot(w, lambda));
        if (sym[0].eval(n1, n2, n3) != direct.m1 || sym[1].eval(n1, n2, n3) != direct.m2 ||
            sym[2].eval(n1, n2, n3) != direct.m3)
          return fail("weight-tables-random-lambda",
                      I.name() + " " + weyl_name(w) + " at (" + rat_str(n1) + "," + rat_str(n2) +
                          "," + rat_str(n3) + ")");
      }
    }
  }
  return pass("weight-tables-random-lambda", "100 random weights, symbolic == direct");
}

Check check_filtered_sets() {
  for (const Parabolic& I : Parabolic::all()) {
    auto got = names_of(filtered_reps(I));
    auto want = fixtures().filtered_sets.at(I.name());
    std::vector<std::string> sorted_got = got, sorted_want = want;
    std::sort(sorted_got.begin(), sorted_got.end());
    std::sort(sorted_want.begin(), sorted_want.end());
    if (sorted_got != sorted_want)
      return fail("filtered-sets",
                  I.name() + ": got {" + join(got) + "} want {" + join(want) + "}");
  }
  return pass("filtered-sets", "all seven surviving sets");
}

Check check_filtered_sets_early_printing() {
  // The earlier summary printed the a2 list with a duplicated entry; as a set
  // it agrees with the list used by the page computation.
  std::set<std::string> early(fixtures().filtered_a2_early_printing.begin(),
                              fixtures().filtered_a2_early_printing.end());
  auto authoritative = fixtures().filtered_sets.at("a2");
  std::set<std::string> used(authoritative.begin(), authoritative.end());
  if (fixtures().filtered_a2_early_printing.size() != 7)
    return fail("filtered-sets-early-printing", "expected the 7-entry printing");
  if (early != used)
    return fail("filtered-sets-early-printing", "deduplicated early printing differs");
  return pass("filtered-sets-early-printing", "duplicate collapses to the same set");
}

Check check_face_tables(bool decorated) {
  const char* name = decorated ? "face-tables-decorated" : "face-tables-evaluated";
  const auto& fixture_tables = decorated ? fixtures().face_decorated : fixtures().face_evaluated;
  for (const Parabolic& I : Parabolic::all()) {
    FaceCohomology fc = face_cohomology(I, Weight(), decorated);
    std::vector<Fixtures::FaceLineRow> got;
    for (const auto& [q, lines] : fc)
      for (const FaceLine& l : lines)
        got.push_back({q, weyl_name(l.w), decorated ? l.display : "", l.evaluated});
    const auto& want = fixture_tables.at(I.name());
    if (got.size() != want.size())
      return fail(name, I.name() + ": " + std::to_string(got.size()) + " lines, fixture " +
                            std::to_string(want.size()));
    for (size_t i = 0; i < got.size(); ++i) {
      if (got[i].q != want[i].q || got[i].w != want[i].w || got[i].dim != want[i].dim ||
          (decorated && got[i].display != want[i].display))
        return fail(name, I.name() + " line " + std::to_string(i) + ": (q=" +
                              std::to_string(got[i].q) + ", " + got[i].w + ", '" +
                              got[i].display + "', " + std::to_string(got[i].dim) +
                              ") != (q=" + std::to_string(want[i].q) + ", " + want[i].w + ", '" +
                              want[i].display + "', " + std::to_string(want[i].dim) + ")");
    }
  }
  return pass(name, "all seven faces");
}

std::map<std::pair<int, int>, long> e1_shape(const E1Page& page) {
  std::map<std::pair<int, int>, long> dims;
  for (const auto& [key, lines] : page.entries) {
    long d = 0;
    for (const E1Line& l : lines) d += l.dim;
    if (d) dims[key] = d;
  }
  return dims;
}

std::string shape_diff(const std::map<std::pair<int, int>, long>& got,
                       const std::map<std::pair<int, int>, long>& want) {
  std::ostringstream os;
  for (const auto& [key, d] : want) {
    auto it = got.find(key);
    if (it == got.end())
      os << "missing (" << key.first << "," << key.second << ")=" << d << "; ";
    else if (it->second != d)
      os << "(" << key.first << "," << key.second << "): " << it->second << " != " << d << "; ";
  }
  for (const auto& [key, d] : got)
    if (!want.count(key))
      os << "extra (" << key.first << "," << key.second << ")=" << d << "; ";
  return os.str();
}

Check check_e1_shape(const E1Page& page) {
  auto got = e1_shape(page);
  std::string diff = shape_diff(got, fixtures().e1_dims);
  if (!diff.empty()) return fail("e1-shape", diff);
  return pass("e1-shape", std::to_string(got.size()) + " nonzero positions");
}

Check check_d1_matrices(const Differentials& d) {
  for (const auto& [key, m] : d.blocks) {
    const Fixtures::D1Block* block = fixtures().d1_block(key.first, key.second);
    if (!block)
      return fail("d1-matrices", "no reference matrix for d1^{" + std::to_string(key.first) +
                                     "," + std::to_string(key.second) + "}");
    bool equal = m.rows == block->row_lines.size() && m.cols == block->col_lines.size();
    if (equal)
      for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
          if (m.at(r, c) != block->entries[r][c]) equal = false;
    if (!equal)
      return fail("d1-matrices", "the " + sign_policy_name(d.policy) +
                                     " matrix differs from the reference at d1^{" +
                                     std::to_string(key.first) + "," +
                                     std::to_string(key.second) + "}");
  }
  return pass("d1-matrices", std::to_string(d.blocks.size()) + " blocks bit-exact");
}

Check check_d1_support(const E1Page& page) {
  // The reference matrices and the combinatorial rule must carry the same
  // support, with unit entries.
  try {
    build_d1(page, SignPolicy::paper_fixture);
  } catch (const FixtureMismatch& e) {
    return fail("d1-support", e.what());
  }
  return pass("d1-support", "reference support equals the matching rule, all entries units");
}

Check check_d1_ranks(const Differentials& d) {
  for (const auto& [key, want] : fixtures().d1_ranks) {
    const Matrix* m = d.block(key.first, key.second);
    long got = m ? static_cast<long>(rank(*m)) : 0;
    if (got != want)
      return fail("d1-ranks", "rank d1^{" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + "} = " + std::to_string(got) +
                                  ", expected " + std::to_string(want));
  }
  return pass("d1-ranks", std::to_string(fixtures().d1_ranks.size()) + " ranks");
}

Check check_d_squared(const E1Page& page, const Differentials& d) {
  auto defects = d_squared_defect(page, d);
  if (!defects.empty()) {
    std::ostringstream os;
    for (const auto& def : defects)
      os << "q=" << def.q << " target " << def.target << " source " << def.source << " value "
         << def.value << "; ";
    return fail("d-squared", os.str());
  }
  return pass("d-squared", "all composites vanish");
}

Check check_sign_solver(const E1Page& page) {
  std::vector<SignSolution> sols;
  try {
    sols = solve_signs(page);
  } catch (const std::exception& e) {
    return fail("sign-solver", e.what());
  }
  if (sols.empty()) return fail("sign-solver", "no consistent sign assignment");
  for (const SignSolution& sol : sols) {
    for (const auto& [key, want] : fixtures().d1_ranks) {
      auto it = sol.rank_profile.find(key);
      long got = it == sol.rank_profile.end() ? 0 : static_cast<long>(it->second);
      if (got != want)
        return fail("sign-solver", "a solution's rank profile differs at d1^{" +
                                       std::to_string(key.first) + "," +
                                       std::to_string(key.second) + "}");
    }
  }
  return pass("sign-solver", std::to_string(sols.size()) +
                                 " solution class(es) up to gauge, one rank profile");
}

Check check_e2_shape(const E2Page& e2) {
  std::map<std::pair<int, int>, long> got;
  for (const auto& [key, entry] : e2.entries)
    if (entry.dim) got[key] = entry.dim;
  std::string diff = shape_diff(got, fixtures().e2_dims);
  if (!diff.empty()) return fail("e2-shape", diff);
  return pass("e2-shape", std::to_string(got.size()) + " nonzero positions");
}

Check check_d2_support(const E1Page& page, const E2Page& e2) {
  auto candidates = d2_support(page, e2);
  if (candidates.size() != 1 || candidates.front().q != 5)
    return fail("d2-support", "expected exactly one candidate at q = 5, found " +
                                  std::to_string(candidates.size()));
  if (!candidates.front().supported.empty())
    return fail("d2-support", "candidate at q = 5 has nonempty support");
  return pass("d2-support", "single candidate (0,5) -> (2,4), empty support");
}

Check check_e3_shape(const E3Page& e3) {
  std::map<std::pair<int, int>, long> got;
  for (const auto& [key, d] : e3.dims)
    if (d) got[key] = d;
  std::string diff = shape_diff(got, fixtures().e3_dims);
  if (!diff.empty()) return fail("e3-shape", diff);
  return pass("e3-shape", std::to_string(got.size()) + " nonzero positions");
}

Check check_boundary(const BoundaryCohomology& b) {
  const auto& want = fixtures().boundary_dims;
  for (int k = 0; k < 12; ++k)
    if (b.dims[k] != want[k]) {
      std::ostringstream os;
      os << "H^" << k << " = " << b.dims[k] << ", expected " << want[k];
      return fail("boundary-dimensions", os.str());
    }
  return pass("boundary-dimensions", "H^* = 1,0,1,0,1,2,2,1,0,1,0,1");
}

Check check_euler(const E1Page& page, const BoundaryCohomology& b) {
  long e1_sum = 0;
  for (const auto& [key, lines] : page.entries)
    for (const E1Line& l : lines)
      e1_sum += ((key.first + key.second) % 2 == 0 ? 1 : -1) * l.dim;
  long h_sum = 0;
  for (int k = 0; k < 12; ++k) h_sum += (k % 2 == 0 ? 1 : -1) * b.dims[k];
  if (e1_sum != 0 || h_sum != 0)
    return fail("euler-characteristic", "E1 sum " + std::to_string(e1_sum) + ", H sum " +
                                            std::to_string(h_sum));
  return pass("euler-characteristic", "both alternating sums vanish");
}

Check check_poincare(const BoundaryCohomology& b) {
  for (int k = 0; k <= 11; ++k)
    if (b.dims[k] != b.dims[11 - k])
      return fail("poincare-duality", "H^" + std::to_string(k) + " != H^" + std::to_string(11 - k));
  return pass("poincare-duality", "H^q == H^{11-q}");
}

}  // namespace

std::vector<CheckResult> run_all_checks(SignPolicy policy) {
  std::vector<CheckResult> out;
  out.push_back(check_weyl_table());
  out.push_back(check_kostant_sets());
  out.push_back(check_kostant_conditions());
  out.push_back(check_levi_coset_structure());
  out.push_back(check_epsilon_coherence());
  out.push_back(check_weight_tables_trivial());
  out.push_back(check_weight_tables_symbolic_spots());
  out.push_back(check_weight_tables_random_lambda());
  out.push_back(check_filtered_sets());
  out.push_back(check_filtered_sets_early_printing());
  out.push_back(check_face_tables(true));
  out.push_back(check_face_tables(false));

  E1Page page = assemble_E1();
  out.push_back(check_e1_shape(page));
  out.push_back(check_d1_support(page));

  Differentials d;
  try {
    d = build_d1(page, policy);
  } catch (const std::exception& e) {
    out.push_back(fail("d1-matrices", e.what()));
    return out;
  }
  out.push_back(check_d1_matrices(d));
  out.push_back(check_d1_ranks(d));
  out.push_back(check_d_squared(page, d));
  out.push_back(check_sign_solver(page));

  E2Page e2 = compute_E2(page, build_d1(page, SignPolicy::solved));
  out.push_back(check_e2_shape(e2));
  out.push_back(check_d2_support(page, e2));
  E3Page e3 = compute_E3(page, e2);
  out.push_back(check_e3_shape(e3));

  BoundaryCohomology b = boundary_cohomology(SignPolicy::solved);
  out.push_back(check_boundary(b));
  out.push_back(check_euler(page, b));
  out.push_back(check_poincare(b));
  return out;
}

}  // namespace sp6
