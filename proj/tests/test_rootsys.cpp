#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sp6/rootsys.hpp"

using namespace sp6;

TEST_CASE("canonical C3 data") {
  const RootSystemC3& rs = root_system();
  CHECK(rs.all_roots.size() == 18);
  CHECK(rs.positive_roots.size() == 9);
  CHECK(rs.rho == Weight(3, 2, 1));
  CHECK(rs.simple[0] == Weight(1, -1, 0));
  CHECK(rs.simple[1] == Weight(0, 1, -1));
  CHECK(rs.simple[2] == Weight(0, 0, 2));
  CHECK(rs.fundamental[1] == Weight(1, 1, 0));

  SUBCASE("Phi = Phi+ disjoint union -Phi+") {
    int pos = 0, neg = 0;
    for (const Root& r : rs.all_roots) (r.positive ? pos : neg)++;
    CHECK(pos == 9);
    CHECK(neg == 9);
    for (const Root& r : rs.positive_roots) {
      CHECK(classify_root(r.weight()) == RootClass::positive);
      CHECK(classify_root(-r.weight()) == RootClass::negative);
    }
  }

  SUBCASE("sum over Phi+ equals 2 rho") {
    Weight sum;
    for (const Root& r : rs.positive_roots) sum = sum + r.weight();
    CHECK(sum == Weight(6, 4, 2));
  }

  SUBCASE("fundamental weights dual to simple coroots") {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(dot_product(rs.fundamental[i], rs.simple_coroot[j]) == Rat(i == j ? 1 : 0));
  }
}

TEST_CASE("classify_root") {
  CHECK(classify_root(Weight(1, -1, 0)) == RootClass::positive);
  CHECK(classify_root(Weight(0, 0, -2)) == RootClass::negative);
  CHECK(classify_root(Weight(1, 0, 1)) == RootClass::positive);  // e1 + e3
  CHECK(classify_root(Weight(1, 1, 1)) == RootClass::not_a_root);
  CHECK(classify_root(Weight(2, 1, 0)) == RootClass::not_a_root);
  CHECK(classify_root(Weight(Rat(1, 2), Rat(-1, 2), Rat(0))) == RootClass::not_a_root);
}

TEST_CASE("simple reflections") {
  CHECK(simple_reflection(1, Weight(1, 0, 0)) == Weight(0, 1, 0));
  CHECK(simple_reflection(3, Weight(0, 0, 1)) == Weight(0, 0, -1));
  CHECK(simple_reflection(2, Weight(3, 2, 1)) == Weight(3, 1, 2));

  SUBCASE("involutive on all roots and rho") {
    for (int i = 1; i <= 3; ++i) {
      for (const Root& r : root_system().all_roots)
        CHECK(simple_reflection(i, simple_reflection(i, r.weight())) == r.weight());
      CHECK(simple_reflection(i, simple_reflection(i, root_system().rho)) == root_system().rho);
    }
  }

  SUBCASE("permutes Phi, fixes Phi+ minus alpha_i, negates alpha_i") {
    for (int i = 1; i <= 3; ++i) {
      const Weight& alpha = root_system().simple[i - 1];
      for (const Root& r : root_system().positive_roots) {
        Weight img = simple_reflection(i, r.weight());
        CHECK(classify_root(img) != RootClass::not_a_root);
        if (r.weight() == alpha)
          CHECK(img == -alpha);
        else
          CHECK(classify_root(img) == RootClass::positive);
      }
    }
  }
}

TEST_CASE("alpha coordinates round trip") {
  for (const Root& r : root_system().all_roots) {
    auto a = to_alpha_coords(r.weight());
    CHECK(from_alpha_coords(a) == r.weight());
    for (const Rat& c : a) CHECK(is_integer(c));
  }
}
