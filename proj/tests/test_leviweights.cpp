#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sp6/fixtures.hpp"
#include "sp6/leviweights.hpp"

#include <random>

using namespace sp6;

TEST_CASE("gamma bases") {
  auto g = gamma_basis(Parabolic({2}));
  CHECK(g[0] == Weight(Rat(1, 2), Rat(-1, 2), Rat(0)));
  CHECK(g[1] == Weight(1, 1, 0));
  CHECK(g[2] == Weight(0, 0, 1));

  auto g1 = gamma_basis(Parabolic({1}));
  CHECK(g1[0] == Weight(1, 0, 0));
  CHECK(g1[1] == Weight(0, 1, 0));
  CHECK(g1[2] == Weight(0, 1, 1));

  auto gb = gamma_basis(Parabolic({1, 2, 3}));
  CHECK(gb[0] == Weight(1, 0, 0));
  CHECK(gb[1] == Weight(0, 1, 0));
  CHECK(gb[2] == Weight(0, 0, 1));
}

TEST_CASE("coordinates") {
  LeviWeightCoords m = to_levi_coords(Parabolic({2, 3}), dot(*weyl_from_name("s2321"), Weight()));
  CHECK(m.m1 == 4);
  CHECK(m.m2 == -3);
  CHECK(m.m3 == 0);

  m = to_levi_coords(Parabolic({1}), dot(*weyl_from_name("s12321"), Weight()));
  CHECK(m.m1 == -6);
  CHECK(m.m2 == 0);
  CHECK(m.m3 == 0);

  m = to_levi_coords(Parabolic({1, 2, 3}), Weight());
  CHECK((m.m1 == 0 && m.m2 == 0 && m.m3 == 0));

  SUBCASE("round trip through every basis for every dot weight") {
    for (const Parabolic& I : Parabolic::all())
      for (const WeylElement& w : enumerate_weyl()) {
        Weight v = dot(w, Weight());
        CHECK(from_levi_coords(to_levi_coords(I, v)) == v);
      }
  }
}

TEST_CASE("symbolic tables") {
  SUBCASE("reference spot rows") {
    for (const auto& spot : fixtures().symbolic_spots) {
      CAPTURE(spot.parabolic);
      CAPTURE(spot.w);
      auto sym = symbolic_levi_coords(*Parabolic::parse(spot.parabolic), *weyl_from_name(spot.w));
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 4; ++k) CHECK(sym[i].c[k] == spot.coeff[i][k]);
    }
  }

  SUBCASE("table rows are indexed by the Kostant representatives") {
    auto rows = kostant_weight_table(Parabolic({1}));
    REQUIRE(rows.size() == 6);
    CHECK(weyl_name(rows.back().w) == "s12321");
    // Row e of the full-torus table: (n1+n2+n3, n2+n3, n3).
    auto pi_rows = kostant_weight_table(Parabolic({1, 2, 3}));
    CHECK(pi_rows.front().coeff[0].c == std::array<Rat, 4>{Rat(0), Rat(1), Rat(1), Rat(1)});
    CHECK(pi_rows.front().coeff[1].c == std::array<Rat, 4>{Rat(0), Rat(0), Rat(1), Rat(1)});
    CHECK(pi_rows.front().coeff[2].c == std::array<Rat, 4>{Rat(0), Rat(0), Rat(0), Rat(1)});
  }

  SUBCASE("symbolic evaluation agrees with the direct dot action") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 20);
    for (int trial = 0; trial < 100; ++trial) {
      Rat n1 = pick(rng), n2 = pick(rng), n3 = pick(rng);
      Weight lambda = lambda_from_n(n1, n2, n3);
      for (const Parabolic& I : Parabolic::all())
        for (const WeylElement& w : kostant_reps(I)) {
          auto sym = symbolic_levi_coords(I, w);
          LeviWeightCoords direct = to_levi_coords(I, dot(w, lambda));
          CHECK(sym[0].eval(n1, n2, n3) == direct.m1);
          CHECK(sym[1].eval(n1, n2, n3) == direct.m2);
          CHECK(sym[2].eval(n1, n2, n3) == direct.m3);
        }
    }
  }
}

TEST_CASE("trivial specialization matches the reference tables") {
  for (const Parabolic& I : Parabolic::all()) {
    const auto& want = fixtures().trivial_weights.at(I.name());
    auto reps = kostant_reps(I);
    REQUIRE(reps.size() == want.size());
    for (size_t i = 0; i < reps.size(); ++i) {
      CAPTURE(want[i].w);
      CHECK(weyl_name(reps[i]) == want[i].w);
      LeviWeightCoords m = to_levi_coords(I, dot(reps[i], Weight()));
      CHECK(m.m1 == want[i].m[0]);
      CHECK(m.m2 == want[i].m[1]);
      CHECK(m.m3 == want[i].m[2]);
    }
  }
}

TEST_CASE("affine printing") {
  Affine a;
  a.c = {Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(1)};
  CHECK(a.str() == "1/2 n1 + 1/2 n2 + n3 - 1/2");
  Affine zero;
  CHECK(zero.str() == "0");
}
