#pragma once

#include "sp6/parabolic.hpp"

#include <array>
#include <string>
#include <vector>

namespace sp6 {

// Coordinates of a weight in the fundamental-weight basis gamma^I of the Levi
// quotient of P_I.
struct LeviWeightCoords {
  Parabolic parabolic;
  Rat m1, m2, m3;

  const Rat& operator[](int i) const { return i == 0 ? m1 : (i == 1 ? m2 : m3); }
  friend bool operator==(const LeviWeightCoords&, const LeviWeightCoords&) = default;
};

// Affine expression a0 + a1*n1 + a2*n2 + a3*n3 with exact coefficients.
// The dot action is affine in the highest weight, so every entry of the
// general weight tables has this shape by construction.
struct Affine {
  std::array<Rat, 4> c{};  // constant, n1, n2, n3

  Rat eval(const Rat& n1, const Rat& n2, const Rat& n3) const {
    return c[0] + c[1] * n1 + c[2] * n2 + c[3] * n3;
  }
  std::string str() const;

  friend Affine operator+(const Affine& a, const Affine& b) {
    Affine r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Affine operator-(const Affine& a, const Affine& b) {
    Affine r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Affine operator-(const Affine& a) {
    Affine r;
    for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend Affine operator*(const Rat& s, const Affine& a) {
    Affine r;
    for (int i = 0; i < 4; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend bool operator==(const Affine&, const Affine&) = default;
};

// Fundamental-weight basis gamma^I of each Levi quotient, as epsilon-coordinates.
std::array<Weight, 3> gamma_basis(const Parabolic& I);

// Unique exact solution of v = m1*g1 + m2*g2 + m3*g3 in the gamma^I basis.
LeviWeightCoords to_levi_coords(const Parabolic& I, const Weight& v);
Weight from_levi_coords(const LeviWeightCoords& m);

// lambda = n1*gamma1 + n2*gamma2 + n3*gamma3 (ambient fundamental weights).
Weight lambda_from_n(const Rat& n1, const Rat& n2, const Rat& n3);

// gamma^I coordinates of dot(w, lambda) as affine functions of (n1,n2,n3).
std::array<Affine, 3> symbolic_levi_coords(const Parabolic& I, const WeylElement& w);

struct WeightTableRow {
  WeylElement w;
  std::array<Affine, 3> coeff;
};

// One row per Kostant representative, in display order.
std::vector<WeightTableRow> kostant_weight_table(const Parabolic& I);

}  // namespace sp6
