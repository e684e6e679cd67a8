#include "sp6/leviweights.hpp"

#include <sstream>
#include <stdexcept>

namespace sp6 {

std::string Affine::str() const {
  static const char* names[4] = {"", "n1", "n2", "n3"};
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= 3; ++i) {
    if (c[i] == 0) continue;
    Rat v = c[i];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (v != 1) os << v.str() << " ";
    os << names[i];
    first = false;
  }
  if (c[0] != 0 || first) {
    Rat v = c[0];
    if (first) {
      os << v.str();
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
      os << v.str();
    }
  }
  return os.str();
}

std::array<Weight, 3> gamma_basis(const Parabolic& I) {
  const Rat h(1, 2);
  switch (I.mask()) {
    case 1:  // {a1}: e1, e2, e2+e3
      return {Weight(1, 0, 0), Weight(0, 1, 0), Weight(0, 1, 1)};
    case 2:  // {a2}: (e1-e2)/2, e1+e2, e3
      return {Weight(h, -h, 0), Weight(1, 1, 0), Weight(0, 0, 1)};
    case 4:  // {a3}: e1, e1+e2, e1+e2+e3
      return {Weight(1, 0, 0), Weight(1, 1, 0), Weight(1, 1, 1)};
    case 3:  // {a1,a2}: standard basis
      return {Weight(1, 0, 0), Weight(0, 1, 0), Weight(0, 0, 1)};
    case 5:  // {a1,a3}: e1, (e2-e3)/2, e2+e3
      return {Weight(1, 0, 0), Weight(0, h, -h), Weight(0, 1, 1)};
    case 6:  // {a2,a3}: (e1-e2)/2, e1+e2, e3
      return {Weight(h, -h, 0), Weight(1, 1, 0), Weight(0, 0, 1)};
    case 7:  // pi: standard basis
      return {Weight(1, 0, 0), Weight(0, 1, 0), Weight(0, 0, 1)};
    default:
      throw std::invalid_argument("empty parabolic index set");
  }
}

namespace {

// Exact 3x3 inverse of the column matrix [g1 g2 g3]; rows give the coordinate
// functionals.
struct BasisInverse {
  std::array<std::array<Rat, 3>, 3> row;
};

BasisInverse invert_basis(const std::array<Weight, 3>& g) {
  std::array<std::array<Rat, 6>, 3> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      m[r][c] = g[c][r];
      m[r][3 + c] = (r == c) ? 1 : 0;
    }
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = col; r < 3; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::logic_error("gamma basis is singular");
    std::swap(m[col], m[piv]);
    Rat d = m[col][col];
    for (int c = 0; c < 6; ++c) m[col][c] /= d;
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < 6; ++c) m[r][c] -= f * m[col][c];
    }
  }
  BasisInverse inv;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) inv.row[r][c] = m[r][3 + c];
  return inv;
}

const BasisInverse& basis_inverse(const Parabolic& I) {
  static std::array<std::optional<BasisInverse>, 8> cache;
  auto& slot = cache[I.mask()];
  if (!slot) slot = invert_basis(gamma_basis(I));
  return *slot;
}

}  // namespace

LeviWeightCoords to_levi_coords(const Parabolic& I, const Weight& v) {
  const BasisInverse& inv = basis_inverse(I);
  std::array<Rat, 3> m;
  for (int r = 0; r < 3; ++r)
    m[r] = inv.row[r][0] * v.c1 + inv.row[r][1] * v.c2 + inv.row[r][2] * v.c3;
  return LeviWeightCoords{I, m[0], m[1], m[2]};
}

Weight from_levi_coords(const LeviWeightCoords& m) {
  std::array<Weight, 3> g = gamma_basis(m.parabolic);
  return m.m1 * g[0] + m.m2 * g[1] + m.m3 * g[2];
}

Weight lambda_from_n(const Rat& n1, const Rat& n2, const Rat& n3) {
  const auto& gamma = root_system().fundamental;
  return n1 * gamma[0] + n2 * gamma[1] + n3 * gamma[2];
}

std::array<Affine, 3> symbolic_levi_coords(const Parabolic& I, const WeylElement& w) {
  // Epsilon-coordinates of lambda + rho as affine forms of (n1,n2,n3):
  //   (n1+n2+n3+3, n2+n3+2, n3+1).
  std::array<Affine, 3> lam_rho;
  lam_rho[0].c = {Rat(3), Rat(1), Rat(1), Rat(1)};
  lam_rho[1].c = {Rat(2), Rat(0), Rat(1), Rat(1)};
  lam_rho[2].c = {Rat(1), Rat(0), Rat(0), Rat(1)};

  // Apply w coordinate-wise, then subtract rho.
  std::array<Affine, 3> image;
  for (int j = 0; j < 3; ++j) image[w.perm[j]] = Rat(w.sign[j]) * lam_rho[j];
  const Weight& rho = root_system().rho;
  for (int j = 0; j < 3; ++j) image[j].c[0] -= rho[j];

  const BasisInverse& inv = basis_inverse(I);
  std::array<Affine, 3> out;
  for (int r = 0; r < 3; ++r)
    out[r] = inv.row[r][0] * image[0] + inv.row[r][1] * image[1] + inv.row[r][2] * image[2];
  return out;
}

std::vector<WeightTableRow> kostant_weight_table(const Parabolic& I) {
  std::vector<WeightTableRow> rows;
  for (const WeylElement& w : kostant_reps(I))
    rows.push_back({w, symbolic_levi_coords(I, w)});
  return rows;
}

}  // namespace sp6
