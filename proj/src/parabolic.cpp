#include "sp6/parabolic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sp6 {

Parabolic::Parabolic(std::initializer_list<int> indices) {
  for (int i : indices) {
    if (i < 1 || i > 3) throw std::invalid_argument("simple root index out of range");
    mask_ |= 1u << (i - 1);
  }
  if (mask_ == 0) throw std::invalid_argument("parabolic index set must be nonempty");
}

Parabolic Parabolic::from_mask(unsigned mask) {
  if (mask == 0 || mask > 7) throw std::invalid_argument("parabolic mask must be in 1..7");
  Parabolic p;
  p.mask_ = mask;
  return p;
}

std::optional<Parabolic> Parabolic::parse(std::string_view name) {
  if (name == "b") return Parabolic{1, 2, 3};
  if (name.size() < 2 || name.size() > 3 || name[0] != 'a') return std::nullopt;
  unsigned mask = 0;
  for (char c : name.substr(1)) {
    if (c < '1' || c > '3') return std::nullopt;
    unsigned bit = 1u << (c - '1');
    if (mask & bit) return std::nullopt;  // "a11" is not a name
    mask |= bit;
  }
  return from_mask(mask);
}

const std::vector<Parabolic>& Parabolic::all() {
  static const std::vector<Parabolic> v = [] {
    std::vector<Parabolic> out;
    for (unsigned m = 1; m <= 7; ++m) out.push_back(from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return v;
}

int Parabolic::rank() const { return __builtin_popcount(mask_); }

std::vector<int> Parabolic::indices() const {
  std::vector<int> v;
  for (int i = 1; i <= 3; ++i)
    if (contains(i)) v.push_back(i);
  return v;
}

std::vector<int> Parabolic::levi_simple_indices() const {
  std::vector<int> v;
  for (int i = 1; i <= 3; ++i)
    if (!contains(i)) v.push_back(i);
  return v;
}

std::string Parabolic::name() const {
  if (mask_ == 7) return "b";
  std::string s = "a";
  for (int i : indices()) s += static_cast<char>('0' + i);
  return s;
}

std::string levi_factor_name(LeviFactor::Kind k) {
  switch (k) {
    case LeviFactor::Kind::GL1: return "GL1";
    case LeviFactor::Kind::GL2: return "GL2";
    case LeviFactor::Kind::GL3: return "GL3";
    case LeviFactor::Kind::Sp2: return "Sp2";
    case LeviFactor::Kind::Sp4: return "Sp4";
  }
  return "?";
}

LeviDescriptor levi_data(const Parabolic& I) {
  using K = LeviFactor::Kind;
  LeviDescriptor d;
  d.levi_simple = I.levi_simple_indices();
  switch (I.mask()) {
    case 1:  // {a1}: GL1 x Sp4
      d.factors = {{K::GL1, {0}}, {K::Sp4, {1, 2}}};
      break;
    case 2:  // {a2}: GL2 x Sp2
      d.factors = {{K::GL2, {0, 1}}, {K::Sp2, {2}}};
      break;
    case 4:  // {a3}: GL3
      d.factors = {{K::GL3, {0, 1, 2}}};
      break;
    case 3:  // {a1,a2}: GL1 x GL1 x Sp2
      d.factors = {{K::GL1, {0}}, {K::GL1, {1}}, {K::Sp2, {2}}};
      break;
    case 5:  // {a1,a3}: GL1 x GL2
      d.factors = {{K::GL1, {0}}, {K::GL2, {1, 2}}};
      break;
    case 6:  // {a2,a3}: GL2 x GL1
      d.factors = {{K::GL2, {0, 1}}, {K::GL1, {2}}};
      break;
    case 7:  // pi: GL1 x GL1 x GL1
      d.factors = {{K::GL1, {0}}, {K::GL1, {1}}, {K::GL1, {2}}};
      break;
    default:
      throw std::invalid_argument("empty parabolic index set");
  }
  for (size_t i = 0; i < d.factors.size(); ++i) {
    if (i) d.display += " x ";
    d.display += levi_factor_name(d.factors[i].kind);
  }
  return d;
}

std::vector<WeylElement> weyl_levi(const Parabolic& I) {
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier{weyl_identity()};
  seen.insert(weyl_identity());
  std::vector<int> gens = I.levi_simple_indices();
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier) {
      for (int i : gens) {
        WeylElement u = multiply(w, simple_generator(i));
        if (seen.insert(u).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), weyl_display_less);
  return out;
}

std::vector<WeylElement> kostant_reps(const Parabolic& I) {
  const RootSystemC3& rs = root_system();
  std::vector<WeylElement> out;
  for (const WeylElement& w : enumerate_weyl()) {
    WeylElement winv = inverse(w);
    bool ok = true;
    for (int j : I.levi_simple_indices()) {
      if (classify_root(act(winv, rs.simple[j - 1])) != RootClass::positive) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;  // enumerate_weyl is already display-sorted
}

std::vector<WeylElement> kostant_reps_condition_b(const Parabolic& I) {
  const RootSystemC3& rs = root_system();
  // Phi_M+ = Phi+ cap span(Delta_M); Phi+(u_P) is its complement in Phi+.
  std::vector<Weight> phi_m_pos;
  for (const Root& r : rs.positive_roots) {
    // r lies in span(Delta_M) iff its alpha-coordinates vanish on I.
    std::array<Rat, 3> a = to_alpha_coords(r.weight());
    bool in_span = true;
    for (int i : I.indices())
      if (a[i - 1] != 0) in_span = false;
    if (in_span) phi_m_pos.push_back(r.weight());
  }
  std::vector<WeylElement> out;
  for (const WeylElement& w : enumerate_weyl()) {
    bool ok = true;
    for (const Root& r : rs.positive_roots) {
      Weight img = act(w, -r.weight());  // w(Phi-)
      if (classify_root(img) != RootClass::positive) continue;
      for (const Weight& m : phi_m_pos) {
        if (img == m) {  // lands in Phi_M+, so outside Phi+(u_P)
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

bool kostant_match(const Parabolic& I, const WeylElement& w,
                   const Parabolic& J, const WeylElement& w2) {
  if (!I.subset_of(J) || I == J)
    throw std::invalid_argument("kostant_match requires I strictly inside J");
  WeylElement s = multiply(w2, inverse(w));
  std::vector<WeylElement> levi = weyl_levi(I);
  return std::find(levi.begin(), levi.end(), s) != levi.end();
}

int epsilon_sign(const Parabolic& I, const Parabolic& J) {
  if (!I.subset_of(J) || J.rank() != I.rank() + 1)
    throw std::invalid_argument("epsilon_sign requires J = I plus one simple root");
  unsigned added = J.mask() & ~I.mask();
  int k = __builtin_ctz(added) + 1;
  int pos = 0;
  for (int i : J.indices()) {
    ++pos;
    if (i == k) break;
  }
  return pos % 2 == 0 ? 1 : -1;
}

}  // namespace sp6
