#include "sp6/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sp6 {

WeylElement weyl_identity() { return WeylElement{}; }

WeylElement simple_generator(int i) {
  WeylElement w;
  switch (i) {
    case 1: w.perm = {1, 0, 2}; break;
    case 2: w.perm = {0, 2, 1}; break;
    case 3: w.sign = {1, 1, -1}; break;
    default: throw std::invalid_argument("generator index must be 1, 2 or 3");
  }
  return w;
}

// (a*b)(e_j) = a(sign_b[j] e_{perm_b[j]}) = sign_b[j] sign_a[perm_b[j]] e_{perm_a[perm_b[j]]}
WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  for (int j = 0; j < 3; ++j) {
    c.perm[j] = a.perm[b.perm[j]];
    c.sign[j] = static_cast<int8_t>(b.sign[j] * a.sign[b.perm[j]]);
  }
  return c;
}

WeylElement inverse(const WeylElement& a) {
  WeylElement c;
  for (int j = 0; j < 3; ++j) {
    c.perm[a.perm[j]] = static_cast<uint8_t>(j);
    c.sign[a.perm[j]] = a.sign[j];
  }
  return c;
}

WeylElement from_word(std::span<const int> word) {
  WeylElement w;
  for (int i : word) w = multiply(w, simple_generator(i));
  return w;
}

WeylElement from_word(std::initializer_list<int> word) {
  return from_word(std::span<const int>(word.begin(), word.size()));
}

Weight act(const WeylElement& w, const Weight& v) {
  Weight r;
  for (int j = 0; j < 3; ++j) r[w.perm[j]] = w.sign[j] * v[j];
  return r;
}

int length(const WeylElement& w) {
  int n = 0;
  for (const Root& r : root_system().positive_roots) {
    if (classify_root(act(w, r.weight())) == RootClass::negative) ++n;
  }
  return n;
}

std::vector<int> canonical_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  int len = length(cur);
  while (len > 0) {
    for (int i = 1; i <= 3; ++i) {
      WeylElement next = multiply(simple_generator(i), cur);
      int nl = length(next);
      if (nl < len) {
        word.push_back(i);
        cur = next;
        len = nl;
        break;
      }
    }
  }
  return word;
}

std::string weyl_name(const WeylElement& w) {
  std::vector<int> word = canonical_word(w);
  if (word.empty()) return "e";
  std::string s = "s";
  for (int i : word) s += static_cast<char>('0' + i);
  return s;
}

std::optional<WeylElement> weyl_from_name(std::string_view name) {
  if (name == "e") return weyl_identity();
  if (name.size() < 2 || name[0] != 's') return std::nullopt;
  std::vector<int> word;
  for (char c : name.substr(1)) {
    if (c < '1' || c > '3') return std::nullopt;
    word.push_back(c - '0');
  }
  return from_word(word);
}

Weight dot(const WeylElement& w, const Weight& lambda) {
  const Weight& rho = root_system().rho;
  return act(w, lambda + rho) - rho;
}

std::array<int, 3> inverse_simple_image(const WeylElement& w, int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("simple root index must be 1, 2 or 3");
  Weight img = act(inverse(w), root_system().simple[i - 1]);
  std::array<Rat, 3> a = to_alpha_coords(img);
  std::array<int, 3> out{};
  for (int k = 0; k < 3; ++k) {
    if (!is_integer(a[k])) throw std::logic_error("root image has non-integer alpha-coordinates");
    out[k] = static_cast<int>(numerator(a[k]));
  }
  return out;
}

bool weyl_display_less(const WeylElement& a, const WeylElement& b) {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return canonical_word(a) < canonical_word(b);
}

const std::vector<WeylElement>& enumerate_weyl() {
  static const std::vector<WeylElement> all = [] {
    std::vector<WeylElement> v;
    std::array<uint8_t, 3> p = {0, 1, 2};
    do {
      for (int mask = 0; mask < 8; ++mask) {
        WeylElement w;
        w.perm = p;
        for (int j = 0; j < 3; ++j) w.sign[j] = (mask >> j) & 1 ? -1 : 1;
        v.push_back(w);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(v.begin(), v.end(), weyl_display_less);
    return v;
  }();
  return all;
}

}  // namespace sp6
