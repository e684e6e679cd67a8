#pragma once

#include "sp6/rational.hpp"

#include <array>
#include <compare>
#include <sstream>
#include <string>

namespace sp6 {

// A weight written in the epsilon-basis. Every basis that appears anywhere
// (alpha-basis, Levi gamma-bases) is a view computed from these coordinates;
// nothing else is ever stored.
struct Weight {
  Rat c1, c2, c3;

  Weight() : c1(0), c2(0), c3(0) {}
  Weight(Rat a, Rat b, Rat c) : c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {}
  Weight(int a, int b, int c) : c1(a), c2(b), c3(c) {}

  const Rat& operator[](int i) const { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
  Rat& operator[](int i) { return i == 0 ? c1 : (i == 1 ? c2 : c3); }

  friend Weight operator+(const Weight& a, const Weight& b) {
    return {a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    return {a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
  }
  friend Weight operator-(const Weight& a) { return {-a.c1, -a.c2, -a.c3}; }
  friend Weight operator*(const Rat& s, const Weight& a) {
    return {s * a.c1, s * a.c2, s * a.c3};
  }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.c1 != b.c1) return a.c1 < b.c1;
    if (a.c2 != b.c2) return a.c2 < b.c2;
    return a.c3 < b.c3;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(" << c1 << ", " << c2 << ", " << c3 << ")";
    return os.str();
  }
};

inline Rat dot_product(const Weight& a, const Weight& b) {
  return a.c1 * b.c1 + a.c2 * b.c2 + a.c3 * b.c3;
}

}  // namespace sp6
