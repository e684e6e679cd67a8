#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sp6/linalg.hpp"

#include <random>

using namespace sp6;

namespace {

Matrix make(size_t rows, size_t cols, std::initializer_list<int> vals) {
  Matrix m(rows, cols);
  size_t i = 0;
  for (int v : vals) m.a[i++] = v;
  return m;
}

}  // namespace

TEST_CASE("rank and kernel of the reference maps") {
  SUBCASE("restriction map at the bottom degree") {
    Matrix m = make(3, 3, {1, -1, 0, 1, 0, -1, 0, 1, -1});
    CHECK(rank(m) == 2);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    // Kernel is the diagonal line a1 = a2 = a3.
    CHECK(ker[0][0] == ker[0][1]);
    CHECK(ker[0][1] == ker[0][2]);
    CHECK(ker[0][0] != 0);
  }
  SUBCASE("zero map") {
    Matrix z(3, 1);
    CHECK(rank(z) == 0);
    CHECK(kernel_basis(z).size() == 1);
  }
  SUBCASE("top-degree map with mixed signs") {
    Matrix m = make(3, 3, {1, 1, 0, 1, 0, 1, 0, -1, 1});
    CHECK(rank(m) == 2);
    CHECK(kernel_basis(m).size() == 1);
  }
}

TEST_CASE("rref properties") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<size_t> sz(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m(sz(rng), sz(rng));
    for (Rat& x : m.a) x = Rat(num(rng), den(rng));
    RrefResult r = rref(m);

    CHECK(r.rank == rank(transpose(m)));
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(r.rank + kernel_basis(m).size() == m.cols);
    for (const auto& v : kernel_basis(m)) {
      for (size_t row = 0; row < m.rows; ++row) {
        Rat sum = 0;
        for (size_t col = 0; col < m.cols; ++col) sum += m.at(row, col) * v[col];
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("exactness with growing denominators") {
  // Hilbert-style matrix: notoriously ill-conditioned in floating point,
  // trivially full-rank in exact arithmetic.
  Matrix h(5, 5);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) h.at(i, j) = Rat(1, static_cast<long>(i + j + 1));
  CHECK(rank(h) == 5);
  CHECK(kernel_basis(h).empty());
}

TEST_CASE("multiply") {
  Matrix a = make(2, 3, {1, 2, 3, 0, 1, 0});
  Matrix b = make(3, 2, {1, 0, 0, 1, -1, 0});
  Matrix c = multiply(a, b);
  CHECK(c.rows == 2);
  CHECK(c.cols == 2);
  CHECK(c.at(0, 0) == -2);
  CHECK(c.at(0, 1) == 2);
  CHECK(c.at(1, 0) == 0);
  CHECK(c.at(1, 1) == 1);
  CHECK_THROWS(multiply(a, a));
}
