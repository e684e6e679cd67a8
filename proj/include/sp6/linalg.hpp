#pragma once

#include "sp6/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sp6 {

// Dense exact-rational matrix. Everything in this project is at most 9x9,
// so dense Gauss-Jordan is the whole story.
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major
  std::vector<std::string> row_labels, col_labels;  // optional line identities

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Rat& at(size_t r, size_t c) const { return a[r * cols + c]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

struct RrefResult {
  Matrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);
size_t image_dim(const Matrix& m);

// Basis of { v : M v = 0 }, one vector per free column.
std::vector<std::vector<Rat>> kernel_basis(const Matrix& m);

std::string matrix_str(const Matrix& m);

}  // namespace sp6
