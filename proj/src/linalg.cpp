#include "sp6/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace sp6 {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
  Matrix c(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  c.row_labels = a.row_labels;
  c.col_labels = b.col_labels;
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  t.row_labels = m.col_labels;
  t.col_labels = m.row_labels;
  return t;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& r = res.reduced;
  size_t lead = 0;
  for (size_t col = 0; col < r.cols && lead < r.rows; ++col) {
    size_t piv = lead;
    while (piv < r.rows && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows) continue;
    for (size_t j = 0; j < r.cols; ++j) std::swap(r.a[lead * r.cols + j], r.a[piv * r.cols + j]);
    Rat d = r.at(lead, col);
    for (size_t j = 0; j < r.cols; ++j) r.at(lead, j) /= d;
    for (size_t i = 0; i < r.rows; ++i) {
      if (i == lead || r.at(i, col) == 0) continue;
      Rat f = r.at(i, col);
      for (size_t j = 0; j < r.cols; ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

size_t rank(const Matrix& m) { return rref(m).rank; }
size_t image_dim(const Matrix& m) { return rank(m); }

std::vector<std::vector<Rat>> kernel_basis(const Matrix& m) {
  RrefResult res = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : res.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols, Rat(0));
    v[free] = 1;
    for (size_t p = 0; p < res.pivot_cols.size(); ++p)
      v[res.pivot_cols[p]] = -res.reduced.at(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string matrix_str(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.rows; ++i) {
    if (i) os << "; ";
    for (size_t j = 0; j < m.cols; ++j) {
      if (j) os << ", ";
      os << m.at(i, j);
    }
  }
  os << "]";
  return os.str();
}

}  // namespace sp6
