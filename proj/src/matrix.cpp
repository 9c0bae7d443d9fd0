#include "nchs/matrix.hpp"

namespace nchs {

std::vector<int> rref(RatMatrix& a) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const Rat inv_lead = Rat(1) / a(row, col);
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv_lead;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rat factor = a(i, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

int rank(RatMatrix a) { return static_cast<int>(rref(a).size()); }

RatMatrix solve(RatMatrix a, RatMatrix rhs) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve: matrix not square");
  if (rhs.rows() != a.rows()) throw std::invalid_argument("solve: rhs shape mismatch");
  const int n = a.rows();
  RatMatrix aug(n, n + rhs.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < rhs.cols(); ++j) aug(i, n + j) = rhs(i, j);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    throw std::invalid_argument("solve: singular matrix");
  RatMatrix x(n, rhs.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rhs.cols(); ++j) x(i, j) = aug(i, n + j);
  return x;
}

RatMatrix inverse(const RatMatrix& a) { return solve(a, RatMatrix::identity(a.rows())); }

} // namespace nchs
