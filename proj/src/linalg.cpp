#include "fada/linalg.hpp"

#include <stdexcept>

namespace fada {

namespace {

std::size_t weight(const Scalar& s) {
  if (s.is_table()) return s.table().num().terms().size();
  return s.rational().num().terms().size() + s.rational().den().terms().size();
}

// Row reduces A (augmented with extra columns) in place; returns pivot columns.
std::vector<std::size_t> reduce(ScalarMatrix& A, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < A.size(); ++c) {
    std::size_t best = A.size();
    for (std::size_t r = row; r < A.size(); ++r)
      if (!A[r][c].is_zero() && (best == A.size() || weight(A[r][c]) < weight(A[best][c]))) best = r;
    if (best == A.size()) continue;
    std::swap(A[row], A[best]);
    const Scalar inv = Scalar(1) / A[row][c];
    for (auto& e : A[row]) e = e * inv;
    for (std::size_t r = 0; r < A.size(); ++r) {
      if (r == row || A[r][c].is_zero()) continue;
      const Scalar f = A[r][c];
      for (std::size_t k = c; k < A[r].size(); ++k)
        if (!A[row][k].is_zero()) A[r][k] -= f * A[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Scalar>> solve(ScalarMatrix A, std::vector<Scalar> b) {
  if (A.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t cols = A.empty() ? 0 : A[0].size();
  for (std::size_t r = 0; r < A.size(); ++r) A[r].push_back(b[r]);
  const auto pivots = reduce(A, cols);
  for (std::size_t r = pivots.size(); r < A.size(); ++r)
    if (!A[r][cols].is_zero()) return std::nullopt;
  std::vector<Scalar> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = A[i][cols];
  return x;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& A) {
  const std::size_t n = A.size();
  ScalarMatrix M = A;
  for (std::size_t r = 0; r < n; ++r) {
    if (M[r].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    for (std::size_t c = 0; c < n; ++c) M[r].push_back(Scalar(r == c ? 1 : 0));
  }
  if (reduce(M, n).size() != n) return std::nullopt;
  ScalarMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) out[r].assign(M[r].begin() + static_cast<long>(n), M[r].end());
  return out;
}

int rank(ScalarMatrix A) { return static_cast<int>(reduce(A, A.empty() ? 0 : A[0].size()).size()); }

int rank(QMatrix A) {
  int rk = 0;
  const std::size_t cols = A.empty() ? 0 : A[0].size();
  for (std::size_t c = 0; c < cols && rk < static_cast<int>(A.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(rk);
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[rk], A[p]);
    for (std::size_t r = static_cast<std::size_t>(rk) + 1; r < A.size(); ++r) {
      if (A[r][c] == 0) continue;
      const mpq_class f = A[r][c] / A[rk][c];
      for (std::size_t k = c; k < cols; ++k) A[r][k] -= f * A[rk][k];
    }
    ++rk;
  }
  return rk;
}

mpq_class evaluate(const Scalar& s, std::span<const mpq_class> point) {
  if (s.is_table()) throw std::invalid_argument("numeric evaluation needs the hyperbolic backend");
  return s.rational().evaluate(point);
}

}  // namespace fada
