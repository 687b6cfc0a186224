#include "ghwlab/fq_linalg.hpp"

#include <stdexcept>

namespace ghwlab::fqla {

std::vector<int> rref_in_place(const Subfield& fq, Matrix& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows.front().size());
  std::size_t lead = 0;
  for (int col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    Vec& prow = rows[lead];
    FqIndex scale = fq.inv(prow[col]);
    for (auto& v : prow) v = fq.mul(v, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][col] == 0) continue;
      FqIndex factor = fq.neg(rows[i][col]);
      for (int c = col; c < ncols; ++c)
        if (prow[c] != 0) rows[i][c] = fq.add(rows[i][c], fq.mul(factor, prow[c]));
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

int rank(const Subfield& fq, Matrix rows) { return static_cast<int>(rref_in_place(fq, rows).size()); }

bool independent(const Subfield& fq, const Matrix& rows) {
  return rank(fq, rows) == static_cast<int>(rows.size());
}

Matrix nullspace(const Subfield& fq, Matrix rows, int ncols) {
  std::vector<int> pivots = rref_in_place(fq, rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = fq.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Subfield& fq, const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<int> pivots = rref_in_place(fq, aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != static_cast<int>(n) - 1))
    throw std::invalid_argument("inverse: matrix is singular");
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Vec combine(const Subfield& fq, std::span<const FqIndex> coeffs, const Matrix& rows) {
  if (rows.empty()) return {};
  Vec out(rows.front().size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t c = 0; c < out.size(); ++c)
      if (rows[i][c] != 0) out[c] = fq.add(out[c], fq.mul(coeffs[i], rows[i][c]));
  }
  return out;
}

Vec row_times(const Subfield& fq, const Vec& row, const Matrix& m) { return combine(fq, row, m); }

}  // namespace ghwlab::fqla
