#pragma once

// Brute-force reference computations used only by the tests. They avoid the
// library's tables and enumerators wherever that is practical.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ghwlab/code_family.hpp"
#include "ghwlab/cyclotomy.hpp"
#include "ghwlab/fq_linalg.hpp"
#include "ghwlab/subspace_iter.hpp"

namespace ghwtest {

using ghwlab::Element;
using ghwlab::FqIndex;

// Schoolbook product of packed polynomials reduced by the field's modulus.
inline Element naive_mul(const ghwlab::Field& f, Element a, Element b) {
  const std::uint32_t p = f.characteristic();
  const int d = f.degree();
  auto da = f.digits(a);
  auto db = f.digits(b);
  std::vector<std::uint64_t> prod(2 * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
  const auto& mod = f.modulus_coeffs();
  for (int k = 2 * d - 1; k >= d; --k) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i <= d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * mod[i]) % p;
  }
  std::vector<std::uint32_t> out(prod.begin(), prod.begin() + d);
  return f.from_digits(out);
}

// Every vector of the F_q-span of `rows`, as coordinate vectors.
inline std::vector<ghwlab::fqla::Vec> span_of(const ghwlab::Subfield& fq, const ghwlab::fqla::Matrix& rows, int ncols) {
  std::vector<ghwlab::fqla::Vec> out;
  std::vector<FqIndex> c(rows.size(), 0);
  const std::uint32_t q = fq.order();
  while (true) {
    ghwlab::fqla::Vec v(ncols, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int k = 0; k < ncols; ++k) v[k] = fq.add(v[k], fq.mul(c[i], rows[i][k]));
    out.push_back(v);
    std::size_t pos = 0;
    while (pos < c.size() && ++c[pos] == q) c[pos++] = 0;
    if (pos == c.size()) break;
  }
  return out;
}

// sum_k c_k gamma^k.
inline Element element_from_coords(const ghwlab::FieldCtx& ctx, const ghwlab::fqla::Vec& c) {
  Element x = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    x = ctx.field->add(x, ctx.field->mul(ctx.fq.element(c[k]), ctx.field->exp(static_cast<std::int64_t>(k))));
  return x;
}

// max |L cap C_i| over l-dimensional F_q-subspaces L of F_Q.
inline std::int64_t exhaustive_f(const ghwlab::FieldCtx& ctx, const ghwlab::Cyclotomy& cyc, int l, std::uint32_t i) {
  if (l == 0) return 0;
  std::int64_t best = 0;
  for (ghwlab::SubspaceIter it(ctx.m, l, ctx.q()); !it.done(); it.next()) {
    std::int64_t hits = 0;
    for (const auto& v : span_of(ctx.fq, it.basis(), ctx.m))
      if (cyc.in_class(element_from_coords(ctx, v), i)) ++hits;
    best = std::max(best, hits);
  }
  return best;
}

inline std::int64_t count_in_class(const ghwlab::FieldCtx& ctx, const ghwlab::Cyclotomy& cyc,
                                   const std::vector<Element>& basis, std::uint32_t i) {
  std::vector<Element> span{0};
  for (Element b : basis) {
    std::vector<Element> next;
    for (Element x : span)
      for (Element c : ctx.fq.elements()) next.push_back(ctx.field->add(x, ctx.field->mul(c, b)));
    span = std::move(next);
  }
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  std::int64_t hits = 0;
  for (Element x : span)
    if (cyc.in_class(x, i)) ++hits;
  return hits;
}

// F_q-dimension of the span of F_Q elements.
inline int span_dimension(const ghwlab::FieldCtx& ctx, const std::vector<Element>& basis) {
  std::vector<Element> span{0};
  for (Element b : basis) {
    std::vector<Element> next;
    for (Element x : span)
      for (Element c : ctx.fq.elements()) next.push_back(ctx.field->add(x, ctx.field->mul(c, b)));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = std::move(next);
  }
  int dim = 0;
  for (std::size_t size = span.size(); size > 1; size /= ctx.q()) ++dim;
  return dim;
}

// Weight hierarchy from column subsets of the generator matrix:
// n - d_r is the largest |Z| such that the columns in Z have rank <= k - r.
inline std::vector<std::int64_t> ghw_by_column_subsets(const ghwlab::TraceCode& code) {
  const auto& G = code.basis_codewords();
  const int n = code.length();
  const int k = code.dimension();
  const auto& fq = code.field_ctx().fq;
  std::vector<int> best_zero(k + 1, -1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ghwlab::fqla::Matrix cols;
    for (int c = 0; c < n; ++c)
      if (mask >> c & 1u) {
        ghwlab::fqla::Vec col(k);
        for (int row = 0; row < k; ++row) col[row] = G[row][c];
        cols.push_back(col);
      }
    int rho = cols.empty() ? 0 : ghwlab::fqla::rank(fq, cols);
    int size = __builtin_popcount(mask);
    for (int r = 1; r <= k - rho; ++r) best_zero[r] = std::max(best_zero[r], size);
  }
  std::vector<std::int64_t> d;
  for (int r = 1; r <= k; ++r) d.push_back(n - best_zero[r]);
  return d;
}

}  // namespace ghwtest
