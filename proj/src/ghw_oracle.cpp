#include "ghwlab/ghw_oracle.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ghwlab/arith.hpp"
#include "ghwlab/errors.hpp"
#include "ghwlab/subspace_iter.hpp"

namespace ghwlab {

namespace {

struct PatternBest {
  std::int64_t value = -1;
  fqla::Matrix rows;
  std::uint64_t examined = 0;
};

// Maximizes `score` over r-dimensional subspaces of F_q^d. Each pivot pattern is
// an independent partition; ties keep the earliest subspace in enumeration order.
PatternBest sweep_max(int d, int r, std::uint32_t q, const OracleOptions& opts,
                      const std::function<std::int64_t(const fqla::Matrix&)>& score) {
  std::uint64_t total = gaussian_binomial(d, r, q);
  if (total > opts.budget) throw BudgetExceeded(total, opts.budget);

  auto patterns = pivot_patterns(d, r);
  std::vector<PatternBest> results(patterns.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t idx = cursor++; idx < patterns.size(); idx = cursor++) {
        PatternBest& best = results[idx];
        for (SubspaceIter it(d, patterns[idx], q); !it.done(); it.next()) {
          std::int64_t v = score(it.basis());
          ++best.examined;
          if (v > best.value) {
            best.value = v;
            best.rows = it.basis();
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      cursor = patterns.size();
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(patterns.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  PatternBest out;
  for (auto& res : results) {
    out.examined += res.examined;
    if (res.value > out.value) {
      out.value = res.value;
      out.rows = std::move(res.rows);
    }
  }
  return out;
}

fqla::Matrix to_coords(const TraceCode& code, const std::vector<std::vector<Element>>& basis) {
  fqla::Matrix rows;
  for (const auto& b : basis) rows.push_back(code.space().coords(b));
  if (!fqla::independent(code.field_ctx().fq, rows)) throw std::invalid_argument("basis is F_q-dependent");
  return rows;
}

GhwResult finish(const TraceCode& code, int r, PatternBest best) {
  GhwResult res;
  res.r = r;
  res.max_count = best.value;
  res.d_r = code.length() - best.value;
  res.subspaces_examined = best.examined;
  for (const auto& row : best.rows) res.witness_basis.push_back(code.space().vector_at(row));
  return res;
}

void check_rank(const TraceCode& code, int r) {
  if (r < 1 || r > code.dimension())
    throw std::invalid_argument("r must lie in [1, " + std::to_string(code.dimension()) + "]");
}

}  // namespace

Element DualContext::pair(const std::vector<Element>& x, const std::vector<Element>& y) const {
  const FieldCtx& ctx = space_->field_ctx();
  if (x.size() != y.size()) throw std::invalid_argument("pair: length mismatch");
  Element acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = ctx.field->add(acc, ctx.field->mul(x[i], y[i]));
  return trace(*ctx.field, acc, ctx.s);
}

fqla::Matrix DualContext::form_rows(const fqla::Matrix& coords) const {
  const auto& fq = space_->field_ctx().fq;
  const auto& gram = space_->trace_gram();
  const int m = space_->m();
  fqla::Matrix out;
  for (const auto& row : coords) {
    fqla::Vec v(space_->dim(), 0);
    for (int j = 0; j < space_->t(); ++j)
      for (int l = 0; l < m; ++l) {
        FqIndex c = row[j * m + l];
        if (c == 0) continue;
        for (int k = 0; k < m; ++k) v[j * m + k] = fq.add(v[j * m + k], fq.mul(c, gram[l][k]));
      }
    out.push_back(std::move(v));
  }
  return out;
}

fqla::Matrix DualContext::dual_coords(const fqla::Matrix& coords) const {
  return fqla::nullspace(space_->field_ctx().fq, form_rows(coords), space_->dim());
}

std::vector<std::vector<Element>> DualContext::dual_space(const std::vector<std::vector<Element>>& basis) const {
  fqla::Matrix rows;
  for (const auto& b : basis) rows.push_back(space_->coords(b));
  if (!fqla::independent(space_->field_ctx().fq, rows)) throw std::invalid_argument("dual_space: basis is F_q-dependent");
  std::vector<std::vector<Element>> out;
  for (const auto& v : dual_coords(rows)) out.push_back(space_->vector_at(v));
  return out;
}

std::int64_t count_common_zeros_coords(const TraceCode& code, const fqla::Matrix& rows) {
  const auto& fq = code.field_ctx().fq;
  const auto& words = code.basis_codewords();
  const int n = code.length();
  std::vector<bool> hit(n, false);
  fqla::Vec w(n);
  for (const auto& row : rows) {
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      for (int i = 0; i < n; ++i)
        if (words[k][i] != 0) w[i] = fq.add(w[i], fq.mul(row[k], words[k][i]));
    }
    for (int i = 0; i < n; ++i)
      if (w[i] != 0) hit[i] = true;
  }
  std::int64_t zeros = 0;
  for (bool h : hit) zeros += h ? 0 : 1;
  return zeros;
}

std::int64_t count_common_zeros(const TraceCode& code, const std::vector<std::vector<Element>>& basis) {
  return count_common_zeros_coords(code, to_coords(code, basis));
}

std::int64_t count_via_dual_coords(const TraceCode& code, const Cyclotomy& cyc, const fqla::Matrix& rows) {
  const CodeParams& p = code.params();
  if (p.inputs.e != p.inputs.t) throw HypothesisError("count_via_dual requires e = t");
  if (static_cast<std::int64_t>(cyc.N()) != p.N) throw std::invalid_argument("cyclotomy order does not match the code's N");
  const FieldCtx& ctx = code.field_ctx();
  const Field& f = *ctx.field;
  const auto& fq = ctx.fq;
  const auto& gram = code.space().trace_gram();
  const int m = ctx.m;
  const int t = static_cast<int>(p.inputs.t);

  std::int64_t hits = 0;
  for (int h = 0; h < t; ++h) {
    // U_h: y supported on component h with c_h^T G y_h = 0 for every row.
    fqla::Matrix restricted;
    for (const auto& row : rows) {
      fqla::Vec v(m, 0);
      for (int l = 0; l < m; ++l) {
        FqIndex c = row[h * m + l];
        if (c == 0) continue;
        for (int k = 0; k < m; ++k) v[k] = fq.add(v[k], fq.mul(c, gram[l][k]));
      }
      restricted.push_back(std::move(v));
    }
    fqla::Matrix u_basis = fqla::nullspace(fq, restricted, m);
    std::vector<Element> gens;
    for (const auto& v : u_basis) gens.push_back(code.space().element_at(v));

    // Walk every element of U_h.
    std::vector<FqIndex> digit(gens.size(), 0);
    while (true) {
      Element y = 0;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (digit[i] != 0) y = f.add(y, f.mul(fq.element(digit[i]), gens[i]));
      if (y != 0 && cyc.in_class(f.neg(y), 0)) ++hits;
      std::size_t i = 0;
      for (; i < digit.size(); ++i) {
        if (++digit[i] < fq.order()) break;
        digit[i] = 0;
      }
      if (i == digit.size()) break;
    }
  }
  return arith::exact_div(arith::checked_mul(p.N, hits), arith::checked_mul(t, p.delta),
                          "dual-expression count N * sum |U_h cap W_h| / (t delta)");
}

std::int64_t count_via_dual(const TraceCode& code, const Cyclotomy& cyc, const std::vector<std::vector<Element>>& basis) {
  return count_via_dual_coords(code, cyc, to_coords(code, basis));
}

GhwResult ghw_bruteforce(const TraceCode& code, int r, const OracleOptions& opts) {
  check_rank(code, r);
  auto best = sweep_max(code.dimension(), r, code.field_ctx().q(), opts,
                        [&](const fqla::Matrix& rows) { return count_common_zeros_coords(code, rows); });
  return finish(code, r, std::move(best));
}

GhwResult ghw_dual_sweep(const TraceCode& code, int r, const OracleOptions& opts) {
  check_rank(code, r);
  if (code.params().inputs.e != code.params().inputs.t) throw HypothesisError("dual expression requires e = t");
  Cyclotomy cyc(code.field_ctx().field, static_cast<std::uint32_t>(code.params().N));
  auto best = sweep_max(code.dimension(), r, code.field_ctx().q(), opts,
                        [&](const fqla::Matrix& rows) { return count_via_dual_coords(code, cyc, rows); });
  return finish(code, r, std::move(best));
}

}  // namespace ghwlab
