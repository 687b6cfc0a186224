#pragma once

#include <cstdint>
#include <vector>

#include "ghwlab/code_family.hpp"
#include "ghwlab/cyclotomy.hpp"
#include "ghwlab/fq_linalg.hpp"

namespace ghwlab {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;  // max subspaces enumerated per call
  unsigned jobs = 1;
};

struct GhwResult {
  int r = 0;
  std::int64_t d_r = 0;
  std::int64_t max_count = 0;  // N_r = n - d_r
  std::vector<std::vector<Element>> witness_basis;  // messages in F_Q^t
  std::uint64_t subspaces_examined = 0;
};

// The F_q-bilinear form <x, y> = Tr_{Q->q}(sum_i x_i y_i) on F_Q^t.
class DualContext {
 public:
  explicit DualContext(const MessageSpace& space) : space_(&space) {}

  // <x, y> as an element of F_q.
  Element pair(const std::vector<Element>& x, const std::vector<Element>& y) const;

  // Rows of C * G where C holds coordinate rows and G is the block-diagonal Gram matrix.
  fqla::Matrix form_rows(const fqla::Matrix& coords) const;
  fqla::Matrix dual_coords(const fqla::Matrix& coords) const;

  // Basis of H^perp; throws std::invalid_argument for a dependent basis.
  std::vector<std::vector<Element>> dual_space(const std::vector<std::vector<Element>>& basis) const;

 private:
  const MessageSpace* space_;
};

// n - |support|; throws std::invalid_argument for a dependent basis.
std::int64_t count_common_zeros(const TraceCode& code, const std::vector<std::vector<Element>>& basis);
std::int64_t count_common_zeros_coords(const TraceCode& code, const fqla::Matrix& rows);

// (N / (t delta)) sum_h |U_h cap W_h| with U_h = H^perp restricted to component h and
// W_h = {x : x_i = 0 for i != h, -x_h in C_0}. Requires e = t; `cyc` must use the code's N.
std::int64_t count_via_dual(const TraceCode& code, const Cyclotomy& cyc,
                            const std::vector<std::vector<Element>>& basis);
std::int64_t count_via_dual_coords(const TraceCode& code, const Cyclotomy& cyc, const fqla::Matrix& rows);

// Exhaustive d_r = n - max_H N(H) over all r-dimensional H. Throws BudgetExceeded.
GhwResult ghw_bruteforce(const TraceCode& code, int r, const OracleOptions& opts = {});

// n - max_H count_via_dual(H). The maxima coincide with ghw_bruteforce because the
// dual expression counts zeros of a relabeled subspace and relabeling permutes subspaces.
GhwResult ghw_dual_sweep(const TraceCode& code, int r, const OracleOptions& opts = {});

}  // namespace ghwlab
