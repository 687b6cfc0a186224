#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ghwlab/code_family.hpp"
#include "ghwlab/cyclotomy.hpp"

namespace ghwlab {

// (q = p^s, m, N) in the semiprimitive regime: m even, j the least exponent with
// p^j == -1 mod N, sm/(2j) odd, and 2 < N <= q^{m/2}. Purely arithmetic; no field
// tables are built, so settings beyond the field cap are fine.
class SemiprimitiveSetting {
 public:
  // Throws HypothesisError naming the first condition that fails.
  static SemiprimitiveSetting make(std::uint32_t p, int s, int m, std::int64_t N);
  static SemiprimitiveSetting from(const CodeParams& params);

  std::uint32_t p() const { return p_; }
  int s() const { return s_; }
  int m() const { return m_; }
  int half() const { return m_ / 2; }
  std::int64_t q() const { return q_; }
  std::int64_t N() const { return N_; }
  int j() const { return j_; }
  std::int64_t q_pow(int e) const;

 private:
  std::uint32_t p_ = 0;
  int s_ = 0;
  int m_ = 0;
  std::int64_t q_ = 0;
  std::int64_t N_ = 0;
  int j_ = 0;
};

// Largest |L cap C_i| over l-dimensional F_q-subspaces L of F_Q:
//   q^l - 1                                            for l <= m/2
//   ((q^l - 1) + (N - 1)(q^{m/2} - q^{l - m/2})) / N   for l >= m/2
std::int64_t f_max_intersection(int l, const SemiprimitiveSetting& set);

// The unique v with q^v <= (q^{m/2} + 1)/N - 1 < q^{v+1}.
int threshold_v(const SemiprimitiveSetting& set);

// Basis of an l-dimensional subspace meeting C_i in f(l) elements:
// inside gamma^i F_{q^{m/2}} when l <= m/2, otherwise gamma^i F_{q^{m/2}} extended
// by the first independent elements among gamma^i, gamma^{i+1}, ...
std::vector<Element> achieving_subspace(const FieldCtx& ctx, int l, std::uint32_t i, const SemiprimitiveSetting& set);

// u_1 >= u_2 >= ... >= u_t with 0 <= u_k <= m.
class SeqProfile {
 public:
  SeqProfile(int m, std::vector<int> entries);

  int m() const { return m_; }
  int size() const { return static_cast<int>(u_.size()); }
  int sum() const;
  int operator[](int k) const { return u_[k]; }
  const std::vector<int>& entries() const { return u_; }
  bool operator==(const SeqProfile&) const = default;

 private:
  int m_;
  std::vector<int> u_;
};

std::int64_t T_objective(const SeqProfile& u, const SemiprimitiveSetting& set);

// S1/S2/S3 raise u_i and lower u_j under their side conditions; S2Inv lowers u_i and
// raises u_j; Merge replaces two entries m/2 by m and 0. Positions are 0-based with i < j.
enum class ProfileOp { S1, S2, S2Inv, S3, Merge };

std::string to_string(ProfileOp op);

// Empty when applicable, otherwise the violated side condition.
std::string op_violation(const SeqProfile& u, ProfileOp op, int i, int j);
// Throws std::invalid_argument carrying op_violation's message. Result is re-sorted.
SeqProfile apply_op(const SeqProfile& u, ProfileOp op, int i = 0, int j = 1);

// tm - r = r1 m + r2 with 0 <= r1 <= t-1, 0 <= r2 <= m-1.
struct RankSplit {
  int r1 = 0;
  int r2 = 0;
};
RankSplit split_rank(int r, int t, int m);

enum class OptimizeMode { ClosedForm, Exhaustive };

struct ProfileOptimum {
  SeqProfile u;
  std::int64_t T = 0;
};

// Maximum of T over profiles of length t summing to tm - r.
ProfileOptimum optimize_profile(int r, int t, const SemiprimitiveSetting& set, OptimizeMode mode);

// Every nonincreasing profile of length t with entries in [0, m] summing to `total`.
std::vector<SeqProfile> all_profiles(int t, int m, int total);

struct FormulaResult {
  int r = 0;
  std::int64_t d_r = 0;
  RankSplit split;
  bool high_branch = false;  // r2 >= m/2
  SeqProfile u_star{2, {}};
  std::int64_t T_star = 0;
};

// Closed-form r-th generalized Hamming weight. Throws HypothesisError when the
// closed-form hypotheses fail and InternalError on a non-integral branch value.
FormulaResult theorem1_dr(int r, const CodeParams& params);

// N/(t delta q^r) sum_{b in H} sum_h eta(g^h sum_j b_j beta_j^h), beta_j = gamma^{(Q-1)/e Delta_j},
// g = gamma^a, with the period at zero equal to (Q-1)/N. Requires e = t.
std::complex<double> verify_expr1(const TraceCode& code, const std::vector<std::vector<Element>>& basis,
                                  const GaussPeriodTable& periods);

}  // namespace ghwlab
