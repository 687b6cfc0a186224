#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghwlab/finite_field.hpp"
#include "ghwlab/fq_linalg.hpp"

namespace ghwlab {

struct CodeInputs {
  std::uint32_t p = 0;
  int s = 1;
  int m = 1;
  std::int64_t e = 1;
  std::int64_t t = 1;
  std::int64_t a = 1;
  // Residues Delta_1..Delta_t mod e. Empty with e == t selects 0, 1, ..., t-1.
  std::vector<std::int64_t> deltas;
};

struct CheckResult {
  bool pass = false;
  std::string witness;  // why it failed, or a short confirmation
};

struct AssumptionReport {
  CheckResult divisibility;   // i)   e | Q-1, a != 0 mod Q-1, e >= t >= 1
  CheckResult deltas;         // ii)  distinct residues, gcd of differences with e is 1
  CheckResult minimal_polys;  // iii) deg h_{a_i} = m, pairwise distinct
  bool all() const { return divisibility.pass && deltas.pass && minimal_polys.pass; }
};

struct CodeParams {
  CodeInputs inputs;  // deltas resolved
  std::int64_t q = 0;
  std::int64_t Q = 0;
  std::vector<std::int64_t> exponents;  // a_i = a + (Q-1)/e * Delta_i mod Q-1; empty if e does not divide Q-1
  std::int64_t delta = 0;                // gcd(Q-1, a_1, ..., a_t)
  std::int64_t n = 0;                    // (Q-1)/delta
  std::int64_t N = 0;                    // gcd((Q-1)/(q-1), a e)
  std::int64_t k = 0;                    // t m
  AssumptionReport assumptions;

  bool constructible() const { return !exponents.empty(); }
};

// Throws std::invalid_argument when p is not prime, t > e, a degree or count is
// nonpositive, or deltas has the wrong length. Every other defect is reported.
CodeParams derive_params(const CodeInputs& in, const FieldCtx& ctx);
CodeParams derive_params(const CodeInputs& in);

struct HypothesisReport {
  bool assumptions = false;  // i) and ii) and iii)
  bool e_equals_t = false;
  bool N_in_range = false;   // 2 < N <= sqrt(Q)
  std::optional<int> j;      // smallest j with p^j == -1 mod N
  bool sm_over_2j_odd = false;
  bool m_even = false;
  bool irreducible = false;  // t == 1: the classical semiprimitive code
  std::vector<std::string> failures;

  bool all() const { return failures.empty(); }
};

HypothesisReport check_theorem_hypotheses(const CodeParams& params);

// F_Q^t viewed as F_q^{tm}. Coordinate j*m + l carries gamma^l in component j.
class MessageSpace {
 public:
  MessageSpace(const FieldCtx& ctx, int t);

  const FieldCtx& field_ctx() const { return *ctx_; }
  int t() const { return t_; }
  int m() const { return ctx_->m; }
  int dim() const { return t_ * ctx_->m; }

  fqla::Vec element_coords(Element x) const;
  Element element_at(std::span<const FqIndex> coords) const;

  fqla::Vec coords(std::span<const Element> xbar) const;
  std::vector<Element> vector_at(std::span<const FqIndex> coords) const;

  // G[i][k] = Tr_{Q->q}(gamma^i gamma^k); the bilinear form on one component.
  const fqla::Matrix& trace_gram() const { return gram_; }

 private:
  const FieldCtx* ctx_;
  int t_;
  std::vector<Element> basis_;  // gamma^0..gamma^{m-1}
  std::vector<Element> dual_;   // trace-dual basis
  fqla::Matrix gram_;
};

// Delsarte trace representation: c_i(x) = Tr_{Q->q}(sum_j x_j gamma^{a_j i}), 1 <= i <= n.
// Coordinate i is stored at position i - 1.
class TraceCode {
 public:
  TraceCode(const FieldCtx& ctx, CodeParams params);

  TraceCode(const TraceCode&) = delete;
  TraceCode& operator=(const TraceCode&) = delete;

  const CodeParams& params() const { return params_; }
  const FieldCtx& field_ctx() const { return ctx_; }
  const MessageSpace& space() const { return space_; }
  int length() const { return static_cast<int>(params_.n); }
  int dimension() const { return space_.dim(); }

  std::vector<Element> codeword(std::span<const Element> xbar) const;

  // Codewords of the coordinate basis of F_q^{tm}, as F_q indices; row k <-> basis vector k.
  const fqla::Matrix& basis_codewords() const { return basis_words_; }
  // Codeword of an F_q^{tm} coordinate vector, as F_q indices.
  fqla::Vec codeword_of_coords(const fqla::Vec& coords) const;

  // 0-based positions where some codeword spanned by `basis` is nonzero.
  // Throws std::invalid_argument when the basis is F_q-dependent.
  std::vector<int> support_union(const std::vector<std::vector<Element>>& basis) const;

  // Message of the cyclic shift: x_j -> x_j gamma^{a_j}.
  std::vector<Element> shift_message(std::span<const Element> xbar) const;

  // prod_i h_{a_i}(x), the parity-check polynomial.
  PolyOverFq parity_check_poly() const;

 private:
  FieldCtx ctx_;
  CodeParams params_;
  MessageSpace space_;
  std::vector<std::vector<Element>> points_;  // points_[j][i] = gamma^{a_j (i+1)}
  fqla::Matrix basis_words_;
};

}  // namespace ghwlab
