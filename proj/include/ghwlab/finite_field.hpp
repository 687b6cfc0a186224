#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "json.hpp"

namespace ghwlab {

// Field elements are coefficient vectors over F_p packed as base-p integers:
// the element sum c_i x^i is stored as sum c_i p^i. Elements of F_p are 0..p-1.
using Element = std::uint32_t;

// Largest supported field order; every table is dense in Q.
inline constexpr std::uint32_t kFieldOrderCap = 1u << 20;

// F_{p^degree} defined by the first primitive polynomial in lexicographic
// coefficient order. The residue class of x is the primitive element gamma.
// Immutable after construction.
class Field {
 public:
  Field(std::uint32_t p, int degree);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t group_order() const { return order_ - 1; }

  Element gamma() const { return exp_[1 % exp_.size()]; }
  // Monic, low degree first; length degree + 1.
  const std::vector<std::uint32_t>& modulus_coeffs() const { return modulus_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= group_order()) s -= group_order();
    return exp_[s];
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::int64_t k) const;

  // gamma^k for any integer k.
  Element exp(std::int64_t k) const;
  // Discrete log base gamma; a must be nonzero.
  std::uint32_t log(Element a) const;

  // x^(p^k).
  Element frobenius(Element x, int k) const;
  std::uint64_t multiplicative_order(Element a) const;

  // Tr_{F_Q -> F_p}(x) from a table; equals trace(*this, x, 1).
  std::uint32_t absolute_trace(Element x) const { return abs_trace_[x]; }

  std::vector<std::uint32_t> digits(Element x) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

 private:
  std::uint32_t p_;
  int degree_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;
  std::vector<std::uint32_t> abs_trace_;
};

// {"p":..., "degree":..., "modulus_coeffs":[...], "gamma":...}
nlohmann::json to_json(const Field& field);

// Tr_{F_Q -> F_{p^sub_degree}}(x) = sum_{i < degree/sub_degree} x^(p^(sub_degree*i)).
Element trace(const Field& field, Element x, int sub_degree);

// Index into a subfield F_q of F_Q: 0 is zero, k >= 1 is omega^(k-1) where
// omega = gamma^((Q-1)/(q-1)) generates F_q^*. In particular 1 is one.
using FqIndex = std::uint32_t;

// The subfield of size p^degree, realized as the elements fixed by x -> x^q.
class Subfield {
 public:
  Subfield(std::shared_ptr<const Field> field, int degree);

  const Field& field() const { return *field_; }
  int degree() const { return degree_; }
  std::uint32_t order() const { return order_; }

  Element element(FqIndex i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  bool contains(Element x) const { return index_of_[x] >= 0; }
  // Throws std::invalid_argument when x is outside the subfield.
  FqIndex index_of(Element x) const;

  FqIndex add(FqIndex a, FqIndex b) const {
    return static_cast<FqIndex>(index_of_[field_->add(elements_[a], elements_[b])]);
  }
  FqIndex neg(FqIndex a) const {
    return static_cast<FqIndex>(index_of_[field_->neg(elements_[a])]);
  }
  FqIndex sub(FqIndex a, FqIndex b) const { return add(a, neg(b)); }
  FqIndex mul(FqIndex a, FqIndex b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = (a - 1) + (b - 1);
    if (s >= order_ - 1) s -= order_ - 1;
    return s + 1;
  }
  FqIndex inv(FqIndex a) const;

 private:
  std::shared_ptr<const Field> field_;
  int degree_;
  std::uint32_t order_;
  std::vector<Element> elements_;
  std::vector<std::int32_t> index_of_;
};

// F_Q = F_{q^m} with q = p^s, its primitive element, and the embedded F_q.
struct FieldCtx {
  std::shared_ptr<const Field> field;
  Subfield fq;
  int s;
  int m;

  std::uint32_t p() const { return field->characteristic(); }
  std::uint32_t q() const { return fq.order(); }
  std::uint32_t Q() const { return field->order(); }
};

// Throws std::invalid_argument for non-prime p, nonpositive degrees, or Q above the cap.
FieldCtx build_field(std::uint32_t p, int s, int m);
// Prime base field: s = 1, m = ext_degree.
FieldCtx build_field(std::uint32_t p, int ext_degree);
// Reuse a field already built for degree s*m.
FieldCtx make_field_ctx(std::shared_ptr<const Field> field, int s);

// Polynomial over F_q with coefficients stored as F_Q elements, low degree first.
struct PolyOverFq {
  std::vector<Element> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Element eval(const Field& field, Element x) const;
  bool operator==(const PolyOverFq&) const = default;
};

// Minimal polynomial of a nonzero x over F_q: the product of (X - y) over the
// q-conjugacy orbit of x. Coefficients are verified to lie in F_q.
PolyOverFq minimal_poly(const FieldCtx& ctx, Element x);

}  // namespace ghwlab
