#include "ghwlab/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "ghwlab/arith.hpp"
#include "ghwlab/errors.hpp"

namespace ghwlab {

namespace {

constexpr std::int64_t kNoLog = -1;

// Multiply the packed polynomial `x` by the indeterminate modulo `modulus`.
Element times_x(Element x, std::uint32_t p, int degree, const std::vector<std::uint32_t>& modulus,
                const std::vector<std::uint32_t>& pw) {
  std::uint32_t top = x / pw[degree - 1];
  Element shifted = (x % pw[degree - 1]) * p;
  if (top == 0) return shifted;
  // x^degree == -sum_{i<degree} c_i x^i
  Element out = 0;
  for (int i = 0; i < degree; ++i) {
    std::uint32_t d = (shifted / pw[i]) % p;
    std::uint32_t red = static_cast<std::uint32_t>((static_cast<std::uint64_t>(top) * modulus[i]) % p);
    d = (d + p - red) % p;
    out += d * pw[i];
  }
  return out;
}

}  // namespace

Field::Field(std::uint32_t p, int degree) : p_(p), degree_(degree) {
  if (!arith::is_prime(p)) throw std::invalid_argument("p must be prime (got " + std::to_string(p) + ")");
  if (degree < 1) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t order = 1;
  for (int i = 0; i < degree; ++i) {
    order *= p;
    if (order > kFieldOrderCap)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(degree) +
                                  " exceeds the cap 2^20");
  }
  order_ = static_cast<std::uint32_t>(order);

  std::vector<std::uint32_t> pw(degree + 1, 1);
  for (int i = 1; i <= degree; ++i) pw[i] = pw[i - 1] * p;

  const std::uint32_t group = order_ - 1;
  exp_.assign(group, 0);

  // Candidates ordered by the packed lower coefficients c_0 + c_1 p + ...; c_0 != 0.
  bool found = false;
  std::vector<std::uint32_t> coeffs(degree + 1, 0);
  for (std::uint32_t code = 1; code < order_ && !found; ++code) {
    if (code % p == 0) continue;
    for (int i = 0; i < degree; ++i) coeffs[i] = (code / pw[i]) % p;
    coeffs[degree] = 1;
    // Residue class of x; for degree 1 the modulus x + c_0 makes x == -c_0.
    Element x = degree == 1 ? (p - coeffs[0]) % p : p;
    Element cur = 1;
    std::uint32_t k = 0;
    bool ok = true;
    do {
      if (k >= group) {
        ok = false;
        break;
      }
      exp_[k++] = cur;
      cur = degree == 1 ? static_cast<Element>((static_cast<std::uint64_t>(cur) * x) % p)
                        : times_x(cur, p, degree, coeffs, pw);
    } while (cur != 1);
    if (ok && k == group) {
      modulus_ = coeffs;
      found = true;
    }
  }
  if (!found) throw InternalError("no primitive polynomial found");

  log_.assign(order_, 0);
  for (std::uint32_t k = 0; k < group; ++k) log_[exp_[k]] = k;

  if (p_ != 2) {
    // zech_[k] = log(1 + gamma^k); adding one only touches the constant digit.
    zech_.assign(group, kNoLog);
    for (std::uint32_t k = 0; k < group; ++k) {
      Element e = exp_[k];
      std::uint32_t c0 = e % p;
      Element s = e - c0 + (c0 + 1) % p;
      zech_[k] = s == 0 ? kNoLog : static_cast<std::int64_t>(log_[s]);
    }
  }

  // Tr(sum c_i x^i) = sum c_i Tr(x^i).
  std::vector<std::uint32_t> mono_trace(degree);
  for (int i = 0; i < degree; ++i) mono_trace[i] = trace(*this, pw[i], 1);
  abs_trace_.assign(order_, 0);
  for (std::uint32_t x = 0; x < order_; ++x) {
    std::uint64_t acc = 0;
    for (int i = 0; i < degree; ++i) acc += static_cast<std::uint64_t>((x / pw[i]) % p) * mono_trace[i];
    abs_trace_[x] = static_cast<std::uint32_t>(acc % p);
  }
}

Element Field::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t group = group_order();
  std::uint32_t la = log_[a];
  std::uint32_t d = log_[b] >= la ? log_[b] - la : log_[b] + group - la;
  std::int64_t z = zech_[d];
  if (z == kNoLog) return 0;
  std::uint64_t s = la + static_cast<std::uint64_t>(z);
  if (s >= group) s -= group;
  return exp_[s];
}

Element Field::neg(Element a) const {
  if (p_ == 2 || a == 0) return a;
  std::uint64_t s = log_[a] + static_cast<std::uint64_t>(group_order() / 2);
  if (s >= group_order()) s -= group_order();
  return exp_[s];
}

Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : group_order() - l];
}

Element Field::pow(Element a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  std::int64_t g = group_order();
  std::int64_t e = static_cast<std::int64_t>(
      arith::mulmod(log_[a], static_cast<std::uint64_t>(arith::mod(k, g)), static_cast<std::uint64_t>(g)));
  return exp_[e];
}

Element Field::exp(std::int64_t k) const { return exp_[arith::mod(k, group_order())]; }

std::uint32_t Field::log(Element a) const {
  if (a == 0 || a >= order_) throw std::domain_error("discrete log of zero or out-of-range element");
  return log_[a];
}

Element Field::frobenius(Element x, int k) const {
  if (x == 0) return 0;
  std::uint64_t g = group_order();
  std::uint64_t e = arith::powmod(p_, static_cast<std::uint64_t>(k), g == 1 ? 1 : g);
  return exp_[arith::mulmod(log_[x], e, g)];
}

std::uint64_t Field::multiplicative_order(Element a) const {
  std::uint64_t g = group_order();
  return g / std::gcd<std::uint64_t>(g, log(a));
}

std::vector<std::uint32_t> Field::digits(Element x) const {
  std::vector<std::uint32_t> d(degree_);
  for (int i = 0; i < degree_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Element Field::from_digits(std::span<const std::uint32_t> digits) const {
  Element x = 0;
  Element pw = 1;
  for (std::uint32_t d : digits) {
    x += (d % p_) * pw;
    pw *= p_;
  }
  return x;
}

nlohmann::json to_json(const Field& field) {
  return {{"p", field.characteristic()},
          {"degree", field.degree()},
          {"modulus_coeffs", field.modulus_coeffs()},
          {"gamma", field.gamma()}};
}

Element trace(const Field& field, Element x, int sub_degree) {
  if (sub_degree < 1 || field.degree() % sub_degree != 0)
    throw std::invalid_argument("trace: sub_degree " + std::to_string(sub_degree) +
                                " does not divide " + std::to_string(field.degree()));
  Element acc = 0;
  for (int i = 0; i < field.degree() / sub_degree; ++i) acc = field.add(acc, field.frobenius(x, sub_degree * i));
  return acc;
}

Subfield::Subfield(std::shared_ptr<const Field> field, int degree) : field_(std::move(field)), degree_(degree) {
  if (degree < 1 || field_->degree() % degree != 0)
    throw std::invalid_argument("subfield degree " + std::to_string(degree) + " does not divide " +
                                std::to_string(field_->degree()));
  order_ = static_cast<std::uint32_t>(arith::ipow(field_->characteristic(), degree));
  const std::int64_t step = (field_->order() - 1) / (order_ - 1);
  elements_.reserve(order_);
  elements_.push_back(0);
  for (std::uint32_t k = 0; k + 1 < order_; ++k) elements_.push_back(field_->exp(step * k));
  index_of_.assign(field_->order(), -1);
  for (std::uint32_t i = 0; i < order_; ++i) index_of_[elements_[i]] = static_cast<std::int32_t>(i);
}

FqIndex Subfield::index_of(Element x) const {
  if (x >= index_of_.size() || index_of_[x] < 0)
    throw std::invalid_argument("element " + std::to_string(x) + " is not in F_" + std::to_string(order_));
  return static_cast<FqIndex>(index_of_[x]);
}

FqIndex Subfield::inv(FqIndex a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return a == 1 ? 1 : order_ - a + 1;
}

FieldCtx make_field_ctx(std::shared_ptr<const Field> field, int s) {
  if (s < 1 || field->degree() % s != 0)
    throw std::invalid_argument("s must divide the field degree");
  Subfield fq(field, s);
  int m = field->degree() / s;
  return FieldCtx{std::move(field), std::move(fq), s, m};
}

FieldCtx build_field(std::uint32_t p, int s, int m) {
  if (s < 1 || m < 1) throw std::invalid_argument("s and m must be positive");
  return make_field_ctx(std::make_shared<const Field>(p, s * m), s);
}

FieldCtx build_field(std::uint32_t p, int ext_degree) { return build_field(p, 1, ext_degree); }

Element PolyOverFq::eval(const Field& field, Element x) const {
  Element acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
  return acc;
}

PolyOverFq minimal_poly(const FieldCtx& ctx, Element x) {
  if (x == 0) throw std::invalid_argument("minimal_poly: x must be nonzero");
  const Field& f = *ctx.field;
  std::vector<Element> orbit{x};
  for (Element y = f.frobenius(x, ctx.s); y != x; y = f.frobenius(y, ctx.s)) orbit.push_back(y);

  PolyOverFq poly{{1}};
  for (Element root : orbit) {
    // poly *= (X - root)
    std::vector<Element> next(poly.coeffs.size() + 1, 0);
    Element minus_root = f.neg(root);
    for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], poly.coeffs[i]);
      next[i] = f.add(next[i], f.mul(poly.coeffs[i], minus_root));
    }
    poly.coeffs = std::move(next);
  }
  for (Element c : poly.coeffs)
    if (!ctx.fq.contains(c)) throw InternalError("minimal polynomial coefficient outside F_q");
  return poly;
}

}  // namespace ghwlab
