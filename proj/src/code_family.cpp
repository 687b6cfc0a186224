#include "ghwlab/code_family.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "ghwlab/arith.hpp"
#include "ghwlab/cyclotomy.hpp"

namespace ghwlab {

namespace {

void validate_inputs(const CodeInputs& in) {
  if (!arith::is_prime(in.p)) throw std::invalid_argument("p must be prime (got " + std::to_string(in.p) + ")");
  if (in.s < 1 || in.m < 1) throw std::invalid_argument("s and m must be positive");
  if (in.e < 1 || in.t < 1) throw std::invalid_argument("e and t must be positive");
  if (in.t > in.e) throw std::invalid_argument("t must not exceed e");
  if (!in.deltas.empty() && static_cast<std::int64_t>(in.deltas.size()) != in.t)
    throw std::invalid_argument("deltas must have length t = " + std::to_string(in.t));
  if (in.deltas.empty() && in.e != in.t)
    throw std::invalid_argument("deltas are required when e > t");
}

}  // namespace

CodeParams derive_params(const CodeInputs& in_raw, const FieldCtx& ctx) {
  validate_inputs(in_raw);
  if (ctx.p() != in_raw.p || ctx.s != in_raw.s || ctx.m != in_raw.m)
    throw std::invalid_argument("field context does not match (p, s, m)");

  CodeParams out;
  out.inputs = in_raw;
  CodeInputs& in = out.inputs;
  if (in.deltas.empty())
    for (std::int64_t i = 0; i < in.t; ++i) in.deltas.push_back(i);

  out.q = ctx.q();
  out.Q = ctx.Q();
  out.k = arith::checked_mul(in.t, in.m);
  const std::int64_t group = out.Q - 1;
  out.N = std::gcd(group / (out.q - 1), arith::checked_mul(in.a, in.e));

  auto& rep = out.assumptions;
  if (group % in.e != 0) {
    rep.divisibility = {false, "e = " + std::to_string(in.e) + " does not divide Q-1 = " + std::to_string(group)};
  } else if (arith::mod(in.a, group) == 0) {
    rep.divisibility = {false, "a = " + std::to_string(in.a) + " is 0 mod Q-1 = " + std::to_string(group)};
  } else {
    rep.divisibility = {true, "e | Q-1, a != 0 mod Q-1, e >= t >= 1"};
  }

  if (in.t == 1) {
    rep.deltas = {true, "t = 1: no condition"};
  } else {
    std::set<std::int64_t> seen;
    std::int64_t g = in.e;
    std::string dup;
    for (std::int64_t d : in.deltas) {
      if (!seen.insert(arith::mod(d, in.e)).second && dup.empty())
        dup = "Delta residues repeat mod e (" + std::to_string(arith::mod(d, in.e)) + ")";
      g = std::gcd(g, std::abs(d - in.deltas[0]));
    }
    if (!dup.empty())
      rep.deltas = {false, dup};
    else if (g != 1)
      rep.deltas = {false, "gcd(Delta_i - Delta_1, e) = " + std::to_string(g)};
    else
      rep.deltas = {true, "distinct residues, gcd of differences with e is 1"};
  }

  if (group % in.e != 0) {
    rep.minimal_polys = {false, "not evaluated: exponents a_i undefined"};
    return out;
  }

  const std::int64_t step = group / in.e;
  out.delta = group;
  for (std::int64_t d : in.deltas) {
    std::int64_t ai = arith::mod(arith::checked_add(in.a, arith::checked_mul(step, d)), group);
    out.exponents.push_back(ai);
    out.delta = std::gcd(out.delta, ai);
  }
  out.n = group / out.delta;

  // h_{a_i}: minimal polynomial of gamma^{-a_i} over F_q.
  std::vector<PolyOverFq> polys;
  rep.minimal_polys = {true, "deg h_{a_i} = m and pairwise distinct"};
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    PolyOverFq h = minimal_poly(ctx, ctx.field->exp(-out.exponents[i]));
    if (h.degree() != in.m) {
      rep.minimal_polys = {false, "deg h_{a_" + std::to_string(i + 1) + "} = " + std::to_string(h.degree()) +
                                      " != m (a_" + std::to_string(i + 1) + " = " +
                                      std::to_string(out.exponents[i]) + ")"};
      break;
    }
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (polys[j] == h) {
        rep.minimal_polys = {false, "h_{a_" + std::to_string(j + 1) + "} == h_{a_" + std::to_string(i + 1) + "}"};
        break;
      }
    }
    if (!rep.minimal_polys.pass) break;
    polys.push_back(std::move(h));
  }
  return out;
}

CodeParams derive_params(const CodeInputs& in) {
  validate_inputs(in);
  FieldCtx ctx = build_field(in.p, in.s, in.m);
  return derive_params(in, ctx);
}

HypothesisReport check_theorem_hypotheses(const CodeParams& params) {
  HypothesisReport r;
  const auto& in = params.inputs;
  r.assumptions = params.assumptions.divisibility.pass && params.assumptions.deltas.pass &&
                  params.assumptions.minimal_polys.pass;
  if (!params.assumptions.divisibility.pass) r.failures.push_back("assumption i): " + params.assumptions.divisibility.witness);
  if (!params.assumptions.deltas.pass) r.failures.push_back("assumption ii): " + params.assumptions.deltas.witness);
  if (!params.assumptions.minimal_polys.pass)
    r.failures.push_back("assumption iii): " + params.assumptions.minimal_polys.witness);

  r.e_equals_t = in.e == in.t;
  if (!r.e_equals_t) r.failures.push_back("e = t required (e = " + std::to_string(in.e) + ", t = " + std::to_string(in.t) + ")");

  r.N_in_range = params.N > 2 && params.N * params.N <= params.Q;
  if (!r.N_in_range) r.failures.push_back("2 < N <= sqrt(Q) required (N = " + std::to_string(params.N) + ")");

  if (params.N > 2) r.j = semiprimitive_j(in.p, static_cast<std::uint64_t>(params.N));
  if (!r.j) {
    r.failures.push_back("no j with p^j == -1 mod N");
  } else {
    const int sm = in.s * in.m;
    r.sm_over_2j_odd = sm % (2 * *r.j) == 0 && (sm / (2 * *r.j)) % 2 == 1;
    if (!r.sm_over_2j_odd)
      r.failures.push_back("sm/(2j) must be an odd integer (sm = " + std::to_string(sm) + ", j = " + std::to_string(*r.j) + ")");
  }

  r.m_even = in.m % 2 == 0;
  if (!r.m_even) r.failures.push_back("m must be even");
  r.irreducible = in.t == 1;
  return r;
}

MessageSpace::MessageSpace(const FieldCtx& ctx, int t) : ctx_(&ctx), t_(t) {
  if (t < 1) throw std::invalid_argument("MessageSpace: t must be positive");
  const Field& f = *ctx.field;
  const int m = ctx.m;
  for (int l = 0; l < m; ++l) basis_.push_back(f.exp(l));
  gram_.assign(m, fqla::Vec(m));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) gram_[i][k] = ctx.fq.index_of(trace(f, f.exp(i + k), ctx.s));
  fqla::Matrix inv = fqla::inverse(ctx.fq, gram_);
  for (int k = 0; k < m; ++k) {
    Element theta = 0;
    for (int l = 0; l < m; ++l) theta = f.add(theta, f.mul(ctx.fq.element(inv[k][l]), basis_[l]));
    dual_.push_back(theta);
  }
}

fqla::Vec MessageSpace::element_coords(Element x) const {
  const Field& f = *ctx_->field;
  fqla::Vec c(m());
  for (int k = 0; k < m(); ++k) c[k] = ctx_->fq.index_of(trace(f, f.mul(x, dual_[k]), ctx_->s));
  return c;
}

Element MessageSpace::element_at(std::span<const FqIndex> coords) const {
  const Field& f = *ctx_->field;
  Element x = 0;
  for (int l = 0; l < m(); ++l)
    if (coords[l] != 0) x = f.add(x, f.mul(ctx_->fq.element(coords[l]), basis_[l]));
  return x;
}

fqla::Vec MessageSpace::coords(std::span<const Element> xbar) const {
  if (static_cast<int>(xbar.size()) != t_) throw std::invalid_argument("message must have length t");
  fqla::Vec c;
  c.reserve(dim());
  for (Element x : xbar) {
    fqla::Vec part = element_coords(x);
    c.insert(c.end(), part.begin(), part.end());
  }
  return c;
}

std::vector<Element> MessageSpace::vector_at(std::span<const FqIndex> coords) const {
  if (static_cast<int>(coords.size()) != dim()) throw std::invalid_argument("coordinate vector must have length tm");
  std::vector<Element> x(t_);
  for (int j = 0; j < t_; ++j) x[j] = element_at(coords.subspan(static_cast<std::size_t>(j) * m(), m()));
  return x;
}

TraceCode::TraceCode(const FieldCtx& ctx, CodeParams params)
    : ctx_(ctx), params_(std::move(params)), space_(ctx_, static_cast<int>(params_.inputs.t)) {
  if (!params_.constructible()) throw std::invalid_argument("code exponents undefined: e must divide Q-1");
  const Field& f = *ctx_.field;
  for (std::int64_t aj : params_.exponents) {
    std::vector<Element> row(params_.n);
    for (std::int64_t i = 0; i < params_.n; ++i) row[i] = f.exp(arith::mulmod(aj, i + 1, params_.Q - 1));
    points_.push_back(std::move(row));
  }
  fqla::Vec unit(space_.dim(), 0);
  for (int k = 0; k < space_.dim(); ++k) {
    unit[k] = 1;
    auto word = codeword(space_.vector_at(unit));
    fqla::Vec idx(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) idx[i] = ctx_.fq.index_of(word[i]);
    basis_words_.push_back(std::move(idx));
    unit[k] = 0;
  }
}

std::vector<Element> TraceCode::codeword(std::span<const Element> xbar) const {
  if (static_cast<std::int64_t>(xbar.size()) != params_.inputs.t)
    throw std::invalid_argument("codeword: message must have length t");
  const Field& f = *ctx_.field;
  std::vector<Element> word(params_.n);
  for (std::int64_t i = 0; i < params_.n; ++i) {
    Element acc = 0;
    for (std::size_t j = 0; j < xbar.size(); ++j) acc = f.add(acc, f.mul(xbar[j], points_[j][i]));
    word[i] = trace(f, acc, ctx_.s);
  }
  return word;
}

fqla::Vec TraceCode::codeword_of_coords(const fqla::Vec& coords) const {
  return fqla::combine(ctx_.fq, coords, basis_words_);
}

std::vector<int> TraceCode::support_union(const std::vector<std::vector<Element>>& basis) const {
  fqla::Matrix rows;
  for (const auto& b : basis) rows.push_back(space_.coords(b));
  if (!fqla::independent(ctx_.fq, rows)) throw std::invalid_argument("support_union: basis is F_q-dependent");
  std::vector<bool> hit(params_.n, false);
  for (const auto& row : rows) {
    fqla::Vec w = codeword_of_coords(row);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) hit[i] = true;
  }
  std::vector<int> out;
  for (int i = 0; i < length(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

std::vector<Element> TraceCode::shift_message(std::span<const Element> xbar) const {
  std::vector<Element> out(xbar.begin(), xbar.end());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = ctx_.field->mul(out[j], ctx_.field->exp(params_.exponents[j]));
  return out;
}

PolyOverFq TraceCode::parity_check_poly() const {
  const Field& f = *ctx_.field;
  PolyOverFq acc{{1}};
  for (std::int64_t aj : params_.exponents) {
    PolyOverFq h = minimal_poly(ctx_, f.exp(-aj));
    std::vector<Element> next(acc.coeffs.size() + h.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < acc.coeffs.size(); ++i)
      for (std::size_t k = 0; k < h.coeffs.size(); ++k) next[i + k] = f.add(next[i + k], f.mul(acc.coeffs[i], h.coeffs[k]));
    acc.coeffs = std::move(next);
  }
  return acc;
}

}  // namespace ghwlab
