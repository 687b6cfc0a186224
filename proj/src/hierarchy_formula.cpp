#include "ghwlab/hierarchy_formula.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ghwlab/arith.hpp"
#include "ghwlab/errors.hpp"

namespace ghwlab {

using arith::checked_add;
using arith::checked_mul;
using arith::checked_sub;
using arith::exact_div;

SemiprimitiveSetting SemiprimitiveSetting::make(std::uint32_t p, int s, int m, std::int64_t N) {
  if (!arith::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (s < 1 || m < 1) throw std::invalid_argument("s and m must be positive");
  if (m % 2 != 0) throw HypothesisError("m must be even (m = " + std::to_string(m) + ")");
  if (N <= 2) throw HypothesisError("N must exceed 2 (N = " + std::to_string(N) + ")");
  if (p % N == 0 || std::gcd<std::int64_t>(p, N) != 1) throw HypothesisError("gcd(p, N) must be 1");
  auto j = semiprimitive_j(p, static_cast<std::uint64_t>(N));
  if (!j) throw HypothesisError("p is not semiprimitive modulo N = " + std::to_string(N));
  const int sm = s * m;
  if (sm % (2 * *j) != 0 || (sm / (2 * *j)) % 2 != 1)
    throw HypothesisError("sm/(2j) must be odd (sm = " + std::to_string(sm) + ", j = " + std::to_string(*j) + ")");
  SemiprimitiveSetting set;
  set.p_ = p;
  set.s_ = s;
  set.m_ = m;
  set.q_ = arith::ipow(p, s);
  set.N_ = N;
  set.j_ = *j;
  if (N > set.q_pow(m / 2)) throw HypothesisError("N must not exceed q^{m/2} = sqrt(Q)");
  return set;
}

SemiprimitiveSetting SemiprimitiveSetting::from(const CodeParams& params) {
  return make(params.inputs.p, params.inputs.s, params.inputs.m, params.N);
}

std::int64_t SemiprimitiveSetting::q_pow(int e) const { return arith::ipow(q_, e); }

std::int64_t f_max_intersection(int l, const SemiprimitiveSetting& set) {
  const int m = set.m();
  const int h = set.half();
  if (l < 0 || l > m) throw std::invalid_argument("f: l must lie in [0, m]");
  if (l <= h) return set.q_pow(l) - 1;
  std::int64_t num = checked_add(set.q_pow(l) - 1,
                                 checked_mul(set.N() - 1, checked_sub(set.q_pow(h), set.q_pow(l - h))));
  return exact_div(num, set.N(), "f(" + std::to_string(l) + ")");
}

int threshold_v(const SemiprimitiveSetting& set) {
  std::int64_t x = exact_div(set.q_pow(set.half()) + 1, set.N(), "(q^{m/2}+1)/N") - 1;
  if (x < 1) throw HypothesisError("(q^{m/2}+1)/N - 1 must be at least 1");
  int v = arith::floor_log(x, set.q());
  if (v > set.half() - 1) throw InternalError("threshold v exceeds m/2 - 1");
  return v;
}

std::vector<Element> achieving_subspace(const FieldCtx& ctx, int l, std::uint32_t i, const SemiprimitiveSetting& set) {
  if (ctx.p() != set.p() || ctx.s != set.s() || ctx.m != set.m())
    throw std::invalid_argument("achieving_subspace: field does not match the setting");
  if (l < 0 || l > set.m()) throw std::invalid_argument("achieving_subspace: l must lie in [0, m]");
  if (i >= set.N()) throw std::invalid_argument("achieving_subspace: class index out of range");
  const Field& f = *ctx.field;
  const int h = set.half();
  // omega generates F_{q^{m/2}}^*, so 1, omega, ..., omega^{m/2-1} is an F_q-basis of it.
  const std::int64_t omega_log = set.q_pow(h) + 1;
  std::vector<Element> basis;
  for (int k = 0; k < std::min(l, h); ++k) basis.push_back(f.exp(static_cast<std::int64_t>(i) + omega_log * k));
  if (l <= h) return basis;

  MessageSpace line(ctx, 1);
  fqla::Matrix rows;
  for (Element b : basis) rows.push_back(line.element_coords(b));
  for (std::int64_t k = 0; static_cast<int>(basis.size()) < l; ++k) {
    Element cand = f.exp(static_cast<std::int64_t>(i) + k);
    rows.push_back(line.element_coords(cand));
    if (fqla::independent(ctx.fq, rows))
      basis.push_back(cand);
    else
      rows.pop_back();
  }
  return basis;
}

SeqProfile::SeqProfile(int m, std::vector<int> entries) : m_(m), u_(std::move(entries)) {
  for (int x : u_)
    if (x < 0 || x > m) throw std::invalid_argument("profile entry " + std::to_string(x) + " outside [0, m]");
  std::sort(u_.begin(), u_.end(), std::greater<>());
}

int SeqProfile::sum() const {
  int s = 0;
  for (int x : u_) s += x;
  return s;
}

std::int64_t T_objective(const SeqProfile& u, const SemiprimitiveSetting& set) {
  if (u.m() != set.m()) throw std::invalid_argument("profile m does not match the setting");
  std::int64_t acc = 0;
  for (int x : u.entries()) acc = checked_add(acc, f_max_intersection(x, set));
  return acc;
}

std::string to_string(ProfileOp op) {
  switch (op) {
    case ProfileOp::S1: return "S1";
    case ProfileOp::S2: return "S2";
    case ProfileOp::S2Inv: return "S2inv";
    case ProfileOp::S3: return "S3";
    case ProfileOp::Merge: return "S";
  }
  return "?";
}

std::string op_violation(const SeqProfile& u, ProfileOp op, int i, int j) {
  const int m = u.m();
  if (m % 2 != 0) return "m must be even";
  const int h = m / 2;
  if (op == ProfileOp::Merge) {
    int halves = static_cast<int>(std::count(u.entries().begin(), u.entries().end(), h));
    return halves >= 2 ? "" : "S needs at least two entries equal to m/2";
  }
  if (i < 0 || j <= i || j >= u.size()) return "positions must satisfy 0 <= i < j < t";
  const int ui = u[i];
  const int uj = u[j];
  switch (op) {
    case ProfileOp::S1:
      if (!(h >= ui + 1)) return "S1 needs m/2 >= u_i + 1";
      if (!(uj - 1 >= 0)) return "S1 needs u_j - 1 >= 0";
      return "";
    case ProfileOp::S2:
      if (!(m >= ui + 1)) return "S2 needs m >= u_i + 1";
      if (!(ui >= h)) return "S2 needs u_i >= m/2";
      if (!(h >= uj)) return "S2 needs m/2 >= u_j";
      if (!(uj - 1 >= 0)) return "S2 needs u_j - 1 >= 0";
      return "";
    case ProfileOp::S3:
      if (!(m >= ui + 1)) return "S3 needs m >= u_i + 1";
      if (!(uj - 1 >= h)) return "S3 needs u_j - 1 >= m/2";
      return "";
    case ProfileOp::S2Inv:
      if (!(ui - 1 >= h)) return "S2inv needs u_i - 1 >= m/2";
      if (!(h >= uj + 1)) return "S2inv needs m/2 >= u_j + 1";
      return "";
    case ProfileOp::Merge: break;
  }
  return "";
}

SeqProfile apply_op(const SeqProfile& u, ProfileOp op, int i, int j) {
  std::string why = op_violation(u, op, i, j);
  if (!why.empty()) throw std::invalid_argument(why);
  std::vector<int> v = u.entries();
  if (op == ProfileOp::Merge) {
    const int h = u.m() / 2;
    auto first = std::find(v.begin(), v.end(), h);
    auto second = std::find(first + 1, v.end(), h);
    *first = u.m();
    *second = 0;
  } else if (op == ProfileOp::S2Inv) {
    --v[i];
    ++v[j];
  } else {
    ++v[i];
    --v[j];
  }
  return SeqProfile(u.m(), std::move(v));
}

RankSplit split_rank(int r, int t, int m) {
  if (r < 1 || r > t * m) throw std::invalid_argument("r must lie in [1, tm]");
  int rest = t * m - r;
  return {rest / m, rest % m};
}

std::vector<SeqProfile> all_profiles(int t, int m, int total) {
  std::vector<SeqProfile> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    int slots = t - static_cast<int>(cur.size());
    if (slots == 0) {
      if (left == 0) out.emplace_back(m, cur);
      return;
    }
    for (int x = std::min(cap, left); x >= 0; --x) {
      if (x * slots < left) break;
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  if (total >= 0 && total <= t * m) rec(total, m);
  return out;
}

ProfileOptimum optimize_profile(int r, int t, const SemiprimitiveSetting& set, OptimizeMode mode) {
  const int m = set.m();
  RankSplit sp = split_rank(r, t, m);
  if (mode == OptimizeMode::ClosedForm) {
    std::vector<int> u(t, 0);
    for (int k = 0; k < sp.r1; ++k) u[k] = m;
    u[sp.r1] = sp.r2;
    std::int64_t T = checked_add(checked_mul(sp.r1, exact_div(set.q_pow(m) - 1, set.N(), "(q^m-1)/N")),
                                 f_max_intersection(sp.r2, set));
    return {SeqProfile(m, std::move(u)), T};
  }
  ProfileOptimum best{SeqProfile(m, {}), -1};
  for (auto& u : all_profiles(t, m, t * m - r)) {
    std::int64_t T = T_objective(u, set);
    if (T > best.T) best = {u, T};
  }
  return best;
}

FormulaResult theorem1_dr(int r, const CodeParams& params) {
  HypothesisReport hyp = check_theorem_hypotheses(params);
  if (!hyp.all()) throw HypothesisError("closed form refused: " + hyp.failures.front());
  const auto set = SemiprimitiveSetting::from(params);
  const int t = static_cast<int>(params.inputs.t);
  const int m = params.inputs.m;
  const int h = m / 2;

  FormulaResult res;
  res.r = r;
  res.split = split_rank(r, t, m);
  const int r1 = res.split.r1;
  const int r2 = res.split.r2;
  res.high_branch = r2 >= h;

  const std::int64_t whole = checked_mul(t - r1, set.q_pow(m) - 1);
  std::int64_t deficit;
  if (!res.high_branch) {
    deficit = checked_mul(set.N(), set.q_pow(r2) - 1);
  } else {
    deficit = checked_add(set.q_pow(r2) - 1, checked_mul(set.N() - 1, set.q_pow(h) - set.q_pow(r2 - h)));
  }
  res.d_r = exact_div(checked_sub(whole, deficit), checked_mul(t, params.delta), "d_" + std::to_string(r));

  auto opt = optimize_profile(r, t, set, OptimizeMode::ClosedForm);
  res.u_star = opt.u;
  res.T_star = opt.T;
  return res;
}

std::complex<double> verify_expr1(const TraceCode& code, const std::vector<std::vector<Element>>& basis,
                                  const GaussPeriodTable& periods) {
  const CodeParams& p = code.params();
  if (p.inputs.e != p.inputs.t) throw HypothesisError("verify_expr1 requires e = t");
  if (static_cast<std::int64_t>(periods.N) != p.N) throw std::invalid_argument("period table order does not match N");
  fqla::Matrix rows;
  for (const auto& b : basis) rows.push_back(code.space().coords(b));
  if (!fqla::independent(code.field_ctx().fq, rows)) throw std::invalid_argument("verify_expr1: basis is F_q-dependent");

  const FieldCtx& ctx = code.field_ctx();
  const Field& f = *ctx.field;
  const auto& fq = ctx.fq;
  const int t = static_cast<int>(p.inputs.t);
  const std::int64_t step = (p.Q - 1) / p.inputs.e;
  const Element g = f.exp(p.inputs.a);
  std::vector<Element> beta(t);
  for (int j = 0; j < t; ++j) beta[j] = f.exp(checked_mul(step, p.inputs.deltas[j]));

  std::complex<double> acc = 0.0;
  std::vector<FqIndex> digit(basis.size(), 0);
  std::vector<Element> b(t);
  while (true) {
    std::fill(b.begin(), b.end(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (digit[i] == 0) continue;
      for (int j = 0; j < t; ++j) b[j] = f.add(b[j], f.mul(fq.element(digit[i]), basis[i][j]));
    }
    for (int hh = 1; hh <= t; ++hh) {
      Element inner = 0;
      for (int j = 0; j < t; ++j) inner = f.add(inner, f.mul(b[j], f.pow(beta[j], hh)));
      acc += periods.at(f, f.mul(f.pow(g, hh), inner));
    }
    std::size_t i = 0;
    for (; i < digit.size(); ++i) {
      if (++digit[i] < fq.order()) break;
      digit[i] = 0;
    }
    if (i == digit.size()) break;
  }
  const double scale = static_cast<double>(p.N) /
                       (static_cast<double>(t) * static_cast<double>(p.delta) *
                        std::pow(static_cast<double>(fq.order()), static_cast<double>(basis.size())));
  return acc * scale;
}

}  // namespace ghwlab
