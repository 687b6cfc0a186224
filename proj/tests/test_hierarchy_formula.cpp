#include <random>

#include "doctest.h"
#include "ghwlab/errors.hpp"
#include "ghwlab/ghw_oracle.hpp"
#include "ghwlab/hierarchy_formula.hpp"
#include "support.hpp"

using namespace ghwlab;

namespace {

CodeInputs example(std::int64_t a) { return {7, 1, 2, 2, 2, a, {0, 1}}; }

}  // namespace

TEST_CASE("f(l) values") {
  auto s74 = SemiprimitiveSetting::make(7, 1, 2, 4);
  CHECK(f_max_intersection(0, s74) == 0);
  CHECK(f_max_intersection(1, s74) == 6);
  CHECK(f_max_intersection(2, s74) == 12);

  auto s23 = SemiprimitiveSetting::make(2, 1, 6, 3);
  std::vector<std::int64_t> want{0, 1, 3, 7, 9, 13, 21};
  for (int l = 0; l <= 6; ++l) CHECK(f_max_intersection(l, s23) == want[l]);
  CHECK_THROWS_AS(f_max_intersection(7, s23), std::invalid_argument);
}

TEST_CASE("both branches of f agree at m/2") {
  for (auto [p, s, m, N] : std::vector<std::tuple<std::uint32_t, int, int, std::int64_t>>{
           {2, 1, 6, 3}, {7, 1, 2, 4}, {2, 3, 2, 3}, {3, 1, 6, 4}, {2, 1, 10, 3}, {5, 1, 2, 3}, {3, 1, 6, 7}, {2, 1, 10, 11}}) {
    auto set = SemiprimitiveSetting::make(p, s, m, N);
    int h = m / 2;
    std::int64_t high = ((set.q_pow(h) - 1) + (N - 1) * (set.q_pow(h) - set.q_pow(0))) / N;
    CHECK(f_max_intersection(h, set) == set.q_pow(h) - 1);
    CHECK(high == set.q_pow(h) - 1);
  }
}

TEST_CASE("semiprimitive settings reject bad parameters") {
  CHECK_THROWS_AS(SemiprimitiveSetting::make(2, 1, 4, 3), HypothesisError);  // sm/2j even
  CHECK_THROWS_AS(SemiprimitiveSetting::make(2, 1, 5, 3), HypothesisError);  // m odd
  CHECK_THROWS_AS(SemiprimitiveSetting::make(2, 1, 6, 7), HypothesisError);  // not semiprimitive
  CHECK_THROWS_AS(SemiprimitiveSetting::make(7, 1, 2, 2), HypothesisError);  // N too small
  CHECK_THROWS_AS(SemiprimitiveSetting::make(2, 1, 2, 9), HypothesisError);
}

TEST_CASE("threshold v") {
  // (8 + 1)/3 - 1 = 2, so v = 1.
  CHECK(threshold_v(SemiprimitiveSetting::make(2, 1, 6, 3)) == 1);
  // (7 + 1)/4 - 1 = 1, so v = 0.
  CHECK(threshold_v(SemiprimitiveSetting::make(7, 1, 2, 4)) == 0);
  auto set = SemiprimitiveSetting::make(2, 1, 10, 3);
  int v = threshold_v(set);
  std::int64_t x = (set.q_pow(5) + 1) / 3 - 1;
  CHECK(set.q_pow(v) <= x);
  CHECK(x < set.q_pow(v + 1));
}

TEST_CASE("f matches exhaustive subspace search") {
  for (auto [p, m, N] : std::vector<std::tuple<std::uint32_t, int, std::uint32_t>>{{2, 6, 3}, {7, 2, 4}}) {
    FieldCtx ctx = build_field(p, 1, m);
    Cyclotomy cyc(ctx.field, N);
    auto set = SemiprimitiveSetting::make(p, 1, m, N);
    for (int l = 0; l <= m; ++l) CHECK(ghwtest::exhaustive_f(ctx, cyc, l, 0) == f_max_intersection(l, set));
  }
}

TEST_CASE("achieving subspaces attain f") {
  FieldCtx ctx = build_field(2, 1, 6);
  Cyclotomy cyc(ctx.field, 3);
  auto set = SemiprimitiveSetting::make(2, 1, 6, 3);
  auto L = achieving_subspace(ctx, 4, 0, set);
  CHECK(L.size() == 4);
  CHECK(ghwtest::span_dimension(ctx, L) == 4);
  CHECK(ghwtest::count_in_class(ctx, cyc, L, 0) == f_max_intersection(4, set));

  auto half = achieving_subspace(ctx, 3, 0, set);
  CHECK(ghwtest::count_in_class(ctx, cyc, half, 0) == 7);
  auto whole = achieving_subspace(ctx, 6, 2, set);
  CHECK(ghwtest::span_dimension(ctx, whole) == 6);
  CHECK(ghwtest::count_in_class(ctx, cyc, whole, 2) == 21);
}

TEST_CASE("T objective") {
  auto set = SemiprimitiveSetting::make(7, 1, 2, 4);
  CHECK(T_objective(SeqProfile(2, {0, 0}), set) == 0);
  CHECK(T_objective(SeqProfile(2, {2, 1}), set) == 18);
  CHECK(T_objective(SeqProfile(2, {2, 2}), set) == 24);
  CHECK(T_objective(SeqProfile(2, {1, 2}), set) == 18);
}

TEST_CASE("profiles stay sorted and validated") {
  SeqProfile u(4, {1, 3, 2});
  CHECK(u.entries() == std::vector<int>{3, 2, 1});
  CHECK(u.sum() == 6);
  CHECK_THROWS_AS(SeqProfile(4, {5, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SeqProfile(4, {-1, 0}), std::invalid_argument);
}

TEST_CASE("rewrite operations") {
  CHECK(apply_op(SeqProfile(4, {2, 2}), ProfileOp::Merge).entries() == std::vector<int>{4, 0});
  CHECK(apply_op(SeqProfile(4, {1, 1}), ProfileOp::S1, 0, 1).entries() == std::vector<int>{2, 0});
  CHECK(apply_op(SeqProfile(6, {4, 2}), ProfileOp::S2, 0, 1).entries() == std::vector<int>{5, 1});
  CHECK(apply_op(SeqProfile(6, {5, 5}), ProfileOp::S3, 0, 1).entries() == std::vector<int>{6, 4});
  CHECK(apply_op(SeqProfile(6, {5, 1}), ProfileOp::S2Inv, 0, 1).entries() == std::vector<int>{4, 2});

  CHECK(op_violation(SeqProfile(4, {2, 1}), ProfileOp::S1, 0, 1) == "S1 needs m/2 >= u_i + 1");
  CHECK(op_violation(SeqProfile(4, {2, 1}), ProfileOp::Merge, 0, 1) == "S needs at least two entries equal to m/2");
  CHECK(op_violation(SeqProfile(4, {2, 1}), ProfileOp::S1, 1, 0) != "");
  CHECK_THROWS_AS(apply_op(SeqProfile(6, {6, 2}), ProfileOp::S2, 0, 1), std::invalid_argument);
  CHECK(to_string(ProfileOp::Merge) == "S");
}

TEST_CASE("S2 followed by its inverse is the identity") {
  for (int m : {2, 4, 6})
    for (int t = 2; t <= 4; ++t)
      for (int total = 0; total <= t * m; ++total)
        for (const auto& u : all_profiles(t, m, total))
          for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) {
              if (!op_violation(u, ProfileOp::S2, i, j).empty()) continue;
              SeqProfile w = apply_op(u, ProfileOp::S2, i, j);
              // The raised and lowered entries keep their order after sorting.
              auto pos_i = std::find(w.entries().begin(), w.entries().end(), u[i] + 1) - w.entries().begin();
              auto pos_j = std::find(w.entries().rbegin(), w.entries().rend(), u[j] - 1) - w.entries().rbegin();
              pos_j = t - 1 - pos_j;
              CHECK(apply_op(w, ProfileOp::S2Inv, static_cast<int>(pos_i), static_cast<int>(pos_j)) == u);
            }
}

TEST_CASE("rewrite operations move T in the predicted direction") {
  for (auto [p, s, m, N] : std::vector<std::tuple<std::uint32_t, int, int, std::int64_t>>{
           {2, 1, 6, 3}, {7, 1, 2, 4}, {2, 3, 2, 3}, {3, 1, 6, 4}, {5, 1, 2, 3}, {3, 1, 6, 7},
           {11, 1, 2, 4}, {11, 1, 2, 6}, {3, 1, 4, 5}, {7, 1, 4, 5}, {5, 1, 4, 13}, {2, 3, 4, 5}}) {
    auto set = SemiprimitiveSetting::make(p, s, m, N);
    const int v = threshold_v(set);
    const int h = m / 2;
    for (int t = 1; t <= 4; ++t)
      for (int total = 0; total <= t * m; ++total)
        for (const auto& u : all_profiles(t, m, total)) {
          const std::int64_t T = T_objective(u, set);
          if (op_violation(u, ProfileOp::Merge, 0, 1).empty())
            CHECK(T_objective(apply_op(u, ProfileOp::Merge), set) >= T);
          for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) {
              const int gap = u[i] - u[j];
              for (ProfileOp op : {ProfileOp::S1, ProfileOp::S2, ProfileOp::S2Inv, ProfileOp::S3}) {
                if (!op_violation(u, op, i, j).empty()) continue;
                const std::int64_t after = T_objective(apply_op(u, op, i, j), set);
                if (op == ProfileOp::S1 || op == ProfileOp::S3) CHECK(after >= T);
                if (op == ProfileOp::S2 && gap >= h - v - 1) CHECK(after >= T);
                if (op == ProfileOp::S2 && gap <= h - v - 2) CHECK(after <= T);
                if (op == ProfileOp::S2Inv && gap <= h - v - 2) CHECK(after >= T);
              }
            }
        }
  }
}

TEST_CASE("rank split") {
  CHECK(split_rank(1, 2, 2).r1 == 1);
  CHECK(split_rank(1, 2, 2).r2 == 1);
  CHECK(split_rank(4, 2, 2).r1 == 0);
  CHECK(split_rank(4, 2, 2).r2 == 0);
  CHECK_THROWS(split_rank(0, 2, 2));
  CHECK_THROWS(split_rank(5, 2, 2));
}

TEST_CASE("closed-form and exhaustive optimizers agree") {
  auto one = optimize_profile(1, 2, SemiprimitiveSetting::make(7, 1, 2, 4), OptimizeMode::Exhaustive);
  CHECK(one.u.entries() == std::vector<int>{2, 1});
  CHECK(one.T == 18);
  auto irr = optimize_profile(2, 1, SemiprimitiveSetting::make(2, 1, 6, 3), OptimizeMode::ClosedForm);
  CHECK(irr.u.entries() == std::vector<int>{4});
  CHECK(irr.T == 9);
  auto last = optimize_profile(4, 2, SemiprimitiveSetting::make(7, 1, 2, 4), OptimizeMode::ClosedForm);
  CHECK(last.T == 0);

  for (auto [p, s, m, N] : std::vector<std::tuple<std::uint32_t, int, int, std::int64_t>>{
           {2, 1, 6, 3}, {7, 1, 2, 4}, {2, 3, 2, 3}, {3, 1, 6, 4}, {3, 1, 4, 5}, {3, 1, 6, 7}, {2, 1, 10, 3}})
    for (int t = 1; t <= 4; ++t) {
      auto set = SemiprimitiveSetting::make(p, s, m, N);
      for (int r = 1; r <= t * m; ++r)
        CHECK(optimize_profile(r, t, set, OptimizeMode::ClosedForm).T ==
              optimize_profile(r, t, set, OptimizeMode::Exhaustive).T);
    }
}

TEST_CASE("the winning profile beats its half-shifted neighbour") {
  for (auto [p, s, m, N] : std::vector<std::tuple<std::uint32_t, int, int, std::int64_t>>{
           {2, 1, 6, 3}, {7, 1, 2, 4}, {2, 3, 2, 3}, {3, 1, 6, 4}, {3, 1, 4, 5}, {3, 1, 6, 7}, {2, 1, 10, 3}})
    for (int t = 2; t <= 4; ++t) {
      auto set = SemiprimitiveSetting::make(p, s, m, N);
      const int h = m / 2;
      for (int r1 = 1; r1 <= t - 1; ++r1)
        for (int r2 = 0; r2 < h; ++r2) {
          std::vector<int> a(r1, m), b(r1 - 1, m);
          a.push_back(r2);
          b.push_back(r2 + h);
          b.push_back(h);
          a.resize(t, 0);
          b.resize(t, 0);
          CHECK(T_objective(SeqProfile(m, a), set) >= T_objective(SeqProfile(m, b), set));
        }
    }
}

TEST_CASE("closed-form hierarchies") {
  auto dr = [](const CodeInputs& in) {
    CodeParams params = derive_params(in);
    std::vector<std::int64_t> out;
    for (int r = 1; r <= params.k; ++r) out.push_back(theorem1_dr(r, params).d_r);
    return out;
  };
  CHECK(dr(example(6)) == std::vector<std::int64_t>{2, 4, 6, 8});
  CHECK(dr(example(2)) == std::vector<std::int64_t>{6, 12, 18, 24});
  CHECK(dr({2, 1, 6, 1, 1, 3, {0}}) == std::vector<std::int64_t>{8, 12, 14, 18, 20, 21});

  FormulaResult fr = theorem1_dr(1, derive_params(example(6)));
  CHECK(fr.split.r1 == 1);
  CHECK(fr.split.r2 == 1);
  CHECK(fr.high_branch);
  CHECK(fr.T_star == 18);
  CHECK_THROWS_AS(theorem1_dr(1, derive_params({2, 1, 4, 1, 1, 3, {0}})), HypothesisError);
  CHECK_THROWS_AS(theorem1_dr(1, derive_params({2, 1, 2, 1, 1, 1, {0}})), HypothesisError);
}

TEST_CASE("closed form matches exhaustive search on small codes") {
  for (const CodeInputs& in : std::vector<CodeInputs>{example(6), example(2), {2, 1, 6, 1, 1, 3, {0}},
                                                      {2, 1, 6, 1, 1, 9, {0}}, {2, 1, 6, 1, 1, 1, {0}}, {2, 1, 2, 1, 1, 1, {0}}}) {
    FieldCtx ctx = build_field(in.p, in.s, in.m);
    CodeParams params = derive_params(in, ctx);
    if (!check_theorem_hypotheses(params).all()) continue;
    TraceCode code(ctx, params);
    for (int r = 1; r <= code.dimension(); ++r) CHECK(theorem1_dr(r, params).d_r == ghw_bruteforce(code, r).d_r);
  }
}

TEST_CASE("the Gauss-period expression reproduces zero counts") {
  for (std::int64_t a : {6, 2}) {
    FieldCtx ctx = build_field(7, 1, 2);
    TraceCode code(ctx, derive_params(example(a), ctx));
    GaussPeriodTable periods = gauss_periods(Cyclotomy(ctx.field, 4));
    std::mt19937_64 rng(a);
    std::uniform_int_distribution<FqIndex> digit(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
      int r = 1 + trial % 4;
      fqla::Matrix rows;
      while (static_cast<int>(rows.size()) < r) {
        fqla::Vec v(4);
        for (auto& x : v) x = digit(rng);
        rows.push_back(v);
        if (!fqla::independent(ctx.fq, rows)) rows.pop_back();
      }
      std::vector<std::vector<Element>> basis;
      for (const auto& row : rows) basis.push_back(code.space().vector_at(row));
      auto value = verify_expr1(code, basis, periods);
      CHECK(std::abs(value.imag()) < 1e-6);
      CHECK(std::abs(value.real() - double(count_common_zeros(code, basis))) < 1e-6);
    }
  }
}

TEST_CASE("summing the Gauss-period expression over all lines double counts zeros") {
  FieldCtx ctx = build_field(7, 1, 2);
  TraceCode code(ctx, derive_params(example(6), ctx));
  GaussPeriodTable periods = gauss_periods(Cyclotomy(ctx.field, 4));
  // Each position is a common zero of the lines inside the kernel of one nonzero functional.
  std::int64_t expected = 0;
  double total = 0;
  for (SubspaceIter it(4, 1, 7); !it.done(); it.next()) {
    std::vector<std::vector<Element>> basis{code.space().vector_at(it.basis()[0])};
    total += verify_expr1(code, basis, periods).real();
    expected += count_common_zeros(code, basis);
  }
  CHECK(std::abs(total - double(expected)) < 1e-6);
  // Every coordinate functional is nonzero, so its kernel holds (7^3 - 1)/6 lines.
  CHECK(expected == 8 * 57);
}

TEST_CASE("expression refuses mismatched inputs") {
  FieldCtx ctx = build_field(7, 1, 2);
  TraceCode code(ctx, derive_params(example(6), ctx));
  GaussPeriodTable wrong = gauss_periods(Cyclotomy(ctx.field, 3));
  std::vector<std::vector<Element>> basis{code.space().vector_at(fqla::Vec{1, 0, 0, 0})};
  CHECK_THROWS(verify_expr1(code, basis, wrong));
  TraceCode uneven(ctx, derive_params({7, 1, 2, 4, 2, 6, {0, 1}}, ctx));
  GaussPeriodTable right = gauss_periods(Cyclotomy(ctx.field, static_cast<std::uint32_t>(uneven.params().N)));
  CHECK_THROWS_AS(verify_expr1(uneven, basis, right), HypothesisError);
}
