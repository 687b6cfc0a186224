#include "ghwlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ghwlab/arith.hpp"
#include "ghwlab/cyclotomy.hpp"
#include "ghwlab/errors.hpp"
#include "ghwlab/ghw_oracle.hpp"
#include "ghwlab/hierarchy_formula.hpp"
#include "ghwlab/subspace_iter.hpp"

namespace ghwlab::cli {

namespace {

using nlohmann::json;

// The command ran to completion but a cross-check disagreed; the record is still emitted.
struct Mismatch {
  std::string message;
};

struct CodeFlags {
  std::uint32_t p = 0;
  int s = 1;
  int m = 0;
  std::int64_t e = 0;
  std::int64_t t = 1;
  std::int64_t a = 0;
  std::string deltas;
};

struct CommonFlags {
  std::uint64_t budget = 0;
  unsigned jobs = 0;
  std::string format = "json";
  std::string output;
  bool no_timing = false;
};

void add_code_flags(CLI::App* sub, CodeFlags& f) {
  sub->add_option("--p", f.p, "characteristic")->required();
  sub->add_option("--s", f.s, "q = p^s")->capture_default_str();
  sub->add_option("--m", f.m, "Q = q^m")->required();
  sub->add_option("--e", f.e, "e (defaults to t)");
  sub->add_option("--t", f.t, "number of nonzeroes")->capture_default_str();
  sub->add_option("--a", f.a, "base exponent a")->required();
  sub->add_option("--deltas", f.deltas, "comma list Delta_1..Delta_t (default 0..t-1 when e = t)");
}

void add_common_flags(CLI::App* sub, CommonFlags& c) {
  sub->add_option("--budget", c.budget, "max subspaces per enumeration (env GHWLAB_BUDGET)");
  sub->add_option("--jobs", c.jobs, "worker threads (default: available parallelism)");
  sub->add_option("--format", c.format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--output", c.output, "write to this path instead of standard output");
  sub->add_flag("--no-timing", c.no_timing, "omit timing fields");
}

CodeInputs to_inputs(const CodeFlags& f) {
  CodeInputs in;
  in.p = f.p;
  in.s = f.s;
  in.m = f.m;
  in.t = f.t;
  in.e = f.e == 0 ? f.t : f.e;
  in.a = f.a;
  if (!f.deltas.empty()) in.deltas = parse_int_list(f.deltas);
  return in;
}

std::uint64_t resolve_budget(const CommonFlags& c) {
  if (c.budget != 0) return c.budget;
  if (const char* env = std::getenv("GHWLAB_BUDGET")) {
    try {
      std::uint64_t v = std::stoull(env);
      if (v != 0) return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("GHWLAB_BUDGET must be a positive integer");
    }
    throw std::invalid_argument("GHWLAB_BUDGET must be a positive integer");
  }
  return kDefaultBudget;
}

unsigned resolve_jobs(const CommonFlags& c) {
  if (c.jobs != 0) return c.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

double round12(double x) {
  if (std::abs(x) < 1e-9) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double y = std::strtod(buf, nullptr);
  return y == 0.0 ? 0.0 : y;
}

json record_header(const CodeParams& params, const Field& field) {
  return {{"schema_version", kSchemaVersion},
          {"tool_version", kToolVersion},
          {"index_base", 0},
          {"field", to_json(field)},
          {"params", params_json(params)}};
}

std::string join_ints(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

json witness_json(const GhwResult& res) {
  json basis = json::array();
  for (const auto& v : res.witness_basis) basis.push_back(v);
  return basis;
}

template <class Fn>
auto timed(Fn&& fn, double& ms) {
  auto t0 = std::chrono::steady_clock::now();
  auto out = fn();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

bool strictly_increasing(const std::vector<std::int64_t>& d) {
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] <= d[i - 1]) return false;
  return true;
}

// ---- subcommands ------------------------------------------------------------

struct Output {
  std::string text;
  int code = kExitOk;
};

Output cmd_params(const CodeFlags& flags) {
  CodeInputs in = to_inputs(flags);
  FieldCtx ctx = build_field(in.p, in.s, in.m);
  CodeParams params = derive_params(in, ctx);
  json rec = record_header(params, *ctx.field);
  rec["hypotheses"] = hypotheses_json(check_theorem_hypotheses(params));
  return {rec.dump(2) + "\n", kExitOk};
}

Output cmd_check(const CodeFlags& flags) {
  CodeInputs in = to_inputs(flags);
  FieldCtx ctx = build_field(in.p, in.s, in.m);
  CodeParams params = derive_params(in, ctx);
  HypothesisReport hyp = check_theorem_hypotheses(params);
  json rec = record_header(params, *ctx.field);
  rec["hypotheses"] = hypotheses_json(hyp);
  return {rec.dump(2) + "\n", hyp.all() ? kExitOk : kExitHypotheses};
}

Output cmd_ghw(const CodeFlags& flags, const CommonFlags& common, const std::string& method, int only_r) {
  CodeInputs in = to_inputs(flags);
  FieldCtx ctx = build_field(in.p, in.s, in.m);
  CodeParams params = derive_params(in, ctx);
  HypothesisReport hyp = check_theorem_hypotheses(params);
  if (!params.constructible()) throw std::invalid_argument(params.assumptions.divisibility.witness);
  TraceCode code(ctx, params);

  std::vector<int> ranks;
  if (only_r != 0) {
    if (only_r < 1 || only_r > code.dimension())
      throw std::invalid_argument("--r must lie in [1, " + std::to_string(code.dimension()) + "]");
    ranks.push_back(only_r);
  } else {
    for (int r = 1; r <= code.dimension(); ++r) ranks.push_back(r);
  }

  const bool want_formula = method == "formula" || method == "all";
  const bool want_brute = method == "brute" || method == "all";
  const bool want_dual = method == "dual" || method == "all";
  if (want_formula && !hyp.all()) throw HypothesisError("formula refused: " + hyp.failures.front());
  if (want_dual && in.e != in.t) throw HypothesisError("dual expression requires e = t");

  OracleOptions opts{resolve_budget(common), resolve_jobs(common)};
  if (want_brute || want_dual) {
    for (int r : ranks) {
      std::uint64_t need = gaussian_binomial(code.dimension(), r, ctx.q());
      if (need > opts.budget) throw BudgetExceeded(need, opts.budget);
    }
  }

  std::map<std::string, json> per_method;
  std::map<std::string, std::vector<std::int64_t>> hierarchies;
  auto oracle_rows = [&](const std::string& name, auto&& solve) {
    json rows = json::array();
    for (int r : ranks) {
      double ms = 0;
      GhwResult res = timed([&] { return solve(r); }, ms);
      std::vector<std::int64_t> support;
      for (int i : code.support_union(res.witness_basis)) support.push_back(i);
      json row = {{"r", r},
                  {"d_r", res.d_r},
                  {"witness_basis", witness_json(res)},
                  {"witness_support", support},
                  {"subspaces_examined", res.subspaces_examined}};
      if (!common.no_timing) row["timing_ms"] = round12(ms);
      rows.push_back(row);
      hierarchies[name].push_back(res.d_r);
    }
    per_method[name] = rows;
  };

  if (want_formula) {
    json rows = json::array();
    for (int r : ranks) {
      double ms = 0;
      FormulaResult fr = timed([&] { return theorem1_dr(r, params); }, ms);
      json row = {{"r", r},
                  {"d_r", fr.d_r},
                  {"witness_basis", json::array()},
                  {"subspaces_examined", 0},
                  {"r1", fr.split.r1},
                  {"r2", fr.split.r2},
                  {"branch", fr.high_branch ? "high" : "low"},
                  {"u_star", fr.u_star.entries()},
                  {"T_star", fr.T_star}};
      if (!common.no_timing) row["timing_ms"] = round12(ms);
      rows.push_back(row);
      hierarchies["formula"].push_back(fr.d_r);
    }
    per_method["formula"] = rows;
  }
  if (want_brute) oracle_rows("brute", [&](int r) { return ghw_bruteforce(code, r, opts); });
  if (want_dual) oracle_rows("dual", [&](int r) { return ghw_dual_sweep(code, r, opts); });

  bool agree = true;
  for (const auto& [name, h] : hierarchies)
    if (h != hierarchies.begin()->second) agree = false;
  const auto& hierarchy = hierarchies.begin()->second;
  if (agree && ranks.size() > 1 && !strictly_increasing(hierarchy))
    throw InternalError("computed hierarchy is not strictly increasing");

  Output out;
  out.code = agree ? kExitOk : kExitMismatch;
  if (common.format == "json") {
    json rec = record_header(params, *ctx.field);
    rec["hypotheses"] = hypotheses_json(hyp);
    rec["method"] = method;
    if (method == "all") {
      json methods = json::object();
      for (auto& [name, rows] : per_method) methods[name] = rows;
      rec["methods"] = methods;
      rec["agree"] = agree;
      rec["hierarchy"] = agree ? json(hierarchy) : json(nullptr);
    } else {
      rec["results"] = per_method.begin()->second;
    }
    out.text = rec.dump(2) + "\n";
  } else {
    std::ostringstream os;
    if (common.format == "csv") os << "method,r,d_r,subspaces_examined\n";
    else os << "method    r    d_r    subspaces\n";
    for (const auto& [name, rows] : per_method) {
      for (const auto& row : rows) {
        if (common.format == "csv") {
          os << name << ',' << row["r"] << ',' << row["d_r"] << ',' << row["subspaces_examined"] << '\n';
        } else {
          char line[128];
          std::snprintf(line, sizeof line, "%-8s %3d %6lld %12llu\n", name.c_str(), row["r"].get<int>(),
                        static_cast<long long>(row["d_r"].get<std::int64_t>()),
                        static_cast<unsigned long long>(row["subspaces_examined"].get<std::uint64_t>()));
          os << line;
        }
      }
    }
    out.text = os.str();
  }
  return out;
}

Output cmd_gauss(const CodeFlags& flags, std::int64_t N_flag) {
  FieldCtx ctx = build_field(flags.p, flags.s, flags.m);
  std::int64_t N = N_flag;
  if (N == 0) {
    if (flags.a == 0) throw std::invalid_argument("gauss needs --N or code flags (--a, --t, --e)");
    N = derive_params(to_inputs(flags), ctx).N;
  }
  if (N < 1 || N > static_cast<std::int64_t>(ctx.Q()) - 1) throw std::invalid_argument("N must divide Q - 1");
  Cyclotomy cyc(ctx.field, static_cast<std::uint32_t>(N));
  GaussPeriodTable table = gauss_periods(cyc);
  json periods = json::array();
  std::complex<double> sum = 0.0;
  for (std::uint32_t i = 0; i < table.N; ++i) {
    periods.push_back({{"i", i}, {"re", round12(table.values[i].real())}, {"im", round12(table.values[i].imag())}});
    sum += table.values[i];
  }
  json rec = {{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"field", to_json(*ctx.field)},
              {"N", N},
              {"class_size", table.class_size},
              {"periods", periods},
              {"sum", {{"re", round12(sum.real())}, {"im", round12(sum.imag())}}}};
  return {rec.dump(2) + "\n", kExitOk};
}

Output cmd_flv(const CodeFlags& flags, std::int64_t N_flag) {
  std::int64_t N = N_flag;
  if (N == 0) {
    if (flags.a == 0) throw std::invalid_argument("flv needs --N or code flags (--a, --t, --e)");
    N = derive_params(to_inputs(flags)).N;
  }
  auto set = SemiprimitiveSetting::make(flags.p, flags.s, flags.m, N);
  json rows = json::array();
  for (int l = 0; l <= set.m(); ++l) rows.push_back({{"l", l}, {"f", f_max_intersection(l, set)}});
  json rec = {{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"q", set.q()},
              {"m", set.m()},
              {"N", set.N()},
              {"j", set.j()},
              {"v", threshold_v(set)},
              {"f", rows}};
  return {rec.dump(2) + "\n", kExitOk};
}

struct SweepFlags {
  std::string p, s = "1", m, e, t, a, deltas;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

Output cmd_sweep(const SweepFlags& sf, const CommonFlags& common) {
  const auto ps = parse_int_list(sf.p);
  const auto ss = parse_int_list(sf.s);
  const auto ms = parse_int_list(sf.m);
  const auto ts = parse_int_list(sf.t);
  const auto es = sf.e.empty() ? std::vector<std::int64_t>{} : parse_int_list(sf.e);
  const auto as = parse_int_list(sf.a);
  const std::vector<std::int64_t> fixed_deltas = sf.deltas.empty() ? std::vector<std::int64_t>{} : parse_int_list(sf.deltas);
  OracleOptions opts{resolve_budget(common), resolve_jobs(common)};

  std::ostringstream os;
  const auto& cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';

  for (auto p : ps)
    for (auto s : ss)
      for (auto m : ms) {
        if (p < 2 || s < 1 || m < 1 || !arith::is_prime(p)) continue;
        std::optional<FieldCtx> ctx;
        try {
          ctx = build_field(static_cast<std::uint32_t>(p), static_cast<int>(s), static_cast<int>(m));
        } catch (const std::invalid_argument&) {
          continue;
        }
        for (auto t : ts)
          for (auto e : (es.empty() ? std::vector<std::int64_t>{t} : es))
            for (auto a : as) {
              CodeInputs in{static_cast<std::uint32_t>(p), static_cast<int>(s), static_cast<int>(m), e, t, a, fixed_deltas};
              CodeParams params;
              try {
                params = derive_params(in, *ctx);
              } catch (const std::invalid_argument&) {
                continue;
              }
              if (!params.assumptions.all()) continue;
              HypothesisReport hyp = check_theorem_hypotheses(params);
              std::string formula = "n/a (hypotheses)";
              std::string oracle = "n/a (budget)";
              std::string match = "n/a";
              std::string error;
              std::vector<std::int64_t> fh, oh;
              try {
                if (hyp.all()) {
                  for (int r = 1; r <= params.k; ++r) fh.push_back(theorem1_dr(r, params).d_r);
                  formula = join_ints(fh);
                }
                std::uint64_t need = 0;
                for (int r = 1; r <= params.k; ++r) {
                  std::uint64_t g = gaussian_binomial(static_cast<int>(params.k), r, params.q);
                  need = need > std::numeric_limits<std::uint64_t>::max() - g ? std::numeric_limits<std::uint64_t>::max() : need + g;
                }
                if (need <= opts.budget) {
                  TraceCode code(*ctx, params);
                  for (int r = 1; r <= params.k; ++r) oh.push_back(ghw_bruteforce(code, r, opts).d_r);
                  oracle = join_ints(oh);
                }
                if (!fh.empty() && !oh.empty()) match = fh == oh ? "true" : "false";
              } catch (const std::exception& ex) {
                error = ex.what();
              }
              os << p << ',' << s << ',' << m << ',' << e << ',' << t << ',' << a << ',' << params.q << ','
                 << params.Q << ',' << params.n << ',' << params.N << ',' << params.delta << ',' << params.k << ','
                 << (hyp.all() ? "yes" : "no") << ',' << formula << ',' << oracle << ',' << match << ','
                 << csv_escape(error) << '\n';
            }
      }
  return {os.str(), kExitOk};
}

Output cmd_verify(const CodeFlags& flags, int samples, std::uint64_t seed, int only_r) {
  CodeInputs in = to_inputs(flags);
  FieldCtx ctx = build_field(in.p, in.s, in.m);
  CodeParams params = derive_params(in, ctx);
  if (in.e != in.t) throw HypothesisError("verify requires e = t");
  if (!params.constructible()) throw std::invalid_argument(params.assumptions.divisibility.witness);
  TraceCode code(ctx, params);
  if (only_r < 0 || only_r > code.dimension()) throw std::invalid_argument("--r out of range");
  if (samples < 1) throw std::invalid_argument("--samples must be positive");
  Cyclotomy cyc(ctx.field, static_cast<std::uint32_t>(params.N));
  GaussPeriodTable periods = gauss_periods(cyc);

  constexpr double kTolerance = 1e-6;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<FqIndex> digit(0, ctx.q() - 1);
  json rows = json::array();
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    int r = only_r != 0 ? only_r : 1 + k % code.dimension();
    fqla::Matrix coords;
    while (static_cast<int>(coords.size()) < r) {
      fqla::Vec v(code.dimension());
      for (auto& x : v) x = digit(rng);
      coords.push_back(v);
      if (!fqla::independent(ctx.fq, coords)) coords.pop_back();
    }
    std::vector<std::vector<Element>> basis;
    for (const auto& c : coords) basis.push_back(code.space().vector_at(c));
    std::int64_t exact = count_common_zeros(code, basis);
    std::complex<double> value = verify_expr1(code, basis, periods);
    double err = std::abs(value - std::complex<double>(static_cast<double>(exact), 0.0));
    worst = std::max(worst, err);
    rows.push_back({{"r", r},
                    {"count", exact},
                    {"expr1", {{"re", round12(value.real())}, {"im", round12(value.imag())}}},
                    {"abs_err", round12(err)}});
  }
  json rec = record_header(params, *ctx.field);
  rec["seed"] = seed;
  rec["tolerance"] = kTolerance;
  rec["samples"] = rows;
  rec["max_abs_err"] = round12(worst);
  rec["ok"] = worst <= kTolerance;
  return {rec.dump(2) + "\n", worst <= kTolerance ? kExitOk : kExitMismatch};
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string part;
  auto to_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
  };
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
    } else {
      std::int64_t lo = to_int(part.substr(0, dots));
      std::int64_t hi = to_int(part.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("empty range '" + part + "'");
      if (hi - lo > 10'000'000) throw std::invalid_argument("range too long '" + part + "'");
      for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

nlohmann::json params_json(const CodeParams& params) {
  const auto& in = params.inputs;
  auto check = [](const CheckResult& c) { return json{{"pass", c.pass}, {"witness", c.witness}}; };
  return {{"p", in.p},
          {"s", in.s},
          {"m", in.m},
          {"e", in.e},
          {"t", in.t},
          {"a", in.a},
          {"deltas", in.deltas},
          {"q", params.q},
          {"Q", params.Q},
          {"exponents", params.exponents},
          {"delta", params.delta},
          {"n", params.n},
          {"N", params.N},
          {"k", params.k},
          {"assumptions",
           {{"i", check(params.assumptions.divisibility)},
            {"ii", check(params.assumptions.deltas)},
            {"iii", check(params.assumptions.minimal_polys)},
            {"all", params.assumptions.all()}}}};
}

nlohmann::json hypotheses_json(const HypothesisReport& r) {
  return {{"assumptions", r.assumptions},
          {"e_equals_t", r.e_equals_t},
          {"N_in_range", r.N_in_range},
          {"j", r.j ? json(*r.j) : json(nullptr)},
          {"sm_over_2j_odd", r.sm_over_2j_odd},
          {"m_even", r.m_even},
          {"irreducible", r.irreducible},
          {"all", r.all()},
          {"failures", r.failures}};
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {"p", "s", "m", "e", "t", "a", "q", "Q", "n", "N", "delta", "k",
                                                "hypotheses", "formula", "oracle", "match", "error"};
  return cols;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Hamming weights of cyclic codes with t nonzeroes", "ghwlab"};
  app.require_subcommand(1);

  CodeFlags code;
  CommonFlags common;
  std::string method = "all";
  int only_r = 0;
  std::int64_t N_flag = 0;
  int samples = 100;
  std::uint64_t seed = 1;
  SweepFlags sweep;

  auto* params_cmd = app.add_subcommand("params", "derive code parameters and check assumptions");
  add_code_flags(params_cmd, code);
  add_common_flags(params_cmd, common);

  auto* check_cmd = app.add_subcommand("check", "check the closed-form hypotheses (exit 4 when unmet)");
  add_code_flags(check_cmd, code);
  add_common_flags(check_cmd, common);

  auto* ghw_cmd = app.add_subcommand("ghw", "weight hierarchy by formula, exhaustive search, or dual expression");
  add_code_flags(ghw_cmd, code);
  add_common_flags(ghw_cmd, common);
  ghw_cmd->add_option("--method", method, "formula | brute | dual | all")
      ->check(CLI::IsMember({"formula", "brute", "dual", "all"}))
      ->capture_default_str();
  ghw_cmd->add_option("--r", only_r, "single r (default: every r)");

  auto* gauss_cmd = app.add_subcommand("gauss", "Gauss periods of order N");
  gauss_cmd->add_option("--p", code.p, "characteristic")->required();
  gauss_cmd->add_option("--s", code.s)->capture_default_str();
  gauss_cmd->add_option("--m", code.m)->required();
  gauss_cmd->add_option("--N", N_flag, "order N (default: derived from --a/--e/--t)");
  gauss_cmd->add_option("--e", code.e);
  gauss_cmd->add_option("--t", code.t);
  gauss_cmd->add_option("--a", code.a);
  gauss_cmd->add_option("--deltas", code.deltas);
  add_common_flags(gauss_cmd, common);

  auto* flv_cmd = app.add_subcommand("flv", "table of f(l), l = 0..m");
  flv_cmd->add_option("--p", code.p)->required();
  flv_cmd->add_option("--s", code.s)->capture_default_str();
  flv_cmd->add_option("--m", code.m)->required();
  flv_cmd->add_option("--N", N_flag, "order N (default: derived from --a/--e/--t)");
  flv_cmd->add_option("--e", code.e);
  flv_cmd->add_option("--t", code.t);
  flv_cmd->add_option("--a", code.a);
  flv_cmd->add_option("--deltas", code.deltas);
  add_common_flags(flv_cmd, common);

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV over parameter ranges (lists like 1..47 or 0,1)");
  sweep_cmd->add_option("--p", sweep.p)->required();
  sweep_cmd->add_option("--s", sweep.s)->capture_default_str();
  sweep_cmd->add_option("--m", sweep.m)->required();
  sweep_cmd->add_option("--e", sweep.e, "default: e = t");
  sweep_cmd->add_option("--t", sweep.t)->required();
  sweep_cmd->add_option("--a", sweep.a)->required();
  sweep_cmd->add_option("--deltas", sweep.deltas);
  add_common_flags(sweep_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "compare the Gauss-period expression with exact zero counts");
  add_code_flags(verify_cmd, code);
  add_common_flags(verify_cmd, common);
  verify_cmd->add_option("--samples", samples)->capture_default_str();
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--r", only_r, "fixed r (default: cycle through 1..tm)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Output result;
  try {
    if (*params_cmd) result = cmd_params(code);
    else if (*check_cmd) result = cmd_check(code);
    else if (*ghw_cmd) result = cmd_ghw(code, common, method, only_r);
    else if (*gauss_cmd) result = cmd_gauss(code, N_flag);
    else if (*flv_cmd) result = cmd_flv(code, N_flag);
    else if (*sweep_cmd) result = cmd_sweep(sweep, common);
    else if (*verify_cmd) result = cmd_verify(code, samples, seed, only_r);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const HypothesisError& e) {
    err << "error: hypotheses unmet: " << e.what() << "\n";
    return kExitHypotheses;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }

  if (!common.output.empty()) {
    std::ofstream f(common.output, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << common.output << "\n";
      return kExitUsage;
    }
    f << result.text;
  } else {
    out << result.text;
  }
  if (result.code == kExitMismatch) err << "error: cross-check mismatch\n";
  return result.code;
}

}  // namespace ghwlab::cli
