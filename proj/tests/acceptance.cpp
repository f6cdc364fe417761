// Acceptance checks: one PASS/FAIL line per criterion, details indented below.
#include "boolform/complexity.hpp"
#include "boolform/enumerate.hpp"
#include "boolform/patterns.hpp"
#include "boolform/series.hpp"
#include "boolform/singular.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace boolform;

namespace {

// Tolerances.
constexpr std::uint64_t kExhaustiveCap = 1'000'000'000;  // trees visited per oracle cell
constexpr std::uint64_t kAuxCap = 1'000'000'000;
const std::vector<int> kConstantsGrid = {100, 200, 400};
constexpr double kGammaRelTol = 1e-5;
constexpr double kHalfTol = 1e-8;
constexpr double kLog2Tol = 1e-2;
constexpr double kSolverTol = 1e-60;  // rho at 256 bits
constexpr double kLiteralRelTol = 0.02;
constexpr unsigned kBits = 256;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void note(const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    notes.emplace_back(buf);
  }
  void expect(bool ok, const char* fmt, auto... args) {
    if (!ok) pass = false;
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + buf);
  }
};

double d(const Real& x) { return x.convert_to<double>(); }
std::string s(const BigInt& x) { return x.str(); }
std::string s(const Rational& x) { return to_string(x); }

// 1. Series coefficients against exhaustive enumeration.
Outcome oracle_equality() {
  Outcome o;
  for (Model model : kAllModels) {
    const int max_m = is_binary(model) ? 9 : 8;
    for (int n = 1; n <= 2; ++n) {
      const ModelSeries ms = solve_model_series(model, n, max_m);
      for (int m = 1; m <= max_m; ++m) {
        const Rational coeff = ms.total[m];
        const BigInt count = count_trees(model, m, n);
        if (count <= kExhaustiveCap) {
          const BigInt e = count_trees_exhaustive(model, m, n, kExhaustiveCap);
          o.expect(coeff == Rational(e), "%s n=%d m=%d series=%s exhaustive=%s",
                   model_name(model).c_str(), n, m, s(coeff).c_str(), s(e).c_str());
          continue;
        }
        // Over the cap (plane models only): leaf labels are independent, so
        // the count is the one-variable exhaustive count times n^m; the shape
        // enumeration is a second check.
        BigInt scale = 1;
        for (int i = 0; i < m; ++i) scale *= n;
        const BigInt e1 = BigInt(count_trees_exhaustive(model, m, 1, kExhaustiveCap)) * scale;
        const BigInt sh = count_trees_by_shapes(model, m, n);
        o.expect(is_plane(model) && coeff == Rational(e1) && coeff == Rational(sh),
                 "%s n=%d m=%d series=%s exhaustive(n=1)*n^m=%s shapes=%s",
                 model_name(model).c_str(), n, m, s(coeff).c_str(), s(e1).c_str(),
                 s(sh).c_str());
      }
    }
  }
  return o;
}

// 2. Auxiliary series against brute-force classification.
Outcome aux_equality() {
  Outcome o;
  for (Model model : kAllModels)
    for (int n = 1; n <= 2; ++n) {
      const ModelSeries ms = solve_model_series(model, n, 7);
      const PowerSeries st = solve_aux_series(ms, AuxKind::ST_x);
      const PowerSeries g = solve_aux_series(ms, AuxKind::g_x);
      bool ok = true;
      for (int m = 1; m <= 7; ++m) {
        const AuxCounts c = brute_aux_counts(model, m, n, {1, false}, kAuxCap);
        const bool row = Rational(c.st_x) == st[m] && Rational(c.g_x) == g[m];
        if (!row)
          o.expect(false, "%s n=%d m=%d ST_x %s vs %s, g_x %s vs %s", model_name(model).c_str(),
                   n, m, s(st[m]).c_str(), s(c.st_x).c_str(), s(g[m]).c_str(),
                   s(c.g_x).c_str());
        ok = ok && row;
      }
      if (ok)
        o.expect(true, "%s n=%d m<=7 ST_x and g_x coefficients match (m=7: %s, %s)",
                 model_name(model).c_str(), n, s(st[7]).c_str(), s(g[7]).c_str());
    }
  return o;
}

// 3. Constants table.
Outcome constants_table() {
  Outcome o;
  struct Row {
    Model model;
    ConstantTarget target;
    double expected, tol;
  };
  const double l2 = std::log(2.0), r2 = std::sqrt(2.0);
  const Row rows[] = {
      {Model::Catalan, ConstantTarget::True, 0.75, 0.005},
      {Model::Assoc, ConstantTarget::True, 51 - 36 * r2, 0.002},
      {Model::Comm, ConstantTarget::True, 641.0 / 1024, 0.005},
      {Model::AssocComm, ConstantTarget::True, (2 * l2 - 1) * (2 * l2 - 1) / 4, 0.002},
      {Model::Catalan, ConstantTarget::Literal, 5.0 / 16, 0.005},
      {Model::Assoc, ConstantTarget::Literal, 546 - 386 * r2, 0.003},
      {Model::Comm, ConstantTarget::Literal, 1153.0 / 4096, 0.005},
      {Model::AssocComm, ConstantTarget::Literal, 0.08900, 0.003},
  };
  for (const Row& r : rows) {
    const ConstantEstimate e = constant_estimate(r.model, r.target, kConstantsGrid);
    const double got = d(e.lambda);
    o.expect(std::fabs(got - r.expected) <= r.tol, "%s %s computed=%.6f expected=%.6f tol=%g",
             model_name(r.model).c_str(), target_name(r.target).c_str(), got, r.expected, r.tol);
  }
  return o;
}

// 4. Singularity systems.
Outcome singularities() {
  Outcome o;
  const auto c = dominant_singularity(Model::Comm, 100);
  const Real n = 100, e = 1 / (8 * n);
  const Real approx = e * (1 - e + Real(7) / (256 * n * n));
  const double rel = d(abs(c.rho - approx) / approx);
  o.expect(rel <= kGammaRelTol, "comm gamma_100=%s refined expansion=%s rel=%.2e",
           to_decimal(c.rho, 20).c_str(), to_decimal(approx, 20).c_str(), rel);
  const double half = d(abs(c.value_at_rho - Real(1) / 2));
  o.expect(half <= kHalfTol, "comm C(gamma_100)=%s |C-1/2|=%.2e",
           to_decimal(c.value_at_rho, 20).c_str(), half);
  const auto p = dominant_singularity(Model::AssocComm, 1000);
  const double dl = d(abs(p.value_at_rho - log(Real(2))));
  o.expect(dl <= kLog2Tol, "assoccomm P_hat(delta_1000)=%s |.-ln2|=%.2e",
           to_decimal(p.value_at_rho, 15).c_str(), dl);
  for (Model model : {Model::Catalan, Model::Assoc})
    for (int k : {1, 2, 10, 100}) {
      const auto a = dominant_singularity(model, k);
      const auto b = numeric_singularity(model, k);
      const double r = d(abs(a.rho - b.rho) / a.rho);
      o.expect(r <= kSolverTol, "%s n=%d closed-form rho=%s newton rel diff=%.2e",
               model_name(model).c_str(), k, to_decimal(a.rho, 20).c_str(), r);
    }
  return o;
}

// 5. Pattern lemmas.
Outcome lemmas() {
  Outcome o;
  struct Cell {
    Model model;
    int max_size;
  };
  for (const Cell c : {Cell{Model::Catalan, 7}, Cell{Model::Assoc, 6}, Cell{Model::Comm, 7},
                       Cell{Model::AssocComm, 6}})
    for (int n = 1; n <= 2; ++n) {
      const LemmaReport r = verify_pattern_lemmas(c.model, c.max_size, n);
      std::uint64_t bad = 0;
      for (const auto& row : r.rows) bad += row.counterexamples;
      o.expect(r.ok(), "%s m<=%d n=%d trees=%llu tautologies=%llu counterexamples=%llu",
               model_name(c.model).c_str(), c.max_size, n,
               static_cast<unsigned long long>(r.trees),
               static_cast<unsigned long long>(r.tautologies),
               static_cast<unsigned long long>(bad));
    }
  return o;
}

// 6. Duality.
Outcome duality() {
  Outcome o;
  for (Model model : kAllModels)
    for (int n = 1; n <= 2; ++n) {
      bool ok = true;
      std::size_t funcs = 0;
      for (int m = 1; m <= 8; ++m) {
        const auto dist = distribution(model, m, n, DistributionMethod::DynamicProgramming);
        for (const auto& [f, c] : dist.counts) ok = ok && dist.count(f.negate()) == c;
        funcs += dist.counts.size();
      }
      o.expect(ok, "%s n=%d m<=8 (%zu function entries)", model_name(model).c_str(), n, funcs);
    }
  return o;
}

// 7. Complexity suite.
Outcome complexity_suite() {
  Outcome o;
  int agree = 0;
  for (std::uint64_t w = 0; w < 16; ++w)
    if (complexity_model_independence(BoolFunc::from_word(2, w))) ++agree;
  o.expect(agree == 16, "L(f) model-independent for %d of 16 functions on n=2", agree);
  const int lx = complexity(BoolFunc::from_word(2, 0x6), Model::Catalan).L;
  o.expect(lx == 4, "catalan L(x1 xor x2)=%d", lx);
  const auto x1 = complexity(BoolFunc::variable(1, 1), Model::Catalan);
  const int lt = enumerate_expansions(x1).lambda_T;
  o.expect(lt == 4, "catalan lambda_T(x1)=%d", lt);
  const LambdaBounds b = lambda_bounds(Model::Catalan, 1, 1);
  o.expect(std::fabs(b.lower - 5.0 / 16) < 1e-15 && std::fabs(b.upper - 5.0 / 16) < 1e-15,
           "catalan literal bounds [%.6f, %.6f]", b.lower, b.upper);
  const BoolFunc v1 = BoolFunc::variable(3, 1), v2 = BoolFunc::variable(3, 2),
                 v3 = BoolFunc::variable(3, 3);
  const std::pair<const char*, BoolFunc> fs[] = {
      {"x1", v1}, {"x1&x2", v1 & v2}, {"x1|(x2&x3)", v1 | (v2 & v3)}};
  for (Model model : kAllModels)
    for (const auto& [name, f] : fs) {
      const auto ts = complexity(f, model);
      const auto t = enumerate_expansions(ts);
      const CountBounds cb = expansion_count_bounds(model, ts.L, ts.M());
      o.expect(t.lambda_X >= cb.X_lower && t.lambda_X <= cb.X_upper &&
                   t.lambda_T >= cb.T_lower && t.lambda_T <= cb.T_upper,
               "%s %s L=%d M=%d lambda_T=%d in [%d,%d] lambda_X=%d in [%d,%d]",
               model_name(model).c_str(), name, ts.L, ts.M(), t.lambda_T, cb.T_lower,
               cb.T_upper, t.lambda_X, cb.X_lower, cb.X_upper);
    }
  return o;
}

// 8. Expansion formula for x1 against the literal constant.
Outcome expansion_consistency() {
  Outcome o;
  const int n = 200;
  for (Model model : kAllModels) {
    const auto rep = probability_vs_bounds(BoolFunc::variable(1, 1), model, {n});
    const double est = d(rep.points.at(0).estimate);
    const double pub = published_constant(model, ConstantTarget::Literal);
    const double internal =
        d(constant_at(model, ConstantTarget::Literal, expansion_weights(model, n)));
    const double rel = std::fabs(est - pub) / pub;
    o.expect(rel <= kLiteralRelTol,
             "%s n=%d expansion=%.6f published=%.6f rel=%.4f (singular module at n: %.6f)",
             model_name(model).c_str(), n, est, pub, rel, internal);
  }
  return o;
}

}  // namespace

int main() {
  PrecisionScope prec(kBits);
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 series coefficients equal exhaustive counts", oracle_equality},
      {"2 auxiliary series equal brute-force tallies", aux_equality},
      {"3 constants table", constants_table},
      {"4 singularity systems", singularities},
      {"5 pattern lemma suite", lemmas},
      {"6 duality of distributions", duality},
      {"7 complexity suite", complexity_suite},
      {"8 expansion formula for x1 at n=200", expansion_consistency},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %s  (%.1fs)\n", o.pass ? "PASS" : "FAIL", name, secs);
    for (const auto& line : o.notes) std::printf("      %s\n", line.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
