#include "boolform/enumerate.hpp"
#include "boolform/series.hpp"

#include <doctest.h>

using namespace boolform;

namespace {

PowerSeries geometric(int order) {
  std::vector<Rational> c(order + 1, Rational(1));
  return PowerSeries(c);
}

PowerSeries z_series(int order) { return PowerSeries::monomial(order, Rational(1), 1); }

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("ring identities") {
  const int N = 12;
  PowerSeries s(N);
  for (int i = 0; i <= N; ++i) s[i] = Rational(i * i + 1, i + 2);
  const PowerSeries one = PowerSeries::constant(N, 1);
  CHECK(s * s.reciprocal() == one);
  CHECK((one - z_series(N)).reciprocal() == geometric(N));
  CHECK(s - s == PowerSeries(N));
  CHECK(s.scaled(3) == s + s + s);
  CHECK(z_series(N).subst_power(3) == PowerSeries::monomial(N, 1, 3));
  CHECK(PowerSeries::monomial(N, 5, 4).valuation() == 4);
  CHECK(PowerSeries(N).valuation() == N + 1);
  CHECK(geometric(N).derivative()[2] == 3);
}

TEST_CASE("exponential and multiset constructions") {
  const int N = 10;
  const PowerSeries e = z_series(N).exp();
  for (int k = 0; k <= N; ++k) CHECK(e[k] == 1 / factorial(k));
  // Multisets of copies of one atom: exactly one of each size.
  CHECK(z_series(N).polya_exp() == geometric(N));
  const PowerSeries m2 = z_series(N).mset_at_least2();
  CHECK(m2[0] == 0);
  CHECK(m2[1] == 0);
  for (int k = 2; k <= N; ++k) CHECK(m2[k] == 1);
  // Sequences of length >= 2 over two atoms of size 1.
  const PowerSeries sq = z_series(N).scaled(2).seq_at_least2();
  Rational p = 4;
  for (int k = 2; k <= N; ++k, p *= 2) CHECK(sq[k] == p);
}

TEST_CASE("fixed-point systems") {
  const int N = 10;
  // U = z + U^2 gives shifted Catalan numbers.
  const Expr u = Expr::unknown(0);
  const auto sol = solve_system({{"U"}, {Expr::monomial(1, 1) + u * u}}, N);
  const long cat[] = {0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int k = 0; k <= N; ++k) CHECK(sol[0][k] == cat[k]);
  const SeriesSystem bad{{"U"}, {u + Expr::monomial(1, 1)}};
  CHECK(dependency_lag(bad) < 1);
  CHECK_THROWS_AS(solve_system(bad, N), StructureError);
  CHECK_THROWS_AS(PowerSeries(N).reciprocal(), DomainError);
  CHECK_THROWS_AS(PowerSeries::constant(N, 1).exp(), DomainError);
}

TEST_CASE("model series agree with dynamic-programming counts") {
  for (Model model : kAllModels)
    for (int n = 1; n <= 3; ++n) {
      const ModelSeries ms = solve_model_series(model, n, 12);
      CHECK(ms.total[0] == 0);
      for (int m = 1; m <= 12; ++m) CHECK(ms.total[m] == Rational(count_trees(model, m, n)));
    }
}

TEST_CASE("half series equals the total for binary models") {
  for (Model model : {Model::Catalan, Model::Comm}) {
    const ModelSeries ms = solve_model_series(model, 2, 10);
    CHECK(ms.half == ms.total);
  }
  // Associative models: the two halves are swapped by duality.
  const ModelSeries a = solve_model_series(Model::Assoc, 2, 10);
  for (int m = 2; m <= 10; ++m) CHECK(a.half[m] * 2 == a.total[m]);
}

TEST_CASE("built-in consistency checks hold") {
  for (Model model : kAllModels)
    for (int n = 1; n <= 3; ++n) CHECK(series_sanity(model, n, 20).ok());
}

TEST_CASE("auxiliary series structure") {
  for (Model model : kAllModels) {
    const ModelSeries ms = solve_model_series(model, 1, 15);
    // One variable: a simple tautology must use it.
    CHECK(solve_aux_series(ms, AuxKind::ST_all) == solve_aux_series(ms, AuxKind::ST_x));
    const PowerSeries st = solve_aux_series(ms, AuxKind::ST_x);
    const PowerSeries stbar = solve_aux_series(ms, AuxKind::STbar_x);
    CHECK(st + stbar == ms.total);
    for (int m = 0; m <= 15; ++m) {
      CHECK(st[m] >= 0);
      CHECK(st[m] <= ms.total[m]);
    }
    if (model != Model::Catalan) {
      CHECK_THROWS_AS(solve_aux_series(ms, AuxKind::h_x), DomainError);
    }
  }
  CHECK_NOTHROW(solve_aux_series(Model::Catalan, AuxKind::h_x, 2, 10));
}

TEST_CASE("aux names round trip") {
  for (AuxKind k : {AuxKind::g_x, AuxKind::gbar_x, AuxKind::ST_x, AuxKind::STbar_x,
                    AuxKind::h_x, AuxKind::simple_x_T, AuxKind::simple_x_X, AuxKind::ST_all})
    CHECK(parse_aux(aux_name(k)) == k);
  CHECK_THROWS_AS(parse_aux("nope"), InputError);
}

TEST_CASE("frontier-avoiding series for x's variable match brute force") {
  for (Model model : kAllModels) {
    const ModelSeries ms = solve_model_series(model, 2, 5);
    const PowerSeries none = frontier_avoiding(ms, 2);
    for (int m = 1; m <= 5; ++m)
      CHECK(Rational(brute_aux_counts(model, m, 2).u_x) == none[m]);
  }
}

TEST_CASE("evaluation") {
  const PowerSeries g = geometric(40);
  CHECK(abs(g.eval(Real("0.25")) - Real(4) / 3) < Real("1e-20"));
  CHECK(abs(g.eval_derivative(Real("0.25")) - Real(16) / 9) < Real("1e-18"));
  CHECK(g.to_strings()[3] == "1");
}
