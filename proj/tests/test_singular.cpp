#include "boolform/series.hpp"
#include "boolform/singular.hpp"

#include <doctest.h>

using namespace boolform;

namespace {

Real rel(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST_CASE("closed-form singularities") {
  PrecisionScope p(256);
  for (int n : {1, 3, 50}) {
    CHECK(dominant_singularity(Model::Catalan, n).rho == Real(1) / (16 * n));
    const Real a = (3 - 2 * sqrt(Real(2))) / (2 * n);
    CHECK(rel(dominant_singularity(Model::Assoc, n).rho, a) < Real("1e-70"));
  }
  CHECK(dominant_singularity(Model::Catalan, 5).method == "closed-form");
  CHECK(dominant_singularity(Model::Comm, 5).method == "numeric-system");
}

TEST_CASE("Newton agrees with the default solver in every model") {
  PrecisionScope p(256);
  for (Model model : kAllModels)
    for (int n : {1, 2, 7, 100}) {
      const auto a = dominant_singularity(model, n);
      const auto b = numeric_singularity(model, n);
      CHECK(rel(a.rho, b.rho) < Real("1e-70"));
      // y is only determined to about the square root of the working precision.
      CHECK(abs(a.value_at_rho - b.value_at_rho) < Real("1e-30"));
    }
}

TEST_CASE("commutative singularity at n = 100") {
  PrecisionScope p(256);
  const auto s = dominant_singularity(Model::Comm, 100);
  const Real n = 100;
  const Real e = 1 / (8 * n);
  const Real approx = e * (1 - e + Real(7) / (256 * n * n));
  CHECK(rel(s.rho, approx) < Real("1e-5"));
  CHECK(abs(s.value_at_rho - Real(1) / 2) < Real("1e-60"));
}

TEST_CASE("associative-commutative value at the singularity tends to log 2") {
  PrecisionScope p(128);
  const auto s = dominant_singularity(Model::AssocComm, 1000);
  CHECK(abs(s.value_at_rho - log(Real(2))) < Real("1e-2"));
  // The value moves towards log 2 as n grows.
  const auto s10 = dominant_singularity(Model::AssocComm, 10);
  CHECK(abs(s10.value_at_rho - log(Real(2))) > abs(s.value_at_rho - log(Real(2))));
}

TEST_CASE("numeric evaluators agree with truncated series well inside the disc") {
  PrecisionScope p(256);
  for (Model model : kAllModels)
    for (int n : {1, 3}) {
      const NumericModel nm(model, n);
      const ModelSeries ms = solve_model_series(model, n, 70);
      const Real z = nm.rho() / 4;
      const auto check = [&](const Jet& j, const PowerSeries& s) {
        CHECK(rel(j.value, s.eval(z)) < Real("1e-30"));
        CHECK(rel(j.deriv, s.eval_derivative(z)) < Real("1e-28"));
      };
      check(nm.total(z), ms.total);
      check(nm.st_x(z), solve_aux_series(ms, AuxKind::ST_x));
      check(nm.g_x(z), solve_aux_series(ms, AuxKind::g_x));
    }
}

TEST_CASE("ladder extrapolation on synthetic functions") {
  PrecisionScope p(256);
  const Real one = 1;
  const auto r = limiting_ratio([](const Real& z) { return 1 / (1 + sqrt(1 - z)); }, one);
  CHECK(r.converged);
  CHECK(abs(r.value - 1) < Real("1e-12"));
  const auto q = limiting_ratio(
      [](const Real& z) { return 2 + 3 * sqrt(1 - z) - 5 * (1 - z); }, one);
  CHECK(abs(q.value - 2) < Real("1e-12"));
  CHECK_THROWS_AS(limiting_ratio([](const Real& z) { return log(1 - z); }, one), NumericError);
}

TEST_CASE("ladder on truncated polynomials") {
  PrecisionScope p(256);
  PowerSeries num(4), den(4);
  num[1] = 1;
  num[2] = 1;
  den[1] = 1;
  const auto r = limiting_ratio(num, den, Real("0.5"));
  CHECK(abs(r.value - 2) < Real("1e-12"));
  LadderOptions bad;
  bad.eps0 = 0.5;
  bad.rungs = 3;
  CHECK_THROWS_AS(limiting_ratio([](const Real& z) { return log(1 - z); }, Real(1), bad),
                  NumericError);
}

TEST_CASE("plane tautology constant is close to three quarters") {
  PrecisionScope p(256);
  const auto e = constant_estimate(Model::Catalan, ConstantTarget::True, {50, 100, 200});
  CHECK(abs(e.lambda - Real("0.75")) < Real("1e-3"));
  CHECK(e.values.size() == 3);
  CHECK(literal_site_factor(Model::Catalan) == 4);
  CHECK(literal_site_factor(Model::AssocComm) == 2);
  CHECK(published_constant(Model::Catalan, ConstantTarget::True) == doctest::Approx(0.75));
}
