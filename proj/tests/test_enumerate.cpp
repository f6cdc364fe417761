#include "boolform/enumerate.hpp"
#include "boolform/series.hpp"

#include <doctest.h>

#include <set>

using namespace boolform;

namespace {

BigInt catalan_number(int k) {
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

BigInt power(long b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("catalan counts follow the closed form") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 12; ++m)
      CHECK(count_trees(Model::Catalan, m, n) ==
            catalan_number(m - 1) * power(2, m - 1) * power(2 * n, m));
  CHECK(count_trees(Model::Catalan, 2, 1) == 8);
}

TEST_CASE("known counts for the non-plane models") {
  const long ac1[] = {2, 6, 20, 80, 340, 1570, 7540, 37610, 192360};
  const long ac2[] = {4, 20, 120, 860, 6792, 57636, 512344, 4714276, 44507344};
  for (int m = 1; m <= 9; ++m) {
    CHECK(count_trees(Model::AssocComm, m, 1) == ac1[m - 1]);
    CHECK(count_trees(Model::AssocComm, m, 2) == ac2[m - 1]);
  }
  // Two leaves under one commutative node: multisets of size 2 from 2n literals.
  for (int n = 1; n <= 4; ++n) CHECK(count_trees(Model::Comm, 2, n) == n * (2 * n + 1) * 2);
}

TEST_CASE("dynamic programming, shapes and exhaustive generation agree") {
  for (Model model : kAllModels)
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 6; ++m) {
        const BigInt dp = count_trees(model, m, n);
        CHECK(count_trees_by_shapes(model, m, n) == dp);
        if (dp < 3'000'000) CHECK(BigInt(count_trees_exhaustive(model, m, n)) == dp);
      }
}

TEST_CASE("generated trees are distinct, valid and of the right size") {
  for (Model model : kAllModels) {
    const auto trees = generate_trees(model, 4, 2);
    std::set<std::string> seen;
    for (const auto& t : trees) {
      CHECK(t.size() == 4);
      seen.insert(t.to_text());
      CHECK_NOTHROW(parse_tree(t.to_text(), model));
    }
    CHECK(seen.size() == trees.size());
    CHECK(BigInt(trees.size()) == count_trees(model, 4, 2));
  }
}

TEST_CASE("the generation cap raises a resource error") {
  CHECK_THROWS_AS(generate_trees(Model::Catalan, 8, 2, 1000), ResourceError);
  CHECK_THROWS_AS(check_cap(Model::Assoc, 9, 3, 1'000'000), ResourceError);
}

TEST_CASE("distribution methods agree with a tree-by-tree oracle") {
  for (Model model : kAllModels)
    for (int m = 1; m <= 4; ++m) {
      std::map<BoolFunc, BigInt> oracle;
      for (const auto& t : generate_trees(model, m, 2)) oracle[compute_function(t, 2)] += 1;
      const auto dp = distribution(model, m, 2, DistributionMethod::DynamicProgramming);
      const auto ser = distribution(model, m, 2, DistributionMethod::ExhaustiveSerial);
      const auto par = distribution(model, m, 2, DistributionMethod::ExhaustiveParallel);
      CHECK(dp.counts == oracle);
      CHECK(ser.counts == oracle);
      CHECK(par.counts == oracle);
      CHECK(dp.total == count_trees(model, m, 2));
    }
}

TEST_CASE("distributions at larger sizes: serial, parallel and DP agree") {
  for (Model model : kAllModels) {
    const int m = is_plane(model) ? 5 : 6;
    const auto a = distribution_words_serial(model, m, 2);
    const auto b = distribution_words_parallel(model, m, 2);
    const auto c = distribution_words_dp(model, m, 2);
    CHECK(a == b);
    REQUIRE(a.size() == c.size());
    for (const auto& [w, cnt] : a) CHECK(c.at(w) == cnt);
  }
}

TEST_CASE("distributions are symmetric under negation") {
  for (Model model : kAllModels)
    for (int m = 1; m <= 7; ++m) {
      const auto d = distribution(model, m, 2, DistributionMethod::DynamicProgramming);
      BigInt sum = 0;
      for (const auto& [f, c] : d.counts) {
        CHECK(d.count(f.negate()) == c);
        sum += c;
      }
      CHECK(sum == d.total);
    }
}

TEST_CASE("simple tautology classification") {
  const Model C = Model::Catalan;
  CHECK(is_simple_tautology(parse_tree("(or x1 ~x1)", C)) == std::vector<int>{1});
  CHECK(is_simple_tautology(parse_tree("(or (or x1 x2) ~x1)", C)) == std::vector<int>{1});
  CHECK(is_simple_tautology(parse_tree("(or (and x1 x2) ~x1)", C)).empty());
  CHECK(is_simple_tautology(parse_tree("x1", C)).empty());
  CHECK(is_simple_contradiction(FlatTree::from_tree(parse_tree("(and x2 ~x2)", C))));
  // (x1 | ~x1) & (x2 | ~x2) is a tautology without the simple shape.
  const Tree t = parse_tree("(and (or x1 ~x1) (or x2 ~x2))", C);
  CHECK(compute_function(t, 2).is_true());
  CHECK(is_simple_tautology(t).empty());
}

TEST_CASE("simple x classification") {
  const Model C = Model::Catalan;
  CHECK(is_simple_x(parse_tree("(and x1 (or x2 ~x2))", C)).kind == SimpleXKind::XT);
  CHECK(is_simple_x(parse_tree("(or (and x2 ~x2) x1)", C)).kind == SimpleXKind::XT);
  const SimpleX s = is_simple_x(parse_tree("(and x1 (or x1 x2))", C));
  CHECK(s.kind == SimpleXKind::XX);
  CHECK(s.lit == Literal{1, false});
  CHECK(is_simple_x(parse_tree("(and x1 x2)", C)).kind == SimpleXKind::None);
  CHECK(is_simple_x(parse_tree("(or x1 (and x1 x2))", Model::Assoc)).kind == SimpleXKind::XX);
}

TEST_CASE("every simple x tree computes its literal") {
  for (Model model : kAllModels)
    for (const auto& t : generate_trees(model, 4, 2)) {
      const SimpleX s = is_simple_x(t);
      if (s.kind == SimpleXKind::None) continue;
      CHECK(compute_function(t, 2) == BoolFunc::literal(2, s.lit));
    }
}

TEST_CASE("brute-force tallies match the auxiliary series") {
  for (Model model : kAllModels)
    for (int n = 1; n <= 2; ++n) {
      const int order = 5;
      const ModelSeries ms = solve_model_series(model, n, order);
      const auto st = solve_aux_series(ms, AuxKind::ST_x);
      const auto g = solve_aux_series(ms, AuxKind::g_x);
      const auto gbar = solve_aux_series(ms, AuxKind::gbar_x);
      const auto all = solve_aux_series(ms, AuxKind::ST_all);
      for (int m = 1; m <= order; ++m) {
        const AuxCounts c = brute_aux_counts(model, m, n);
        CHECK(Rational(c.total) == ms.total[m]);
        CHECK(Rational(c.st_x) == st[m]);
        CHECK(Rational(c.g_x) == g[m]);
        CHECK(Rational(c.total - c.g_x) == gbar[m]);
        if (is_binary(model)) CHECK(Rational(c.gbar_x) == gbar[m]);
        CHECK(Rational(c.st_all) == all[m]);
      }
    }
}

TEST_CASE("tautology split adds up") {
  for (Model model : kAllModels) {
    const TautologySplit s = classify_tautologies(model, 4, 2);
    const auto d = distribution(model, 4, 2);
    CHECK(s.simple + s.non_simple == d.count(BoolFunc::constant(2, true)));
    CHECK(s.simple > 0);
  }
}

TEST_CASE("distribution serializers") {
  const auto d = distribution(Model::Comm, 2, 1);
  const std::string js = d.to_json();
  CHECK(js.find("\"schema\": \"boolform/v1\"") != std::string::npos);
  CHECK(js.find("\"total\": \"6\"") != std::string::npos);
  const std::string csv = d.to_csv();
  CHECK(csv.rfind("model,m,n,total,function,count\n", 0) == 0);
}
