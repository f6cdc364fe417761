#include "boolform/complexity.hpp"
#include "boolform/enumerate.hpp"

#include <doctest.h>

using namespace boolform;

namespace {

BoolFunc fn(int n, std::uint64_t w) { return BoolFunc::from_word(n, w); }

// L and M straight from the size-by-size distributions.
std::pair<int, BigInt> brute_complexity(const BoolFunc& f, Model model, int max_size) {
  for (int m = 1; m <= max_size; ++m) {
    const BigInt c = distribution(model, m, f.vars(), DistributionMethod::DynamicProgramming)
                         .count(f);
    if (c > 0) return {m, c};
  }
  return {0, 0};
}

// X-expansion count with the witness lit o (y o' z), y and z fresh.
int lambda_X_two_fresh(const MinimalTreeSet& ts) {
  const int n = ts.f.vars();
  int count = 0;
  for (const Tree& t : ts.trees) {
    const BoolFunc target = compute_function(t, n + 2);
    std::vector<Literal> lits;
    for (const Path& p : node_paths(t.root())) {
      const Node& nd = t.at(p);
      if (nd.leaf && std::find(lits.begin(), lits.end(), nd.lit) == lits.end())
        lits.push_back(nd.lit);
    }
    for (ExpansionSite s : expansion_sites(t))
      for (const Literal& l : lits) {
        const Conn top = s.conn == Conn::And ? Conn::Or : Conn::And;
        const RawTree w = RawTree::make(
            top, {RawTree::make_leaf(l),
                  RawTree::make(s.conn, {RawTree::make_leaf({n + 1, false}),
                                         RawTree::make_leaf({n + 2, false})})});
        if (compute_function(apply_expansion(t, s, w), n + 2) == target) ++count;
      }
  }
  return count;
}

}  // namespace

TEST_CASE("complexity of small functions") {
  const BoolFunc x1 = BoolFunc::variable(2, 1);
  const BoolFunc x2 = BoolFunc::variable(2, 2);
  for (Model model : kAllModels) {
    const auto a = complexity(x1, model);
    CHECK(a.L == 1);
    CHECK(a.M() == 1);
    const auto b = complexity(x1 & x2, model);
    CHECK(b.L == 2);
    CHECK(b.M() == (is_plane(model) ? 2 : 1));
    CHECK(complexity(fn(2, 0x6), model).L == 4);
    CHECK(complexity(BoolFunc::constant(2, true), model).L == 0);
  }
}

TEST_CASE("minimal sets agree with the distributions") {
  for (Model model : kAllModels)
    for (std::uint64_t w = 1; w < 15; ++w) {
      const BoolFunc f = fn(2, w);
      const auto ts = complexity(f, model);
      const auto [L, M] = brute_complexity(f, model, 6);
      CHECK(ts.L == L);
      CHECK(BigInt(ts.M()) == M);
      for (const Tree& t : ts.trees) CHECK(compute_function(t, 2) == f);
    }
}

TEST_CASE("complexity does not depend on the model for two variables") {
  for (std::uint64_t w = 0; w < 16; ++w) CHECK(complexity_model_independence(fn(2, w)));
  const auto per = complexity_per_model(fn(3, 0xE0));  // x1 & (x2 | x3)
  CHECK(per == std::array<int, 4>{3, 3, 3, 3});
}

TEST_CASE("expansion tallies for reference functions") {
  struct Row {
    Model model;
    int T1, X1, T2, X2, T3, X3;
  };
  const Row rows[] = {{Model::Catalan, 4, 4, 24, 32, 80, 112},
                      {Model::Assoc, 4, 4, 18, 20, 56, 76},
                      {Model::Comm, 2, 2, 6, 8, 10, 14},
                      {Model::AssocComm, 2, 2, 4, 4, 6, 8}};
  const BoolFunc x1 = BoolFunc::variable(3, 1);
  const BoolFunc x2 = BoolFunc::variable(3, 2);
  const BoolFunc x3 = BoolFunc::variable(3, 3);
  for (const Row& r : rows) {
    const auto a = enumerate_expansions(complexity(x1, r.model));
    CHECK(a.lambda_T == r.T1);
    CHECK(a.lambda_X == r.X1);
    const auto b = enumerate_expansions(complexity(x1 & x2, r.model));
    CHECK(b.lambda_T == r.T2);
    CHECK(b.lambda_X == r.X2);
    const auto c = enumerate_expansions(complexity(x1 | (x2 & x3), r.model));
    CHECK(c.lambda_T == r.T3);
    CHECK(c.lambda_X == r.X3);
  }
}

TEST_CASE("every reported expansion computes the same function") {
  const BoolFunc f = BoolFunc::variable(3, 1) | (BoolFunc::variable(3, 2) &
                                                 BoolFunc::variable(3, 3));
  for (Model model : kAllModels) {
    const auto ts = complexity(f, model);
    const auto tally = enumerate_expansions(ts);
    CHECK(static_cast<int>(tally.sites.size()) == tally.lambda_T + tally.lambda_X);
    int sum_t = 0, sum_x = 0;
    for (const auto& [t, x] : tally.per_tree) {
      sum_t += t;
      sum_x += x;
    }
    CHECK(sum_t == tally.lambda_T);
    CHECK(sum_x == tally.lambda_X);
    for (const auto& s : tally.sites) {
      const Tree& t = ts.trees[s.tree];
      const Tree e = apply_expansion(t, s, expansion_witness(s, 4));
      CHECK(e.size() == ts.L + 2);
      CHECK(compute_function(e, 4) == compute_function(t, 4));
    }
  }
}

TEST_CASE("a longer fresh witness gives the same X count") {
  for (Model model : kAllModels)
    for (std::uint64_t w : {0xCULL, 0x8ULL, 0x6ULL, 0xEULL}) {
      const auto ts = complexity(fn(2, w), model);
      CHECK(lambda_X_two_fresh(ts) == enumerate_expansions(ts).lambda_X);
    }
}

TEST_CASE("tallies are invariant under duality") {
  for (Model model : kAllModels)
    for (std::uint64_t w = 1; w < 15; ++w) {
      const BoolFunc f = fn(2, w);
      const auto a = enumerate_expansions(complexity(f, model));
      const auto b = enumerate_expansions(complexity(f.negate(), model));
      CHECK(a.lambda_T == b.lambda_T);
      CHECK(a.lambda_X == b.lambda_X);
    }
}

TEST_CASE("tallies stay within the counting bounds") {
  for (Model model : kAllModels)
    for (std::uint64_t w = 1; w < 255; ++w) {
      const BoolFunc f = fn(3, w);
      MinimalTreeSet ts;
      try {
        ts = complexity(f, model, 4);
      } catch (const ResourceError&) {
        continue;  // L > 4
      }
      const auto tally = enumerate_expansions(ts);
      const CountBounds cb = expansion_count_bounds(model, ts.L, ts.M());
      CHECK(tally.lambda_T >= cb.T_lower);
      CHECK(tally.lambda_T <= cb.T_upper);
      CHECK(tally.lambda_X >= cb.X_lower);
      CHECK(tally.lambda_X <= cb.X_upper);
      if (model == Model::Catalan) CHECK(tally.lambda_T == 4 * (2 * ts.L - 1) * ts.M());
      if (model == Model::Comm) CHECK(tally.lambda_T == 2 * (2 * ts.L - 1) * ts.M());
    }
}

TEST_CASE("closed-form bounds") {
  const auto c = lambda_bounds(Model::Catalan, 1, 1);
  CHECK(c.lower == doctest::Approx(0.3125));
  CHECK(c.upper == doctest::Approx(0.3125));
  const auto k = lambda_bounds(Model::Comm, 1, 1);
  CHECK(k.lower == doctest::Approx(1153.0 / 4096));
  CHECK(k.upper == doctest::Approx(1153.0 / 4096));
  CHECK(lambda_bounds(Model::Assoc, 1, 1).stated_for_L_above_1);
  CHECK(lambda_bounds(Model::AssocComm, 1, 1).stated_for_L_above_1);
  for (Model model : kAllModels)
    for (int L = 2; L <= 6; ++L)
      for (int M : {1, 2, 5}) {
        const auto b = lambda_bounds(model, L, M);
        CHECK(b.lower <= b.upper);
        CHECK(b.lower >= 0);
        CHECK(b.stated_for_L_above_1 == !is_binary(model));
      }
  CHECK_THROWS_AS(enumerate_expansions(complexity(BoolFunc::constant(2, false), Model::Comm)),
                  DomainError);
}

TEST_CASE("probability estimate for a literal in the plane model") {
  PrecisionScope p(192);
  const auto rep = probability_vs_bounds(BoolFunc::variable(1, 1), Model::Catalan, {200});
  REQUIRE(rep.points.size() == 1);
  CHECK(abs(rep.points[0].estimate - Real("0.3125")) / Real("0.3125") < Real("0.02"));
  CHECK(rep.L == 1);
  CHECK(rep.lambda_T == 4);
  CHECK(rep.to_json().find("\"schema\"") != std::string::npos);
}
