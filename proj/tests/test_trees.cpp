#include "boolform/enumerate.hpp"
#include "boolform/flat.hpp"
#include "boolform/tree.hpp"

#include <doctest.h>

#include <random>

using namespace boolform;

namespace {

bool eval_raw(const RawTree& r, const std::vector<bool>& x) {
  if (r.leaf) return x[r.lit.var - 1] != r.lit.negated;
  bool acc = r.conn == Conn::And;
  for (const auto& k : r.kids) {
    const bool v = eval_raw(k, x);
    acc = r.conn == Conn::And ? (acc && v) : (acc || v);
  }
  return acc;
}

// Truth table by direct recursive evaluation of the unvalidated tree.
BoolFunc oracle_function(const Tree& t, int n) {
  const RawTree r = to_raw(t);
  BoolFunc f = BoolFunc::constant(n, false);
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    std::vector<bool> x(n);
    for (int i = 0; i < n; ++i) x[i] = (a >> (n - 1 - i)) & 1U;
    f.set(a, eval_raw(r, x));
  }
  return f;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  for (const char* s : {"x1", "~x2", "(and x1 x2)", "(or (and x1 ~x2) x3)"}) {
    const Tree t = parse_tree(s, Model::Catalan);
    CHECK(t.to_text() == s);
  }
  const Tree a = parse_tree("(or x1 (and x2 x3) ~x4)", Model::Assoc);
  CHECK(a.to_text() == "(or x1 (and x2 x3) ~x4)");
  CHECK(a.size() == 4);
  CHECK(a.max_var() == 4);
}

TEST_CASE("model rules are enforced") {
  CHECK_THROWS_AS(parse_tree("(and x1 x2 x3)", Model::Catalan), StructureError);
  CHECK_THROWS_AS(parse_tree("(and x1 x2 x3)", Model::Comm), StructureError);
  CHECK_THROWS_AS(parse_tree("(and (and x1 x2) x3)", Model::Assoc), StructureError);
  CHECK_THROWS_AS(parse_tree("(or x1 (or x2 x3))", Model::AssocComm), StructureError);
  CHECK_THROWS_AS(parse_tree("(and x1)", Model::Assoc), StructureError);
  CHECK_NOTHROW(parse_tree("(and (and x1 x2) x3)", Model::Catalan));
  CHECK_THROWS_AS(parse_tree("(xor x1 x2)", Model::Catalan), InputError);
  CHECK_THROWS_AS(parse_tree("(and x1 x2", Model::Catalan), InputError);
  CHECK_THROWS_AS(parse_tree("x0", Model::Catalan), InputError);
  CHECK(parse_model("binary") == Model::Catalan);
  CHECK_THROWS_AS(parse_model("ternary"), InputError);
}

TEST_CASE("non-plane models identify child orders") {
  CHECK(parse_tree("(and x2 x1)", Model::Comm) == parse_tree("(and x1 x2)", Model::Comm));
  CHECK_FALSE(parse_tree("(and x2 x1)", Model::Catalan) ==
              parse_tree("(and x1 x2)", Model::Catalan));
  CHECK(parse_tree("(or (and x3 x1) x2 x1)", Model::AssocComm) ==
        parse_tree("(or x1 x2 (and x1 x3))", Model::AssocComm));
}

TEST_CASE("compute_function agrees with recursive evaluation") {
  for (Model model : kAllModels)
    for (int m = 1; m <= 4; ++m)
      for (const Tree& t : generate_trees(model, m, 2)) {
        CHECK(compute_function(t, 3) == oracle_function(t, 3));
      }
}

TEST_CASE("dual tree computes the negation") {
  for (Model model : kAllModels)
    for (const Tree& t : generate_trees(model, 4, 2)) {
      const Tree d = dual_tree(t);
      CHECK(compute_function(d, 2) == compute_function(t, 2).negate());
      CHECK(dual_tree(d) == t);
    }
}

TEST_CASE("flat encoding round trip and word evaluation") {
  const WordEvaluator ev(3);
  for (Model model : kAllModels)
    for (int m = 1; m <= 4; ++m)
      for (const Tree& t : generate_trees(model, m, 3, 10'000'000)) {
        const FlatTree f = FlatTree::from_tree(t);
        CHECK(f.size() == m);
        CHECK(f.to_tree(model) == t);
        CHECK(ev.eval(f) == compute_function(t, 3).word());
      }
}

TEST_CASE("flat byte order matches the canonical node order") {
  const auto trees = generate_trees(Model::AssocComm, 4, 2);
  for (std::size_t i = 0; i + 1 < trees.size(); i += 7) {
    const auto& a = trees[i];
    const auto& b = trees[i + 1];
    const int c = compare_nodes(a.root(), b.root());
    const auto fa = FlatTree::from_tree(a), fb = FlatTree::from_tree(b);
    CHECK((c < 0) == (fa < fb));
    CHECK((c == 0) == (fa == fb));
  }
}

TEST_CASE("node paths are preorder") {
  const Tree t = parse_tree("(or (and x1 x2) x3)", Model::Catalan);
  const auto paths = node_paths(t.root());
  REQUIRE(paths.size() == 5);
  CHECK(paths[0].empty());
  CHECK(paths[1] == Path{0});
  CHECK(paths[2] == Path{0, 0});
  CHECK(paths[4] == Path{1});
  CHECK(t.at({0, 1}).lit == Literal{2, false});
}
