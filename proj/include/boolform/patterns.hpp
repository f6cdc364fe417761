#pragma once

#include "boolform/flat.hpp"
#include "boolform/numeric.hpp"
#include "boolform/tree.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace boolform {

// N: pattern leaves continue through every child of an or-node and through
// one child of an and-node, the other and-children become placeholders.
// R is the same rule on stratified trees of any arity. S is the dual (one
// child continues at or-nodes).
enum class PatternId { N, R, S };
std::string pattern_name(PatternId p);
PatternId parse_pattern(const std::string& name);
// N for the binary models, R for the associative ones.
PatternId model_pattern(Model model);
// Connective at which a single child continues.
Conn single_child_conn(PatternId p);

// Child chosen to continue at an internal node, keyed by the node's path.
// Nodes without an entry continue through child 0.
using ChoiceMap = std::map<Path, int>;

struct PatternMatch {
  PatternId pattern = PatternId::N;
  int depth = 1;                    // 1 for L, 2 for L[L]
  std::vector<Path> pattern_leaves;  // preorder
  std::vector<Path> placeholders;    // roots of plugged subtrees, preorder
  ChoiceMap choices;                 // continuing child per single-child node
};

// Deterministic top-down decomposition. On non-plane trees the child order
// is the canonical one unless `choice` overrides it.
PatternMatch match_pattern(const Tree& t, PatternId p, int depth = 1,
                           const ChoiceMap* choice = nullptr);

// Rebuilds the tree from the pattern skeleton, the pattern-leaf literals and
// the placeholder subtrees. Raises StructureError if they do not cover t.
Tree resubstitute(const Tree& t, const PatternMatch& m);

struct RestrictionCount {
  int pattern_leaves = 0;
  int distinct_vars = 0;
  int repetitions = 0;
  int restrictions = 0;
  std::vector<int> realized_essential;
};

// Essential variables are those of the function computed by the whole tree.
RestrictionCount count_restrictions(const Tree& t, const PatternMatch& m);
RestrictionCount count_restrictions(const Tree& t, PatternId p, int depth = 1);

inline constexpr std::uint64_t kDefaultEmbeddingCap = 1'000'000;

struct Embedding {
  PatternMatch match;
  RestrictionCount count;
  std::uint64_t orderings = 0;  // candidate choice assignments examined
};

// Exhaustive search over the continuing child at every single-child node,
// with per-subtree deduplication of (leaf count, variable set). Raises
// ResourceError when the candidate count passes the cap.
Embedding minimal_embedding(const Tree& t, PatternId p, int depth,
                            std::uint64_t cap = kDefaultEmbeddingCap);

// Flat fast paths used by the lemma sweep. `choose` searches over the
// continuing child (non-plane models); otherwise child 0 continues.
int min_restrictions(const FlatTree& t, PatternId p, int depth, bool choose,
                     std::uint32_t essential_mask);
// Truth table with every depth-1 pattern leaf replaced by `value`.
std::uint64_t eval_pattern_forced(const FlatTree& t, PatternId p, const WordEvaluator& ev,
                                  bool value);

struct LemmaRow {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t counterexamples = 0;
  std::vector<std::string> examples;  // first few counterexamples as text
};

struct LemmaReport {
  Model model = Model::Catalan;
  int max_size = 1;
  int n = 1;
  std::uint64_t trees = 0;
  std::uint64_t tautologies = 0;
  std::vector<LemmaRow> rows;
  bool ok() const;
  std::string to_json() const;
  std::string to_text() const;
};

// Sweeps every tree of size 1..max_size over n variables and checks:
// tautologies have at least one restriction (minimal embedding); a tautology
// whose minimal depth-2 restriction count is 1 is simple; forcing the model
// pattern's leaves to False gives False; forcing S-pattern leaves to True
// gives True.
LemmaReport verify_pattern_lemmas(Model model, int max_size, int n,
                                  std::uint64_t cap = 200'000'000);

// ---------------------------------------------------------------------------
// Labelling counts.

BigInt stirling2(int n, int k);
BigInt falling(long x, int k);
// w_{v,k}(l) = sum_r S2(l, l-r) C(v, k-r) (l-r)^{falling k-r}
BigInt labelling_weight(int v, int k, int l);
// Labellings with k restrictions relative to a fixed set of v essential
// variables: plane (n-v)^{l-k} n^{m-l} 2^m w, mobile (n-v)^{l-k} 2^l w.
BigInt labelling_count_formula(int m, int l, int n, int v, int k, bool mobile);
// Brute force over all (2n)^m labellings of the shape's leaves (labels of
// `shape` are ignored), with essential variables {1..v}. Entry k counts the
// labellings with k restrictions under the default depth-1 match. In mobile
// mode only the pattern leaves are labelled.
std::vector<BigInt> labelling_counts_brute(const Tree& shape, PatternId p, int n, int v,
                                           bool mobile);

}  // namespace boolform
