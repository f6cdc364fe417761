#pragma once

#include "boolform/flat.hpp"
#include "boolform/numeric.hpp"
#include "boolform/tree.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace boolform {

inline constexpr std::uint64_t kDefaultGenerationCap = 50'000'000;

// Exact number of canonical trees of size m over n variables (dynamic
// programming, no cap).
BigInt count_trees(Model model, int m, int n);
// Counts for sizes 0..m (entry 0 is zero).
std::vector<BigInt> count_trees_upto(Model model, int m, int n);

// Independent oracle: enumerates unlabelled shapes with connective labels and
// counts leaf labellings per shape (plane: (2n)^m; non-plane: multiset
// coefficients over isomorphic sibling groups).
BigInt count_trees_by_shapes(Model model, int m, int n);

// Count by visiting every tree; throws ResourceError above the cap.
std::uint64_t count_trees_exhaustive(Model model, int m, int n,
                                     std::uint64_t cap = kDefaultGenerationCap);

// Raises ResourceError when count_trees(model, m, n) exceeds cap.
void check_cap(Model model, int m, int n, std::uint64_t cap);

std::vector<Tree> generate_trees(Model model, int m, int n,
                                 std::uint64_t cap = kDefaultGenerationCap);

// ---------------------------------------------------------------------------
// Classifiers.

// Bit mask over Literal::code() of leaves joined to the root by paths whose
// internal nodes all carry `conn` (the root included; a leaf root qualifies).
std::uint64_t frontier_mask(const FlatTree& t, Conn conn, std::size_t pos = 0);

// Variables whose two literals both lie on the or-frontier.
std::vector<int> simple_tautology_vars(const FlatTree& t);
std::vector<int> is_simple_tautology(const Tree& t);
bool is_simple_tautology_for(const FlatTree& t, int var);
// Dual notion: both literals on the and-frontier.
bool is_simple_contradiction(const FlatTree& t, std::size_t pos = 0);

// Membership in the class counted by the model's g_x series for literal x.
// Catalan/Comm: x lies on the or-frontier. Assoc/AssocComm: the leaf x, or an
// or-rooted tree with exactly one child leaf x and no child leaf ~x.
bool in_gx_class(const FlatTree& t, Model model, Literal x, std::size_t pos = 0);
// Dual of in_gx_class (and-frontier, and-rooted).
bool in_gx_class_dual(const FlatTree& t, Model model, Literal x, std::size_t pos = 0);

enum class SimpleXKind { None, XT, XX };
struct SimpleX {
  SimpleXKind kind = SimpleXKind::None;
  Literal lit{};
};
std::string to_string(SimpleXKind k);

// Binary root with a leaf l and a companion S. x_T if S is a simple
// tautology under and (simple contradiction under or); otherwise x_X if S is
// in l's g_x class under and (its dual under or).
SimpleX is_simple_x(const FlatTree& t, Model model);
SimpleX is_simple_x(const Tree& t);

struct TautologySplit {
  BigInt simple;
  BigInt non_simple;
};
TautologySplit classify_tautologies(Model model, int m, int n,
                                    std::uint64_t cap = kDefaultGenerationCap);

// Brute-force tallies for one size, all relative to the literal x.
struct AuxCounts {
  BigInt total;
  BigInt st_x;        // simple tautologies realised by x's variable
  BigInt g_x;         // model g_x class for x
  BigInt gbar_x;      // or-frontier avoids x
  BigInt u_x;         // or-frontier avoids x and ~x
  BigInt st_all;      // simple tautologies for some variable
  BigInt simple_x_T;  // classified x_T with literal x
  BigInt simple_x_X;  // classified x_X with literal x
};
AuxCounts brute_aux_counts(Model model, int m, int n, Literal x = {1, false},
                           std::uint64_t cap = kDefaultGenerationCap,
                           bool parallel = true);

// ---------------------------------------------------------------------------
// Distributions.

struct Distribution {
  Model model = Model::Catalan;
  int m = 1;
  int n = 1;
  std::map<BoolFunc, BigInt> counts;
  BigInt total;

  BigInt count(const BoolFunc& f) const;
  std::string to_json() const;
  std::string to_csv() const;
};

enum class DistributionMethod { Auto, DynamicProgramming, ExhaustiveSerial, ExhaustiveParallel };

// Auto: exhaustive (parallel) within the cap, otherwise dynamic programming
// over function classes.
Distribution distribution(Model model, int m, int n,
                          DistributionMethod method = DistributionMethod::Auto,
                          std::uint64_t cap = kDefaultGenerationCap);

// Word-indexed tallies (n <= 6) used by the exhaustive paths.
using WordCounts = std::map<std::uint64_t, std::uint64_t>;
WordCounts distribution_words_serial(Model model, int m, int n);
WordCounts distribution_words_parallel(Model model, int m, int n);
// Dynamic programming over function classes, exact big-integer counts.
std::map<std::uint64_t, BigInt> distribution_words_dp(Model model, int m, int n);

}  // namespace boolform
