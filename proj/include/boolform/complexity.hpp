#pragma once

#include "boolform/boolfun.hpp"
#include "boolform/singular.hpp"
#include "boolform/tree.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace boolform {

struct MinimalTreeSet {
  BoolFunc f;
  Model model = Model::Catalan;
  int L = 0;
  std::vector<Tree> trees;  // canonical, in generation order
  int M() const { return static_cast<int>(trees.size()); }
};

inline constexpr int kDefaultComplexityMaxSize = 8;

// Smallest trees computing f (n = f.vars() <= 6). Constants give L = 0 and no
// trees. Raises ResourceError when a searched size has more than `cap` trees
// or no tree up to max_size computes f.
MinimalTreeSet complexity(const BoolFunc& f, Model model,
                          int max_size = kDefaultComplexityMaxSize,
                          std::uint64_t cap = 50'000'000);

// L(f) per model in kAllModels order.
std::array<int, 4> complexity_per_model(const BoolFunc& f,
                                        int max_size = kDefaultComplexityMaxSize);
bool complexity_model_independence(const BoolFunc& f,
                                   int max_size = kDefaultComplexityMaxSize);

enum class ExpansionKind { T, X };
// Wrap: a new node with connective `conn` replaces the subtree at `path` and
// gets that subtree and the inserted tree as children. Insert: the inserted
// tree becomes a new child of the internal node at `path`.
enum class SiteForm { Wrap, Insert };

struct ExpansionSite {
  int tree = 0;  // index into MinimalTreeSet::trees
  Path path;
  SiteForm form = SiteForm::Wrap;
  Conn conn = Conn::And;  // connective of the inserted tree's parent
  int position = 0;       // index of the inserted tree among its siblings
  ExpansionKind kind = ExpansionKind::T;
  Literal lit{};          // X-expansions only
};

// Candidate sites of a tree under the model's insertion rules, with kind T
// and no literal.
std::vector<ExpansionSite> expansion_sites(const Tree& t);

// Witness subtree hung at a site: y | ~y (T under and), y & ~y (T under or),
// lit | y (X under and), lit & y (X under or), where y = x_{fresh_var}.
RawTree expansion_witness(const ExpansionSite& s, int fresh_var);
Tree apply_expansion(const Tree& t, const ExpansionSite& s, const RawTree& inserted);

struct ExpansionTally {
  int lambda_T = 0;
  int lambda_X = 0;
  std::vector<std::pair<int, int>> per_tree;  // (T, X) per minimal tree
  std::vector<ExpansionSite> sites;           // every valid expansion
};

// Counts valid T- and X-expansions over all minimal trees; X-expansions are
// realised by the literals on the leaves of each tree. Validity is
// checked by truth table on n + 1 variables. Raises DomainError for constants.
ExpansionTally enumerate_expansions(const MinimalTreeSet& ts);

// Ranges for the expansion counts, from the per-model site arguments.
struct CountBounds {
  int T_lower = 0, T_upper = 0;
  int X_lower = 0, X_upper = 0;
};
CountBounds expansion_count_bounds(Model model, int L, int M);

// Published closed-form bounds on lambda_f.
struct LambdaBounds {
  double lower = 0;
  double upper = 0;
  int L = 0;
  int M = 0;
  bool stated_for_L_above_1 = false;  // the published bound assumes L > 1
};
LambdaBounds lambda_bounds(Model model, int L, int M);
LambdaBounds lambda_bounds(const BoolFunc& f, Model model);

struct ProbabilityPoint {
  int n = 0;
  Real estimate;  // n^{L+1} rho^L (lambda_T w1 + lambda_X w2)
};

struct ProbabilityReport {
  BoolFunc f;
  Model model = Model::Catalan;
  int L = 0;
  int M = 0;
  int lambda_T = 0;
  int lambda_X = 0;
  LambdaBounds bounds;
  std::vector<ProbabilityPoint> points;
  Real extrapolated;  // fit estimate = lambda + c/n over the grid
  bool within_bounds = false;  // extrapolated value inside [lower, upper] +- tolerance
  std::string to_json() const;
};

// The extrapolation needs at least two grid points; a single point is used
// as is.
ProbabilityReport probability_vs_bounds(const BoolFunc& f, Model model,
                                        const std::vector<int>& n_grid,
                                        double rel_tolerance = 1e-3);

// Expansion identity at one n, from precomputed tallies and weights.
Real expansion_estimate(int L, int lambda_T, int lambda_X, const Weights& w);

}  // namespace boolform
