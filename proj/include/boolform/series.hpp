#pragma once

#include "boolform/numeric.hpp"
#include "boolform/tree.hpp"

#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace boolform {

inline constexpr int kDefaultSeriesOrder = 64;

// Truncated power series c_0 + c_1 z + ... + c_order z^order over Q.
class PowerSeries {
 public:
  PowerSeries() : c_(1, Rational(0)) {}
  explicit PowerSeries(int order);
  explicit PowerSeries(std::vector<Rational> coeffs);
  static PowerSeries constant(int order, const Rational& c);
  // c * z^k
  static PowerSeries monomial(int order, const Rational& c, int k);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_.at(i); }
  Rational& operator[](int i) { return c_.at(i); }
  // Coefficient, zero beyond the truncation.
  Rational coeff(int i) const { return i <= order() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  PowerSeries truncated(int order) const;
  // Lowest index with a nonzero coefficient; order()+1 for the zero series.
  int valuation() const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator-() const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scaled(const Rational& k) const;

  // S(z^k)
  PowerSeries subst_power(int k) const;
  // 1/S, needs c_0 != 0.
  PowerSeries reciprocal() const;
  // exp(S), needs c_0 == 0.
  PowerSeries exp() const;
  // exp(sum_{i >= from} S(z^i)/i), needs c_0 == 0.
  PowerSeries polya_exp(int from = 1) const;
  // Multisets of at least two elements: polya_exp(1) - 1 - S.
  PowerSeries mset_at_least2() const;
  // Sequences of at least two elements: S^2/(1-S).
  PowerSeries seq_at_least2() const;
  PowerSeries derivative() const;

  Real eval(const Real& z) const;
  Real eval_derivative(const Real& z) const;

  std::vector<std::string> to_strings() const;
  std::string to_json() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<Rational> c_;
};

// Symbolic right-hand side of a fixed-point system U_i = rhs_i(U, z).
class Expr {
 public:
  enum class Op { Const, Unknown, Add, Sub, Mul, Scale, Subst, Recip, Exp, PolyaExp, Mset2 };

  static Expr constant(PowerSeries s);
  static Expr unknown(int index);
  // c * z^k as a constant.
  static Expr monomial(const Rational& c, int k);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr scaled(const Rational& k) const;
  Expr subst(int k) const;
  Expr recip() const;
  Expr exp() const;
  Expr polya_exp(int from = 1) const;
  Expr mset_at_least2() const;

  PowerSeries eval(const std::vector<PowerSeries>& unknowns, int order) const;

  struct Node;
  const Node& node() const { return *node_; }
  static Expr wrap(std::shared_ptr<const Node> node);

 private:
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Op op;
  PowerSeries value;  // Const
  int index = 0;      // Unknown index, Subst power, PolyaExp start
  Rational factor;    // Scale
  std::vector<Expr> args;
};

struct SeriesSystem {
  std::vector<std::string> names;
  std::vector<Expr> rhs;
};

// Static dependency analysis: returns the minimal lag between a coefficient
// of any right-hand side and the unknown coefficients it reads. The system is
// well-founded iff the lag is >= 1.
int dependency_lag(const SeriesSystem& sys);

// Solves by iteration; raises StructureError when not well-founded and
// DomainError on reciprocal/exp preconditions.
std::vector<PowerSeries> solve_system(const SeriesSystem& sys, int order);

struct ModelSeries {
  Model model;
  int n;
  PowerSeries total;  // T, A, C or P
  // Assoc: A-hat (leaves and and-rooted trees); AssocComm: P-hat. For the
  // binary models this equals total.
  PowerSeries half;
};

ModelSeries solve_model_series(Model model, int n, int order = kDefaultSeriesOrder);

// The model's defining system (unknowns: total for binary models; A-hat,
// A-check or P-hat, P-check for the associative ones).
SeriesSystem model_system(Model model, int n);

enum class AuxKind { g_x, gbar_x, ST_x, STbar_x, h_x, simple_x_T, simple_x_X, ST_all };
std::string aux_name(AuxKind k);
AuxKind parse_aux(const std::string& name);

// Series of trees whose or-frontier avoids k fixed literals (k = 0 gives the
// model series).
PowerSeries frontier_avoiding(const ModelSeries& ms, int k);

PowerSeries solve_aux_series(const ModelSeries& ms, AuxKind kind);
PowerSeries solve_aux_series(Model model, AuxKind kind, int n, int order = kDefaultSeriesOrder);

struct SanityCheck {
  std::string name;
  Rational discrepancy;  // max |coefficient difference|
};
struct SanityReport {
  Model model;
  int n;
  int order;
  std::vector<SanityCheck> checks;
  Rational max_discrepancy;
  bool ok() const { return max_discrepancy == 0; }
};
SanityReport series_sanity(Model model, int n, int order);

Rational max_abs_difference(const PowerSeries& a, const PowerSeries& b);

}  // namespace boolform
