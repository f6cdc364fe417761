#pragma once

#include "boolform/numeric.hpp"
#include "boolform/series.hpp"
#include "boolform/tree.hpp"

#include <functional>
#include <string>
#include <vector>

namespace boolform {

struct SingularityReport {
  Model model = Model::Catalan;
  int n = 1;
  Real rho;
  Real value_at_rho;  // value of the model series at rho
  std::string method;  // "closed-form" or "numeric-system"
  int iterations = 0;
};

// Closed forms for Catalan/Assoc, fixed-point iteration on the singularity
// system for Comm/AssocComm. Uses the current default precision.
SingularityReport dominant_singularity(Model model, int n);

// Newton's method on {y = Phi(z, y), 1 = Phi_y(z, y)} for every model,
// ignoring closed forms. For Assoc the unknown y is A-hat.
SingularityReport numeric_singularity(Model model, int n);

// Value and first derivative of a series at a point.
struct Jet {
  Real value;
  Real deriv;
};

// High-precision evaluator of the model series and the two auxiliary series
// used by the constants, valid for 0 < z < rho.
class NumericModel {
 public:
  NumericModel(Model model, int n);

  Model model() const { return model_; }
  int n() const { return n_; }
  const Real& rho() const { return rho_; }
  const SingularityReport& singularity() const { return sing_; }

  Jet total(const Real& z) const;
  Jet st_x(const Real& z) const;
  Jet g_x(const Real& z) const;

 private:
  struct Point {
    Jet total, st, g;
  };
  Point at(const Real& z) const;

  Model model_;
  int n_;
  int order_;
  SingularityReport sing_;
  Real rho_;
  // Real coefficients of the series needed at z^k, k >= 2.
  std::vector<Real> half_, avoid1_, avoid2_;
};

struct LadderOptions {
  double eps0 = 1e-2;
  int rungs = 20;        // rungs 0..rungs, eps_k = eps0 / 2^k
  int max_column = 12;   // Richardson columns
  double tolerance = 1e-12;  // relative error required for convergence
};

struct RatioResult {
  std::string numerator;
  Real value;
  Real error;  // from successive extrapolants
  std::vector<Real> eps;
  std::vector<Real> raw;          // S'/T' per rung
  std::vector<Real> extrapolants;  // best column per rung
  int column = 0;
  bool converged = false;
};

// Ratio evaluated at z = rho (1 - eps).
using RatioFunction = std::function<Real(const Real& z)>;

// Ladder in eps with Richardson extrapolation in sqrt(eps). Raises
// NumericError with the raw sequence if the extrapolants do not settle.
RatioResult limiting_ratio(const RatioFunction& ratio, const Real& rho,
                           const LadderOptions& opt = {}, const std::string& name = "");

// Horner evaluation of truncated series. Rungs whose tail bound exceeds the
// working precision are dropped; at least three rungs must survive.
RatioResult limiting_ratio(const PowerSeries& num, const PowerSeries& den, const Real& rho,
                           const LadderOptions& opt = {}, const std::string& name = "");

enum class ConstantTarget { True, Literal };
std::string target_name(ConstantTarget t);

// w1 = n * lim ST_x'/T', w2 = lim g_x'/T' at a given n.
struct Weights {
  int n;
  Real rho;
  RatioResult st;  // lim ST_x'/T'
  RatioResult g;   // lim g_x'/T'
  Real w1() const { return st.value * n; }
  Real w2() const { return g.value; }
};
Weights expansion_weights(Model model, int n, const LadderOptions& opt = {});

// k rho, with k = 4 for plane and 2 for non-plane models.
int literal_site_factor(Model model);

struct ConstantEstimate {
  Model model;
  ConstantTarget target;
  std::vector<int> n_grid;
  std::vector<Real> values;  // n * ratio (True) or n^2 * ratio (Literal) per n
  Real lambda;               // fitted lambda in lambda + c/n
  Real slope;                // fitted c
  Real error;                // fit residual plus ladder errors
};

ConstantEstimate constant_estimate(Model model, ConstantTarget target,
                                   const std::vector<int>& n_grid,
                                   const LadderOptions& opt = {});

// Value at a single n of the quantity fitted by constant_estimate.
Real constant_at(Model model, ConstantTarget target, const Weights& w);

// Reference constants from the published table, as doubles.
double published_constant(Model model, ConstantTarget target);

}  // namespace boolform
