#include "boolform/series.hpp"

#include <json.hpp>

#include <algorithm>

namespace boolform {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw InputError("series order must be >= 0");
  c_.assign(order + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(Rational(0));
}

PowerSeries PowerSeries::constant(int order, const Rational& c) {
  PowerSeries s(order);
  s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(int order, const Rational& c, int k) {
  PowerSeries s(order);
  if (k <= order) s.c_[k] = c;
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries s(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) s.c_[i] = c_[i];
  return s;
}

int PowerSeries::valuation() const {
  for (int i = 0; i <= order(); ++i)
    if (c_[i] != 0) return i;
  return order() + 1;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  const int N = std::min(order(), o.order());
  PowerSeries s(N);
  for (int i = 0; i <= N; ++i) s.c_[i] = c_[i] + o.c_[i];
  return s;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  const int N = std::min(order(), o.order());
  PowerSeries s(N);
  for (int i = 0; i <= N; ++i) s.c_[i] = c_[i] - o.c_[i];
  return s;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s(order());
  for (int i = 0; i <= order(); ++i) s.c_[i] = -c_[i];
  return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const int N = std::min(order(), o.order());
  PowerSeries s(N);
  const int va = valuation(), vb = o.valuation();
  for (int i = va; i <= N; ++i) {
    if (c_[i] == 0) continue;
    for (int j = vb; i + j <= N; ++j)
      if (o.c_[j] != 0) s.c_[i + j] += c_[i] * o.c_[j];
  }
  return s;
}

PowerSeries PowerSeries::scaled(const Rational& k) const {
  PowerSeries s(order());
  for (int i = 0; i <= order(); ++i) s.c_[i] = c_[i] * k;
  return s;
}

PowerSeries PowerSeries::subst_power(int k) const {
  if (k < 1) throw InputError("substitution power must be >= 1");
  PowerSeries s(order());
  for (int i = 0; i * k <= order(); ++i) s.c_[i * k] = c_[i];
  return s;
}

PowerSeries PowerSeries::reciprocal() const {
  if (c_[0] == 0) throw DomainError("reciprocal of a series with zero constant term");
  PowerSeries b(order());
  const Rational inv = 1 / c_[0];
  b.c_[0] = inv;
  for (int m = 1; m <= order(); ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k)
      if (c_[k] != 0) acc += c_[k] * b.c_[m - k];
    b.c_[m] = -acc * inv;
  }
  return b;
}

PowerSeries PowerSeries::exp() const {
  if (c_[0] != 0) throw DomainError("exp of a series with nonzero constant term");
  PowerSeries e(order());
  e.c_[0] = 1;
  for (int m = 1; m <= order(); ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k)
      if (c_[k] != 0) acc += k * c_[k] * e.c_[m - k];
    e.c_[m] = acc / m;
  }
  return e;
}

PowerSeries PowerSeries::polya_exp(int from) const {
  if (c_[0] != 0) throw DomainError("Polya exponential needs a zero constant term");
  PowerSeries sum(order());
  for (int i = std::max(1, from); i <= order(); ++i) {
    const Rational inv(1, i);
    for (int j = 1; i * j <= order(); ++j)
      if (c_[j] != 0) sum.c_[i * j] += c_[j] * inv;
  }
  return sum.exp();
}

PowerSeries PowerSeries::mset_at_least2() const {
  PowerSeries e = polya_exp(1);
  e.c_[0] -= 1;
  return e - *this;
}

PowerSeries PowerSeries::seq_at_least2() const {
  return (*this * *this) * (PowerSeries::constant(order(), 1) - *this).reciprocal();
}

PowerSeries PowerSeries::derivative() const {
  PowerSeries d(std::max(0, order() - 1));
  for (int i = 1; i <= order(); ++i) d.c_[i - 1] = c_[i] * i;
  return d;
}

Real PowerSeries::eval(const Real& z) const {
  Real acc = 0;
  for (int i = order(); i >= 0; --i) acc = acc * z + to_real(c_[i]);
  return acc;
}

Real PowerSeries::eval_derivative(const Real& z) const {
  Real acc = 0;
  for (int i = order(); i >= 1; --i) acc = acc * z + to_real(c_[i]) * i;
  return acc;
}

std::vector<std::string> PowerSeries::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : c_) out.push_back(to_string(c));
  return out;
}

std::string PowerSeries::to_json() const {
  return nlohmann::json(to_strings()).dump();
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  const int N = std::max(a.order(), b.order());
  for (int i = 0; i <= N; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

Rational max_abs_difference(const PowerSeries& a, const PowerSeries& b) {
  const int N = std::min(a.order(), b.order());
  Rational best = 0;
  for (int i = 0; i <= N; ++i) {
    Rational d = abs(a[i] - b[i]);
    if (d > best) best = d;
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {
Expr make(Expr::Op op, std::vector<Expr> args, int index = 0, Rational factor = 0) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->args = std::move(args);
  n->index = index;
  n->factor = factor;
  return Expr::wrap(std::move(n));
}
}  // namespace

Expr Expr::wrap(std::shared_ptr<const Node> node) {
  Expr e;
  e.node_ = std::move(node);
  return e;
}

Expr Expr::constant(PowerSeries s) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = std::move(s);
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::unknown(int index) {
  auto n = std::make_shared<Node>();
  n->op = Op::Unknown;
  n->index = index;
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::monomial(const Rational& c, int k) {
  // Order is fixed at evaluation time; store the monomial at its own degree.
  return constant(PowerSeries::monomial(k, c, k));
}

Expr operator+(const Expr& a, const Expr& b) { return make(Expr::Op::Add, {a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return make(Expr::Op::Sub, {a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return make(Expr::Op::Mul, {a, b}); }
Expr Expr::scaled(const Rational& k) const { return make(Op::Scale, {*this}, 0, k); }
Expr Expr::subst(int k) const { return make(Op::Subst, {*this}, k); }
Expr Expr::recip() const { return make(Op::Recip, {*this}); }
Expr Expr::exp() const { return make(Op::Exp, {*this}); }
Expr Expr::polya_exp(int from) const { return make(Op::PolyaExp, {*this}, from); }
Expr Expr::mset_at_least2() const { return make(Op::Mset2, {*this}); }

PowerSeries Expr::eval(const std::vector<PowerSeries>& u, int order) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Const: return n.value.truncated(order);
    case Op::Unknown: return u.at(n.index).truncated(order);
    case Op::Add: return n.args[0].eval(u, order) + n.args[1].eval(u, order);
    case Op::Sub: return n.args[0].eval(u, order) - n.args[1].eval(u, order);
    case Op::Mul: return n.args[0].eval(u, order) * n.args[1].eval(u, order);
    case Op::Scale: return n.args[0].eval(u, order).scaled(n.factor);
    case Op::Subst: return n.args[0].eval(u, order).subst_power(n.index);
    case Op::Recip: return n.args[0].eval(u, order).reciprocal();
    case Op::Exp: return n.args[0].eval(u, order).exp();
    case Op::PolyaExp: return n.args[0].eval(u, order).polya_exp(n.index);
    case Op::Mset2: return n.args[0].eval(u, order).mset_at_least2();
  }
  throw StructureError("bad expression node");
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kInf = 1 << 20;

int sat_add(int a, int b) { return (a >= kInf || b >= kInf) ? kInf : std::min(kInf, a + b); }

struct Facts {
  int val;    // lower bound on valuation
  int shift;  // lag between output coefficients and unknown coefficients read
};

Facts analyse(const Expr& e, const std::vector<int>& uval) {
  const auto& n = e.node();
  using Op = Expr::Op;
  switch (n.op) {
    case Op::Const: {
      int v = n.value.valuation();
      return {v > n.value.order() ? kInf : v, kInf};
    }
    case Op::Unknown: return {uval.at(n.index), 0};
    case Op::Add:
    case Op::Sub: {
      Facts a = analyse(n.args[0], uval), b = analyse(n.args[1], uval);
      return {std::min(a.val, b.val), std::min(a.shift, b.shift)};
    }
    case Op::Mul: {
      Facts a = analyse(n.args[0], uval), b = analyse(n.args[1], uval);
      return {sat_add(a.val, b.val),
              std::min(sat_add(a.shift, b.val), sat_add(b.shift, a.val))};
    }
    case Op::Scale: {
      Facts a = analyse(n.args[0], uval);
      return n.factor == 0 ? Facts{kInf, kInf} : a;
    }
    case Op::Subst: {
      Facts a = analyse(n.args[0], uval);
      const int k = n.index;
      const int v = a.val >= kInf ? kInf : k * a.val;
      const int s = (k >= 2 && a.val >= 1) ? sat_add(a.shift, 1) : a.shift;
      return {v, s};
    }
    case Op::Recip: {
      Facts a = analyse(n.args[0], uval);
      if (a.val != 0)
        throw StructureError("reciprocal of a series without constant term");
      return {0, a.shift};
    }
    case Op::Exp:
    case Op::PolyaExp: {
      Facts a = analyse(n.args[0], uval);
      if (a.val < 1) throw StructureError("exponential of a series with constant term");
      const int s = (n.op == Op::PolyaExp && n.index >= 2) ? sat_add(a.shift, 1) : a.shift;
      return {0, s};
    }
    case Op::Mset2: {
      Facts a = analyse(n.args[0], uval);
      if (a.val < 1) throw StructureError("multiset of a series with constant term");
      return {sat_add(a.val, a.val), sat_add(a.shift, std::min(a.val, 1))};
    }
  }
  throw StructureError("bad expression node");
}

std::vector<int> unknown_valuations(const SeriesSystem& sys) {
  std::vector<int> uval(sys.rhs.size(), kInf);
  for (int it = 0; it < 256; ++it) {
    bool changed = false;
    for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
      int v = analyse(sys.rhs[i], uval).val;
      if (v < uval[i]) {
        uval[i] = v;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return uval;
}

}  // namespace

int dependency_lag(const SeriesSystem& sys) {
  const auto uval = unknown_valuations(sys);
  int lag = kInf;
  for (const auto& r : sys.rhs) lag = std::min(lag, analyse(r, uval).shift);
  return lag;
}

std::vector<PowerSeries> solve_system(const SeriesSystem& sys, int order) {
  if (order < 0) throw InputError("series order must be >= 0");
  if (dependency_lag(sys) < 1)
    throw StructureError("ill-founded equation: a coefficient depends on itself");
  std::vector<PowerSeries> u(sys.rhs.size(), PowerSeries(0));
  for (int t = 0; t <= order; ++t) {
    std::vector<PowerSeries> next;
    next.reserve(u.size());
    for (const auto& r : sys.rhs) next.push_back(r.eval(u, t));
    u = std::move(next);
  }
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!(sys.rhs[i].eval(u, order) == u[i]))
      throw NumericError("fixed point did not stabilise for " + sys.names.at(i));
  return u;
}

// ---------------------------------------------------------------------------

SeriesSystem model_system(Model model, int n) {
  const Expr lin = Expr::monomial(Rational(2 * n), 1);
  const Expr u0 = Expr::unknown(0), u1 = Expr::unknown(1);
  const Expr one = Expr::monomial(Rational(1), 0);
  switch (model) {
    case Model::Catalan:
      return {{"T"}, {lin + (u0 * u0).scaled(2)}};
    case Model::Comm:
      return {{"C"}, {lin + u0 * u0 + u0.subst(2)}};
    case Model::Assoc:
      return {{"A_hat", "A_check"},
              {lin + (u1 * u1) * (one - u1).recip(), lin + (u0 * u0) * (one - u0).recip()}};
    case Model::AssocComm:
      return {{"P_hat", "P_check"}, {lin + u1.mset_at_least2(), lin + u0.mset_at_least2()}};
  }
  throw InputError("unknown model");
}

ModelSeries solve_model_series(Model model, int n, int order) {
  if (n < 1) throw InputError("variable count must be >= 1");
  if (order < 1) throw InputError("series order must be >= 1");
  auto sol = solve_system(model_system(model, n), order);
  ModelSeries ms{model, n, sol[0], sol[0]};
  if (!is_binary(model))
    ms.total = sol[0].scaled(2) - PowerSeries::monomial(order, Rational(2 * n), 1);
  return ms;
}

}  // namespace boolform
