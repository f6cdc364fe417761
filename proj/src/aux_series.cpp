#include "boolform/series.hpp"


namespace boolform {

std::string aux_name(AuxKind k) {
  switch (k) {
    case AuxKind::g_x: return "g_x";
    case AuxKind::gbar_x: return "gbar_x";
    case AuxKind::ST_x: return "ST_x";
    case AuxKind::STbar_x: return "STbar_x";
    case AuxKind::h_x: return "h_x";
    case AuxKind::simple_x_T: return "simple_x_T";
    case AuxKind::simple_x_X: return "simple_x_X";
    case AuxKind::ST_all: return "ST_all";
  }
  return "?";
}

AuxKind parse_aux(const std::string& name) {
  for (AuxKind k : {AuxKind::g_x, AuxKind::gbar_x, AuxKind::ST_x, AuxKind::STbar_x,
                    AuxKind::h_x, AuxKind::simple_x_T, AuxKind::simple_x_X, AuxKind::ST_all})
    if (aux_name(k) == name) return k;
  throw InputError("unknown series kind: " + name);
}

namespace {

PowerSeries z_times(const PowerSeries& s, const Rational& c) {
  return PowerSeries::monomial(s.order(), c, 1) * s;
}

PowerSeries lin(int order, long k) { return PowerSeries::monomial(order, Rational(k), 1); }

BigInt binom(int a, int b) {
  BigInt r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

}  // namespace

PowerSeries frontier_avoiding(const ModelSeries& ms, int k) {
  const int N = ms.total.order();
  const int n = ms.n;
  if (k < 0 || k > 2 * n) throw InputError("frontier exclusion count out of range");
  if (k == 0) return ms.total;
  switch (ms.model) {
    case Model::Catalan: {
      // N = (2n-k)z + T^2 + N^2
      const Expr known = Expr::constant(lin(N, 2 * n - k) + ms.total * ms.total);
      const Expr u = Expr::unknown(0);
      return solve_system({{"N"}, {known + u * u}}, N)[0];
    }
    case Model::Comm: {
      // N = (2n-k)z + (C^2 + C(z^2))/2 + (N^2 + N(z^2))/2
      const Rational half(1, 2);
      const Expr known = Expr::constant(
          lin(N, 2 * n - k) + (ms.total * ms.total + ms.total.subst_power(2)).scaled(half));
      const Expr u = Expr::unknown(0);
      return solve_system({{"N"}, {known + (u * u + u.subst(2)).scaled(half)}}, N)[0];
    }
    case Model::Assoc: {
      const PowerSeries rest = ms.half - lin(N, k);
      return lin(N, 2 * n - k) + (ms.half - lin(N, 2 * n)) + rest.seq_at_least2();
    }
    case Model::AssocComm: {
      const PowerSeries rest = ms.half - lin(N, k);
      return lin(N, 2 * n - k) + (ms.half - lin(N, 2 * n)) + rest.mset_at_least2();
    }
  }
  throw InputError("unknown model");
}

namespace {

PowerSeries st_x(const ModelSeries& ms) {
  return ms.total - frontier_avoiding(ms, 1).scaled(2) + frontier_avoiding(ms, 2);
}

PowerSeries g_x(const ModelSeries& ms) {
  const int N = ms.total.order();
  switch (ms.model) {
    case Model::Catalan:
    case Model::Comm:
      return ms.total - frontier_avoiding(ms, 1);
    case Model::Assoc: {
      // z / (1 - (A_hat - 2z))^2
      const PowerSeries r = (PowerSeries::constant(N, 1) - (ms.half - lin(N, 2))).reciprocal();
      return z_times(r * r, 1);
    }
    case Model::AssocComm:
      return z_times((ms.half - lin(N, 2)).polya_exp(1), 1);
  }
  throw InputError("unknown model");
}

PowerSeries st_all(const ModelSeries& ms) {
  // H(k): trees whose frontier contains k fixed literals.
  const int n = ms.n;
  std::vector<PowerSeries> avoid;
  for (int k = 0; k <= 2 * n; ++k) avoid.push_back(frontier_avoiding(ms, k));
  auto contains = [&](int k) {
    PowerSeries h(ms.total.order());
    for (int i = 0; i <= k; ++i) {
      const PowerSeries term = avoid[i].scaled(Rational(binom(k, i)));
      h = (i % 2 == 0) ? h + term : h - term;
    }
    return h;
  };
  PowerSeries out(ms.total.order());
  for (int j = 1; j <= n; ++j) {
    const PowerSeries term = contains(2 * j).scaled(Rational(binom(n, j)));
    out = (j % 2 == 1) ? out + term : out - term;
  }
  return out;
}

PowerSeries stbar_fixed_point(const ModelSeries& ms, const PowerSeries& g) {
  const int N = ms.total.order();
  const int n = ms.n;
  const Expr u = Expr::unknown(0);
  // v = g_x - ST^x = g_x - T + STbar: trees with x but not ~x on the frontier.
  const Expr v = Expr::constant(g - ms.total) + u;
  if (ms.model == Model::Catalan) {
    const Expr known = Expr::constant(lin(N, 2 * n) + ms.total * ms.total);
    return solve_system({{"STbar"}, {known + u * u - (v * v).scaled(2)}}, N)[0];
  }
  const Rational half(1, 2);
  const Expr known = Expr::constant(
      lin(N, 2 * n) + (ms.total * ms.total + ms.total.subst_power(2)).scaled(half));
  return solve_system({{"STbar"}, {known + (u * u + u.subst(2)).scaled(half) - v * v}}, N)[0];
}

}  // namespace

PowerSeries solve_aux_series(const ModelSeries& ms, AuxKind kind) {
  const int k = is_plane(ms.model) ? 4 : 2;
  switch (kind) {
    case AuxKind::g_x: return g_x(ms);
    case AuxKind::gbar_x:
      if (is_binary(ms.model)) return frontier_avoiding(ms, 1);
      return ms.total - g_x(ms);
    case AuxKind::ST_x: return st_x(ms);
    case AuxKind::STbar_x:
      if (is_binary(ms.model)) return stbar_fixed_point(ms, g_x(ms));
      return ms.total - st_x(ms);
    case AuxKind::h_x: {
      if (ms.model != Model::Catalan)
        throw DomainError("h_x is defined for the catalan model only");
      const PowerSeries v = g_x(ms) - st_x(ms);
      return (v * v).scaled(2);
    }
    case AuxKind::simple_x_T: return z_times(st_all(ms), k);
    case AuxKind::simple_x_X: return z_times(g_x(ms), k);
    case AuxKind::ST_all: return st_all(ms);
  }
  throw InputError("unknown series kind");
}

PowerSeries solve_aux_series(Model model, AuxKind kind, int n, int order) {
  return solve_aux_series(solve_model_series(model, n, order), kind);
}

SanityReport series_sanity(Model model, int n, int order) {
  SanityReport rep{model, n, order, {}, 0};
  auto add = [&](const std::string& name, const PowerSeries& a, const PowerSeries& b) {
    Rational d = max_abs_difference(a, b);
    rep.checks.push_back({name, d});
    if (d > rep.max_discrepancy) rep.max_discrepancy = d;
  };
  const SeriesSystem sys = model_system(model, n);
  const auto sol = solve_system(sys, order);
  for (std::size_t i = 0; i < sol.size(); ++i)
    add(sys.names[i] + " equation", sys.rhs[i].eval(sol, order), sol[i]);
  const ModelSeries ms = solve_model_series(model, n, order);
  const PowerSeries z2n = lin(order, 2 * n);
  switch (model) {
    case Model::Catalan:
    case Model::Comm:
      break;
    case Model::Assoc:
      add("A_hat = A_check", sol[0], sol[1]);
      add("A = A_hat + A_check - 2nz", ms.total, sol[0] + sol[1] - z2n);
      break;
    case Model::AssocComm: {
      add("P_hat = P_check", sol[0], sol[1]);
      // Explicit form P_hat = (exp(sum P_check(z^i)/i) - 1 + 2nz) / 2.
      PowerSeries e = sol[1].polya_exp(1);
      e[0] -= 1;
      add("P_hat explicit form", sol[0], (e + z2n).scaled(Rational(1, 2)));
      break;
    }
  }
  const PowerSeries g = solve_aux_series(ms, AuxKind::g_x);
  const PowerSeries gbar = solve_aux_series(ms, AuxKind::gbar_x);
  add("g_x + gbar_x = total", g + gbar, ms.total);
  const PowerSeries st = solve_aux_series(ms, AuxKind::ST_x);
  const PowerSeries stbar = solve_aux_series(ms, AuxKind::STbar_x);
  add("ST_x + STbar_x = total", st + stbar, ms.total);
  return rep;
}

}  // namespace boolform
