#include "boolform/singular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace boolform {

namespace {

unsigned working_bits() {
  return static_cast<unsigned>(std::ceil(Real::default_precision() / 0.30102999566398120));
}

Real tiny() { return pow(Real(2), -static_cast<int>(working_bits()) + 8); }

std::vector<Real> to_reals(const PowerSeries& s) {
  std::vector<Real> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.push_back(to_real(c));
  return out;
}

Real horner(const std::vector<Real>& c, const Real& x) {
  Real acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Real horner_deriv(const std::vector<Real>& c, const Real& x) {
  Real acc = 0;
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * x + c[i] * static_cast<long>(i);
  return acc;
}

// Order needed so that sum_{m > N} c_m z^{2m} is below the working precision
// when c_m grows like rho^-m and z^2 ~ rho^2.
int aux_order(double rho) {
  const double bits = working_bits();
  const int need = static_cast<int>(std::ceil(bits * std::log(2.0) / -std::log(rho))) + 16;
  return std::max(48, need);
}

double rough_rho(Model model, int n) {
  switch (model) {
    case Model::Catalan: return 1.0 / (16.0 * n);
    case Model::Assoc: return (3 - 2 * std::sqrt(2.0)) / (2.0 * n);
    case Model::Comm: return 1.0 / (8.0 * n) * 0.9;
    case Model::AssocComm: return (2 * std::log(2.0) - 1) / (2.0 * n) * 1.2;
  }
  return 0.1;
}

// Pi(z) = exp(sum_{i>=2} P_hat(z^i)/i) and its logarithmic derivative.
struct PiValue {
  Real value, dlog;
};

PiValue polya_pi(const std::vector<Real>& half, const Real& z) {
  Real sum = 0, dlog = 0;
  Real zi = z;  // z^(i-1)
  const Real eps = tiny();
  for (std::size_t i = 2; i < half.size(); ++i) {
    const Real prev = zi;
    zi *= z;
    if (zi < eps * eps) break;
    sum += horner(half, zi) / static_cast<long>(i);
    dlog += prev * horner_deriv(half, zi);
  }
  return {exp(sum), dlog};
}

}  // namespace

// ---------------------------------------------------------------------------

namespace {

struct Phi {
  Real v, z, y, yz, yy;
};

struct SystemData {
  Model model;
  int n;
  std::vector<Real> half;  // C for Comm, P_hat for AssocComm
};

Phi phi(const SystemData& d, const Real& z, const Real& y) {
  const int n = d.n;
  switch (d.model) {
    case Model::Catalan:
      return {2 * n * z + 2 * y * y, Real(2 * n), 4 * y, Real(0), Real(4)};
    case Model::Assoc: {
      const Real w = 1 - y;
      return {2 * n * z + y * y / w, Real(2 * n), (2 * y - y * y) / (w * w), Real(0),
              2 / (w * w * w)};
    }
    case Model::Comm: {
      const Real z2 = z * z;
      return {2 * n * z + y * y + horner(d.half, z2), 2 * n + 2 * z * horner_deriv(d.half, z2),
              2 * y, Real(0), Real(2)};
    }
    case Model::AssocComm: {
      const PiValue p = polya_pi(d.half, z);
      const Real e = exp(y) * p.value;
      return {(e - 1 + 2 * n * z) / 2, (e * p.dlog + 2 * n) / 2, e / 2, e * p.dlog / 2, e / 2};
    }
  }
  throw InputError("unknown model");
}

SystemData system_data(Model model, int n) {
  SystemData d{model, n, {}};
  if (model == Model::Comm || model == Model::AssocComm) {
    const int order = aux_order(rough_rho(model, n));
    d.half = to_reals(solve_model_series(model, n, order).half);
  }
  return d;
}

}  // namespace

SingularityReport dominant_singularity(Model model, int n) {
  if (n < 1) throw InputError("variable count must be >= 1");
  SingularityReport r;
  r.model = model;
  r.n = n;
  switch (model) {
    case Model::Catalan:
      r.rho = Real(1) / (16 * n);
      r.value_at_rho = Real(1) / 4;
      r.method = "closed-form";
      return r;
    case Model::Assoc:
      r.rho = (3 - 2 * sqrt(Real(2))) / (2 * n);
      r.value_at_rho = sqrt(Real(2)) - 1;
      r.method = "closed-form";
      return r;
    default:
      break;
  }
  const SystemData d = system_data(model, n);
  r.method = "numeric-system";
  const Real eps = tiny();
  Real z = model == Model::Comm ? Real(1) / (8 * n) : (2 * log(Real(2)) - 1) / (2 * n);
  for (int it = 1; it <= 10000; ++it) {
    Real next;
    if (model == Model::Comm)
      next = (Real(1) / 4 - horner(d.half, z * z)) / (2 * n);
    else
      next = (log(Real(2)) - Real(1) / 2 - log(polya_pi(d.half, z).value)) / n;
    const Real delta = abs(next - z);
    z = next;
    r.iterations = it;
    if (delta <= eps * z) {
      r.rho = z;
      if (model == Model::Comm) {
        Real disc = 1 - 4 * (2 * n * z + horner(d.half, z * z));
        if (disc < 0) disc = 0;
        r.value_at_rho = (1 - sqrt(disc)) / 2;
      } else {
        r.value_at_rho = Real(1) / 2 + n * z;
      }
      return r;
    }
  }
  throw NumericError("singularity iteration did not converge for " + model_name(model) +
                     " n=" + std::to_string(n) + "; last z=" + to_decimal(z, 20));
}

SingularityReport numeric_singularity(Model model, int n) {
  if (n < 1) throw InputError("variable count must be >= 1");
  const SystemData d = system_data(model, n);
  Real z = rough_rho(model, n);
  Real y;
  switch (model) {
    case Model::Catalan: y = 0.2; break;
    case Model::Assoc: y = 0.3; break;
    case Model::Comm: y = 0.45; break;
    case Model::AssocComm: y = 0.6; break;
  }
  SingularityReport r;
  r.model = model;
  r.n = n;
  r.method = "numeric-system";
  const Real eps = tiny();
  for (int it = 1; it <= 500; ++it) {
    const Phi p = phi(d, z, y);
    const Real f1 = p.v - y, f2 = p.y - 1;
    // Jacobian of (f1, f2) in (z, y).
    const Real a = p.z, b = p.y - 1, c = p.yz, e = p.yy;
    const Real det = a * e - b * c;
    if (det == 0) break;
    Real dz = (f1 * e - b * f2) / det;
    Real dy = (a * f2 - c * f1) / det;
    // Keep iterates inside the region where the series converge.
    Real step = 1;
    while (z - step * dz <= 0 && step > eps) step /= 2;
    z -= step * dz;
    y -= step * dy;
    r.iterations = it;
    if (abs(dz) <= eps * abs(z) && abs(dy) <= eps * (1 + abs(y))) {
      r.rho = z;
      r.value_at_rho = is_binary(model) ? y : Real(2 * y - 2 * n * z);
      if (model == Model::AssocComm) r.value_at_rho = y;
      return r;
    }
  }
  throw NumericError("Newton iteration on the singularity system did not converge for " +
                     model_name(model) + " n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------

NumericModel::NumericModel(Model model, int n)
    : model_(model), n_(n), order_(0), sing_(dominant_singularity(model, n)), rho_(sing_.rho) {
  if (model == Model::Comm || model == Model::AssocComm) {
    order_ = aux_order(rough_rho(model, n));
    const ModelSeries ms = solve_model_series(model, n, order_);
    half_ = to_reals(ms.half);
    if (model == Model::Comm) {
      avoid1_ = to_reals(frontier_avoiding(ms, 1));
      avoid2_ = to_reals(frontier_avoiding(ms, 2));
    }
  }
}

namespace {

Jet seq2(const Real& x, const Real& dx) {
  const Real w = 1 - x;
  return {x * x / w, dx * x * (2 - x) / (w * w)};
}

}  // namespace

NumericModel::Point NumericModel::at(const Real& z) const {
  if (!(z > 0) || !(z < rho_)) throw DomainError("evaluation point outside (0, rho)");
  const int n = n_;
  Point p;
  switch (model_) {
    case Model::Catalan: {
      const Real R = sqrt(1 - 16 * n * z);
      const Real T = (1 - R) / 4, dT = 2 * n / R;
      Jet N[3];
      for (int k = 1; k <= 2; ++k) {
        const Real K = (2 * n - k) * z + T * T, dK = (2 * n - k) + 2 * T * dT;
        const Real S = sqrt(1 - 4 * K);
        N[k] = {(1 - S) / 2, dK / S};
      }
      p.total = {T, dT};
      p.st = {T - 2 * N[1].value + N[2].value, dT - 2 * N[1].deriv + N[2].deriv};
      p.g = {T - N[1].value, dT - N[1].deriv};
      return p;
    }
    case Model::Assoc: {
      const Real D = 1 - 12 * n * z + 4 * Real(n) * n * z * z;
      const Real sD = sqrt(D);
      const Real dD = -12 * n + 8 * Real(n) * n * z;
      const Real A = (1 - 2 * n * z - sD) / 2;
      const Real dA = (-2 * n - dD / (2 * sD)) / 2;
      const Real K = (A + 2 * n * z) / 2, dK = (dA + 2 * n) / 2;
      const Jet s0 = seq2(K, dK), s1 = seq2(K - z, dK - 1), s2 = seq2(K - 2 * z, dK - 2);
      const Real w = 1 - K + 2 * z;
      p.total = {A, dA};
      p.st = {s0.value - 2 * s1.value + s2.value, s0.deriv - 2 * s1.deriv + s2.deriv};
      p.g = {z / (w * w), 1 / (w * w) + 2 * z * (dK - 2) / (w * w * w)};
      return p;
    }
    case Model::Comm: {
      const Real z2 = z * z;
      const Real G = horner(half_, z2), dG = 2 * z * horner_deriv(half_, z2);
      const Real S = sqrt(1 - 4 * (2 * n * z + G));
      const Real C = (1 - S) / 2, dC = (2 * n + dG) / S;
      const Real dCz2 = horner_deriv(half_, z2);
      Jet N[3];
      const std::vector<Real>* avoid[3] = {nullptr, &avoid1_, &avoid2_};
      for (int k = 1; k <= 2; ++k) {
        const Real K = (2 * n - k) * z + (C * C + G) / 2 + horner(*avoid[k], z2) / 2;
        const Real dK = (2 * n - k) + C * dC + z * dCz2 + z * horner_deriv(*avoid[k], z2);
        const Real val = 1 - sqrt(1 - 2 * K);
        N[k] = {val, dK / (1 - val)};
      }
      p.total = {C, dC};
      p.st = {C - 2 * N[1].value + N[2].value, dC - 2 * N[1].deriv + N[2].deriv};
      p.g = {C - N[1].value, dC - N[1].deriv};
      return p;
    }
    case Model::AssocComm: {
      const PiValue pi = polya_pi(half_, z);
      const Real eps = tiny();
      Real y = 0;
      for (int it = 0; it < 400; ++it) {
        const Real E = exp(y) * pi.value;
        const Real F = E - 1 + 2 * n * z - 2 * y;
        const Real dy = F / (E - 2);
        y -= dy;
        if (abs(dy) <= eps) break;
      }
      const Real E = exp(y) * pi.value;
      const Real dy = (E * pi.dlog + 2 * n) / (2 - E);
      const Real dE = E * (dy + pi.dlog);
      const Real u = 1 - z;
      p.total = {2 * y - 2 * n * z, 2 * dy - 2 * n};
      p.st = {z * z * E, 2 * z * E + z * z * dE};
      p.g = {z * u * u * E, (u * u - 2 * z * u) * E + z * u * u * dE};
      return p;
    }
  }
  throw InputError("unknown model");
}

Jet NumericModel::total(const Real& z) const { return at(z).total; }
Jet NumericModel::st_x(const Real& z) const { return at(z).st; }
Jet NumericModel::g_x(const Real& z) const { return at(z).g; }

// ---------------------------------------------------------------------------

namespace {

RatioResult extrapolate(std::vector<Real> eps, std::vector<Real> raw, const LadderOptions& opt,
                        const std::string& name) {
  RatioResult r;
  r.numerator = name;
  r.eps = std::move(eps);
  r.raw = std::move(raw);
  const int K = static_cast<int>(r.raw.size()) - 1;
  if (K < 2) throw NumericError("ratio ladder for " + name + " has fewer than three rungs");
  const int J = std::min(opt.max_column, K - 1);
  // table[k][j]
  std::vector<std::vector<Real>> t(K + 1);
  for (int k = 0; k <= K; ++k) {
    t[k].push_back(r.raw[k]);
    for (int j = 1; j <= std::min(k, J); ++j) {
      const Real f = sqrt(pow(Real(2), j)) - 1;
      t[k].push_back(t[k][j - 1] + (t[k][j - 1] - t[k - 1][j - 1]) / f);
    }
  }
  int best = 0;
  Real best_err = abs(t[K][0] - t[K - 1][0]);
  for (int j = 1; j <= J; ++j) {
    const Real e = abs(t[K][j] - t[K - 1][j]);
    if (e < best_err) {
      best_err = e;
      best = j;
    }
  }
  r.column = best;
  r.value = t[K][best];
  r.error = best_err;
  for (int k = 0; k <= K; ++k) r.extrapolants.push_back(t[k][std::min(k, best)]);
  const Real scale = abs(r.value) > 1 ? abs(r.value) : Real(1);
  r.converged = r.error <= opt.tolerance * scale;
  if (!r.converged) {
    std::ostringstream os;
    os << "ratio ladder for " << (name.empty() ? "series" : name)
       << " did not converge; error " << to_decimal(r.error, 6) << "; raw:";
    for (const auto& v : r.raw) os << ' ' << to_decimal(v, 12);
    throw NumericError(os.str());
  }
  return r;
}

}  // namespace

RatioResult limiting_ratio(const RatioFunction& ratio, const Real& rho, const LadderOptions& opt,
                           const std::string& name) {
  std::vector<Real> eps, raw;
  Real e = opt.eps0;
  for (int k = 0; k <= opt.rungs; ++k) {
    eps.push_back(e);
    raw.push_back(ratio(rho * (1 - e)));
    e /= 2;
  }
  return extrapolate(std::move(eps), std::move(raw), opt, name);
}

RatioResult limiting_ratio(const PowerSeries& num, const PowerSeries& den, const Real& rho,
                           const LadderOptions& opt, const std::string& name) {
  const auto a = to_reals(num), b = to_reals(den);
  const Real bound = pow(Real(2), -static_cast<int>(working_bits() / 2));
  std::vector<Real> eps, raw;
  Real e = opt.eps0;
  auto tail = [&](const std::vector<Real>& c, const Real& x, const Real& ep) {
    const std::size_t N = c.size() - 1;
    return abs(c[N]) * static_cast<long>(N) * pow(x, static_cast<long>(N) - 1) / ep;
  };
  for (int k = 0; k <= opt.rungs; ++k) {
    const Real x = rho * (1 - e);
    const Real dn = horner_deriv(a, x), dd = horner_deriv(b, x);
    const bool ok = tail(a, x, e) <= bound * (abs(dn) + 1) && tail(b, x, e) <= bound * abs(dd);
    if (!ok) break;
    eps.push_back(e);
    raw.push_back(dn / dd);
    e /= 2;
  }
  return extrapolate(std::move(eps), std::move(raw), opt, name);
}

// ---------------------------------------------------------------------------

std::string target_name(ConstantTarget t) { return t == ConstantTarget::True ? "True" : "literal"; }

int literal_site_factor(Model model) { return is_plane(model) ? 4 : 2; }

Weights expansion_weights(Model model, int n, const LadderOptions& opt) {
  NumericModel nm(model, n);
  Weights w{n, nm.rho(), {}, {}};
  w.st = limiting_ratio([&](const Real& z) { return nm.st_x(z).deriv / nm.total(z).deriv; },
                        nm.rho(), opt, "ST_x");
  w.g = limiting_ratio([&](const Real& z) { return nm.g_x(z).deriv / nm.total(z).deriv; },
                       nm.rho(), opt, "g_x");
  return w;
}

Real constant_at(Model model, ConstantTarget target, const Weights& w) {
  const Real n = w.n;
  if (target == ConstantTarget::True) return n * w.w1();
  return n * n * literal_site_factor(model) * w.rho * (w.w1() + w.w2());
}

ConstantEstimate constant_estimate(Model model, ConstantTarget target,
                                   const std::vector<int>& n_grid, const LadderOptions& opt) {
  if (n_grid.size() < 3) throw InputError("n grid needs at least three values");
  for (std::size_t i = 1; i < n_grid.size(); ++i)
    if (n_grid[i] <= n_grid[i - 1]) throw InputError("n grid must be increasing");
  ConstantEstimate est{model, target, n_grid, {}, 0, 0, 0};
  Real ladder_err = 0;
  for (int n : n_grid) {
    const Weights w = expansion_weights(model, n, opt);
    est.values.push_back(constant_at(model, target, w));
    const Real scale = target == ConstantTarget::True ? Real(n) * n : Real(n) * n * n;
    ladder_err = std::max(ladder_err, Real((w.st.error + w.g.error) * scale));
  }
  // Least squares for value = lambda + c / n.
  const std::size_t m = n_grid.size();
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Real x = Real(1) / n_grid[i];
    sx += x;
    sy += est.values[i];
    sxx += x * x;
    sxy += x * est.values[i];
  }
  const Real det = m * sxx - sx * sx;
  est.slope = (m * sxy - sx * sy) / det;
  est.lambda = (sy - est.slope * sx) / m;
  Real rss = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Real r = est.values[i] - est.lambda - est.slope / n_grid[i];
    rss += r * r;
  }
  est.error = sqrt(rss / m) + ladder_err;
  return est;
}

double published_constant(Model model, ConstantTarget target) {
  const double l2 = std::log(2.0), s2 = std::sqrt(2.0);
  const double a = 2 * l2 - 1;
  if (target == ConstantTarget::True) {
    switch (model) {
      case Model::Catalan: return 0.75;
      case Model::Assoc: return 51 - 36 * s2;
      case Model::Comm: return 641.0 / 1024;
      case Model::AssocComm: return a * a / 4;
    }
  }
  switch (model) {
    case Model::Catalan: return 5.0 / 16;
    case Model::Assoc: return 546 - 386 * s2;
    case Model::Comm: return 1153.0 / 4096;
    case Model::AssocComm: return a * a * (2 * l2 + 1) / 4;
  }
  return 0;
}

}  // namespace boolform
