#include "boolform/complexity.hpp"

#include "boolform/enumerate.hpp"
#include "boolform/flat.hpp"

#include <json.hpp>

#include <cmath>
#include <set>

namespace boolform {

MinimalTreeSet complexity(const BoolFunc& f, Model model, int max_size, std::uint64_t cap) {
  const int n = f.vars();
  if (n < 1 || n > 6) throw InputError("complexity search supports 1 <= n <= 6");
  MinimalTreeSet out;
  out.f = f;
  out.model = model;
  if (f.is_constant()) return out;
  const WordEvaluator ev(n);
  const std::uint64_t target = f.word();
  for (int m = 1; m <= max_size; ++m) {
    check_cap(model, m, n, cap);
    const TreeSource src(model, m, n);
    std::vector<std::vector<FlatTree>> found(src.parts());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t part = 0; part < src.parts(); ++part)
      src.visit_part(part, [&](const FlatTree& t) {
        if (ev.eval(t) == target) found[part].push_back(t);
      });
    for (const auto& part : found)
      for (const auto& t : part) out.trees.push_back(t.to_tree(model));
    if (!out.trees.empty()) {
      out.L = m;
      return out;
    }
  }
  throw ResourceError("no tree of size <= " + std::to_string(max_size) + " computes " +
                      f.serialize());
}

std::array<int, 4> complexity_per_model(const BoolFunc& f, int max_size) {
  std::array<int, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = complexity(f, kAllModels[i], max_size).L;
  return out;
}

bool complexity_model_independence(const BoolFunc& f, int max_size) {
  const auto ls = complexity_per_model(f, max_size);
  for (int l : ls)
    if (l != ls[0]) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void collect_sites(const Node& nd, Path& path, const Node* father, Model model,
                   std::vector<ExpansionSite>& out) {
  auto add = [&](SiteForm form, Conn c, int pos) {
    ExpansionSite s;
    s.path = path;
    s.form = form;
    s.conn = c;
    s.position = pos;
    out.push_back(s);
  };
  const int sides = is_plane(model) ? 2 : 1;
  if (is_binary(model)) {
    for (Conn c : {Conn::And, Conn::Or})
      for (int pos = 0; pos < sides; ++pos) add(SiteForm::Wrap, c, pos);
  } else if (!nd.leaf) {
    // First kind: a new child of an internal node.
    const int slots = is_plane(model) ? static_cast<int>(nd.kids.size()) + 1 : 1;
    for (int pos = 0; pos < slots; ++pos) add(SiteForm::Insert, nd.conn, pos);
    // Second kind at the root: a new root with the other connective.
    if (!father)
      for (int pos = 0; pos < sides; ++pos) add(SiteForm::Wrap, flip(nd.conn), pos);
  } else if (father) {
    for (int pos = 0; pos < sides; ++pos) add(SiteForm::Wrap, flip(father->conn), pos);
  } else {
    for (Conn c : {Conn::And, Conn::Or})
      for (int pos = 0; pos < sides; ++pos) add(SiteForm::Wrap, c, pos);
  }
  for (std::size_t i = 0; i < nd.kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_sites(*nd.kids[i], path, &nd, model, out);
    path.pop_back();
  }
}

RawTree replace_at(const RawTree& r, const Path& path, std::size_t depth,
                   const ExpansionSite& s, const RawTree& inserted) {
  if (depth == path.size()) {
    if (s.form == SiteForm::Wrap) {
      std::vector<RawTree> kids{r};
      kids.insert(kids.begin() + s.position, inserted);
      return RawTree::make(s.conn, std::move(kids));
    }
    if (r.leaf) throw StructureError("insertion site must be an internal node");
    RawTree out = r;
    if (s.position < 0 || s.position > static_cast<int>(out.kids.size()))
      throw StructureError("insertion position out of range");
    out.kids.insert(out.kids.begin() + s.position, inserted);
    return out;
  }
  RawTree out = r;
  out.kids.at(path[depth]) = replace_at(r.kids.at(path[depth]), path, depth + 1, s, inserted);
  return out;
}

void gather_literals(const Node& nd, std::set<Literal>& out) {
  if (nd.leaf) {
    out.insert(nd.lit);
    return;
  }
  for (const auto& k : nd.kids) gather_literals(*k, out);
}

// Distinct literals on the leaves; the candidates realising X-expansions.
std::vector<Literal> leaf_literals(const Node& root) {
  std::set<Literal> s;
  gather_literals(root, s);
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<ExpansionSite> expansion_sites(const Tree& t) {
  std::vector<ExpansionSite> out;
  Path path;
  collect_sites(t.root(), path, nullptr, t.model(), out);
  return out;
}

RawTree expansion_witness(const ExpansionSite& s, int fresh_var) {
  const Literal y{fresh_var, false};
  const Conn top = flip(s.conn);
  if (s.kind == ExpansionKind::T)
    return RawTree::make(top, {RawTree::make_leaf(y), RawTree::make_leaf(y.negate())});
  return RawTree::make(top, {RawTree::make_leaf(s.lit), RawTree::make_leaf(y)});
}

Tree apply_expansion(const Tree& t, const ExpansionSite& s, const RawTree& inserted) {
  return canonicalize(replace_at(to_raw(t), s.path, 0, s, inserted), t.model());
}

ExpansionTally enumerate_expansions(const MinimalTreeSet& ts) {
  if (ts.f.is_constant() || ts.trees.empty())
    throw DomainError("expansions are defined for non-constant functions");
  const int n = ts.f.vars();
  const int fresh = n + 1;
  ExpansionTally tally;
  for (std::size_t i = 0; i < ts.trees.size(); ++i) {
    const Tree& t = ts.trees[i];
    const BoolFunc target = compute_function(t, fresh);
    const std::vector<Literal> lits = leaf_literals(t.root());
    int nt = 0, nx = 0;
    for (ExpansionSite s : expansion_sites(t)) {
      s.tree = static_cast<int>(i);
      auto valid = [&](const ExpansionSite& site) {
        const Tree e = apply_expansion(t, site, expansion_witness(site, fresh));
        return compute_function(e, fresh) == target;
      };
      s.kind = ExpansionKind::T;
      if (valid(s)) {
        ++nt;
        tally.sites.push_back(s);
      }
      s.kind = ExpansionKind::X;
      for (const Literal& l : lits) {
        s.lit = l;
        if (valid(s)) {
          ++nx;
          tally.sites.push_back(s);
        }
      }
    }
    tally.per_tree.emplace_back(nt, nx);
    tally.lambda_T += nt;
    tally.lambda_X += nx;
  }
  return tally;
}

// ---------------------------------------------------------------------------

CountBounds expansion_count_bounds(Model model, int L, int M) {
  if (L < 1) throw DomainError("expansion bounds need L >= 1");
  const int l = L == 1 ? 0 : (L + 1) / 2;
  CountBounds b;
  switch (model) {
    case Model::Catalan:
      b.T_lower = b.T_upper = 4 * (2 * L - 1) * M;
      b.X_lower = (4 * L + 2 * l) * M;
      b.X_upper = 4 * L * (2 * L - 1) * M;
      return b;
    case Model::Comm:
      b.T_lower = b.T_upper = 2 * (2 * L - 1) * M;
      b.X_lower = 2 * L * M;
      b.X_upper = 2 * L * (2 * L - 1) * M;
      return b;
    case Model::Assoc:
      if (L == 1) {
        b.T_lower = b.T_upper = b.X_lower = b.X_upper = 4 * M;
        return b;
      }
      b.T_lower = 3 * (L + 1) * M;
      b.T_upper = (5 * L - 1) * M;
      b.X_lower = 5 * L * M;
      b.X_upper = L * (3 * L + 2) * M;
      return b;
    case Model::AssocComm:
      if (L == 1) {
        b.T_lower = b.T_upper = b.X_lower = b.X_upper = 2 * M;
        return b;
      }
      b.T_lower = (L + 2) * M;
      b.T_upper = 2 * L * M;
      b.X_lower = 2 * L * M;
      b.X_upper = (L * L + 3 * L) * M;
      return b;
  }
  return b;
}

LambdaBounds lambda_bounds(Model model, int L, int M) {
  if (L < 1) throw DomainError("lambda bounds need a non-constant function");
  LambdaBounds b;
  b.L = L;
  b.M = M;
  const double Ld = L;
  switch (model) {
    case Model::Catalan: {
      const double l = L == 1 ? 0 : std::ceil(Ld / 2);
      const double p = std::pow(16.0, -Ld);
      b.lower = (8 * Ld - 3 + l) * p * M;
      b.upper = (4 * Ld * Ld + 4 * Ld - 3) * p * M;
      return b;
    }
    case Model::Assoc: {
      const double s2 = std::sqrt(2.0);
      const double p = std::pow((3 - 2 * s2) / 2, Ld);
      b.lower = p * (133 * Ld + 153 - (93 * Ld + 108) * s2) * M;
      b.upper = p * (-(12 * Ld * Ld - 247 * Ld + 51) + (9 * Ld * Ld - 174 * Ld + 36) * s2) * M;
      b.stated_for_L_above_1 = true;
      return b;
    }
    case Model::Comm: {
      const double p = 512 * std::pow(8.0, Ld);
      b.lower = (1794 * Ld - 641) / p * M;
      b.upper = (2 * Ld - 1) * (512 * Ld + 641) / p * M;
      return b;
    }
    case Model::AssocComm: {
      const double l2 = std::log(2.0);
      const double a = 2 * l2 - 1;
      const double p = std::pow(a / 2, Ld);
      b.lower = p * ((l2 * l2 - 0.25) * Ld + l2 * l2 - 2 * l2 + 0.5) * M;
      b.upper = p * a * (Ld + 1 + 4 * l2) * Ld / 4 * M;
      b.stated_for_L_above_1 = true;
      return b;
    }
  }
  return b;
}

LambdaBounds lambda_bounds(const BoolFunc& f, Model model) {
  if (f.is_constant()) throw DomainError("lambda bounds need a non-constant function");
  const MinimalTreeSet ts = complexity(f, model);
  return lambda_bounds(model, ts.L, ts.M());
}

Real expansion_estimate(int L, int lambda_T, int lambda_X, const Weights& w) {
  const Real n = w.n;
  return pow(n, L + 1) * pow(w.rho, L) * (lambda_T * w.w1() + lambda_X * w.w2());
}

ProbabilityReport probability_vs_bounds(const BoolFunc& f, Model model,
                                        const std::vector<int>& n_grid, double rel_tolerance) {
  if (n_grid.empty()) throw InputError("n grid is empty");
  const MinimalTreeSet ts = complexity(f, model);
  if (ts.L == 0) throw DomainError("probability estimate needs a non-constant function");
  const ExpansionTally tally = enumerate_expansions(ts);
  ProbabilityReport r;
  r.f = f;
  r.model = model;
  r.L = ts.L;
  r.M = ts.M();
  r.lambda_T = tally.lambda_T;
  r.lambda_X = tally.lambda_X;
  r.bounds = lambda_bounds(model, ts.L, ts.M());
  for (int n : n_grid) {
    const Weights w = expansion_weights(model, n);
    r.points.push_back({n, expansion_estimate(ts.L, tally.lambda_T, tally.lambda_X, w)});
  }
  if (r.points.size() == 1) {
    r.extrapolated = r.points[0].estimate;
  } else {
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t m = r.points.size();
    for (const auto& p : r.points) {
      const Real x = Real(1) / p.n;
      sx += x;
      sy += p.estimate;
      sxx += x * x;
      sxy += x * p.estimate;
    }
    const Real slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    r.extrapolated = (sy - slope * sx) / m;
  }
  const double v = r.extrapolated.convert_to<double>();
  const double tol = rel_tolerance * std::max(std::abs(r.bounds.lower), std::abs(r.bounds.upper));
  r.within_bounds = v >= r.bounds.lower - tol && v <= r.bounds.upper + tol;
  return r;
}

std::string ProbabilityReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "boolform/v1";
  j["kind"] = "probability-vs-bounds";
  j["model"] = model_name(model);
  j["function"] = f.serialize();
  j["L"] = L;
  j["M"] = M;
  j["lambda_T"] = lambda_T;
  j["lambda_X"] = lambda_X;
  j["bounds"] = {{"lower", bounds.lower},
                 {"upper", bounds.upper},
                 {"stated_for_L_above_1", bounds.stated_for_L_above_1}};
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : points) pts.push_back({{"n", p.n}, {"estimate", to_decimal(p.estimate, 20)}});
  j["extrapolated"] = to_decimal(extrapolated, 20);
  j["within_bounds"] = within_bounds;
  return j.dump(2);
}

}  // namespace boolform
