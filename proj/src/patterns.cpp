#include "boolform/patterns.hpp"

#include "boolform/enumerate.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace boolform {

std::string pattern_name(PatternId p) {
  switch (p) {
    case PatternId::N: return "N";
    case PatternId::R: return "R";
    case PatternId::S: return "S";
  }
  return "?";
}

PatternId parse_pattern(const std::string& name) {
  if (name == "N" || name == "n") return PatternId::N;
  if (name == "R" || name == "r") return PatternId::R;
  if (name == "S" || name == "s") return PatternId::S;
  throw InputError("unknown pattern: " + name);
}

PatternId model_pattern(Model model) { return is_binary(model) ? PatternId::N : PatternId::R; }

Conn single_child_conn(PatternId p) { return p == PatternId::S ? Conn::Or : Conn::And; }

namespace {

void check_compatible(Model model, PatternId p) {
  if (p == PatternId::N && !is_binary(model))
    throw InputError("pattern N applies to binary models only");
  if (p == PatternId::R && is_binary(model))
    throw InputError("pattern R applies to the associative models only");
}

void check_depth(int depth) {
  if (depth != 1 && depth != 2) throw InputError("pattern depth must be 1 or 2");
}

void walk(const Node& nd, Path& path, int r, Conn single, const ChoiceMap* choice,
          PatternMatch& out) {
  if (nd.leaf) {
    out.pattern_leaves.push_back(path);
    return;
  }
  const int arity = static_cast<int>(nd.kids.size());
  if (nd.conn == single) {
    int c = 0;
    if (choice) {
      auto it = choice->find(path);
      if (it != choice->end()) c = it->second;
    }
    if (c < 0 || c >= arity) throw InputError("embedding choice out of range");
    out.choices[path] = c;
    for (int i = 0; i < arity; ++i) {
      path.push_back(i);
      if (i == c)
        walk(*nd.kids[i], path, r, single, choice, out);
      else if (r > 1)
        walk(*nd.kids[i], path, r - 1, single, choice, out);
      else
        out.placeholders.push_back(path);
      path.pop_back();
    }
    return;
  }
  for (int i = 0; i < arity; ++i) {
    path.push_back(i);
    walk(*nd.kids[i], path, r, single, choice, out);
    path.pop_back();
  }
}

std::uint32_t var_bit(int var) { return std::uint32_t{1} << (var - 1); }

int restrictions_of(int count, std::uint32_t mask, std::uint32_t essential) {
  return count - std::popcount(mask) + std::popcount(mask & essential);
}

std::uint32_t essential_mask_of(const Tree& t) {
  const BoolFunc f = compute_function(t, std::max(1, t.max_var()));
  std::uint32_t mask = 0;
  for (int v : f.essential_vars()) mask |= var_bit(v);
  return mask;
}

}  // namespace

PatternMatch match_pattern(const Tree& t, PatternId p, int depth, const ChoiceMap* choice) {
  check_compatible(t.model(), p);
  check_depth(depth);
  PatternMatch out;
  out.pattern = p;
  out.depth = depth;
  Path path;
  walk(t.root(), path, depth, single_child_conn(p), choice, out);
  return out;
}

namespace {

RawTree rebuild(const Node& nd, Path& path, const std::set<Path>& leaves,
                const std::set<Path>& holes) {
  if (holes.count(path)) return to_raw(nd);
  if (leaves.count(path)) {
    if (!nd.leaf) throw StructureError("pattern leaf path does not end at a leaf");
    return RawTree::make_leaf(nd.lit);
  }
  if (nd.leaf) throw StructureError("leaf not covered by the pattern match");
  std::vector<RawTree> kids;
  for (std::size_t i = 0; i < nd.kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    kids.push_back(rebuild(*nd.kids[i], path, leaves, holes));
    path.pop_back();
  }
  return RawTree::make(nd.conn, std::move(kids));
}

}  // namespace

Tree resubstitute(const Tree& t, const PatternMatch& m) {
  const std::set<Path> leaves(m.pattern_leaves.begin(), m.pattern_leaves.end());
  const std::set<Path> holes(m.placeholders.begin(), m.placeholders.end());
  if (leaves.size() != m.pattern_leaves.size() || holes.size() != m.placeholders.size())
    throw StructureError("duplicate paths in pattern match");
  int covered = static_cast<int>(leaves.size());
  for (const auto& h : holes) covered += t.at(h).size;
  if (covered != t.size()) throw StructureError("pattern match does not partition the leaves");
  Path path;
  return canonicalize(rebuild(t.root(), path, leaves, holes), t.model());
}

RestrictionCount count_restrictions(const Tree& t, const PatternMatch& m) {
  RestrictionCount rc;
  std::uint32_t mask = 0;
  for (const auto& p : m.pattern_leaves) {
    const Node& nd = t.at(p);
    mask |= var_bit(nd.lit.var);
  }
  const std::uint32_t ess = essential_mask_of(t);
  rc.pattern_leaves = static_cast<int>(m.pattern_leaves.size());
  rc.distinct_vars = std::popcount(mask);
  rc.repetitions = rc.pattern_leaves - rc.distinct_vars;
  for (int v = 1; v <= 32; ++v)
    if ((mask & ess) >> (v - 1) & 1U) rc.realized_essential.push_back(v);
  rc.restrictions = rc.repetitions + static_cast<int>(rc.realized_essential.size());
  return rc;
}

RestrictionCount count_restrictions(const Tree& t, PatternId p, int depth) {
  return count_restrictions(t, match_pattern(t, p, depth));
}

// ---------------------------------------------------------------------------

namespace {

struct Alt {
  int count = 0;
  std::uint32_t mask = 0;
  std::vector<std::pair<Path, int>> choices;
};

using AltSet = std::map<std::pair<int, std::uint32_t>, Alt>;

struct EmbedSearch {
  Conn single;
  bool choose;
  std::uint64_t cap;
  std::uint64_t examined = 0;

  AltSet product(const AltSet& a, const AltSet& b) {
    AltSet out;
    examined += a.size() * b.size();
    if (examined > cap) throw ResourceError("embedding search exceeds the ordering cap");
    for (const auto& [ka, x] : a)
      for (const auto& [kb, y] : b) {
        const std::pair<int, std::uint32_t> key{x.count + y.count, x.mask | y.mask};
        if (out.count(key)) continue;
        Alt z{key.first, key.second, x.choices};
        z.choices.insert(z.choices.end(), y.choices.begin(), y.choices.end());
        out.emplace(key, std::move(z));
      }
    return out;
  }

  AltSet unit() {
    AltSet s;
    s.emplace(std::make_pair(0, 0U), Alt{});
    return s;
  }

  AltSet run(const Node& nd, Path& path, int r) {
    if (nd.leaf) {
      AltSet s;
      s.emplace(std::make_pair(1, var_bit(nd.lit.var)), Alt{1, var_bit(nd.lit.var), {}});
      return s;
    }
    const int arity = static_cast<int>(nd.kids.size());
    if (nd.conn != single) {
      AltSet acc = unit();
      for (int i = 0; i < arity; ++i) {
        path.push_back(i);
        acc = product(acc, run(*nd.kids[i], path, r));
        path.pop_back();
      }
      return acc;
    }
    // Sub-results per child at both levels, computed once.
    std::vector<AltSet> same(arity), lower(arity);
    for (int i = 0; i < arity; ++i) {
      path.push_back(i);
      same[i] = run(*nd.kids[i], path, r);
      lower[i] = r > 1 ? run(*nd.kids[i], path, r - 1) : unit();
      path.pop_back();
    }
    AltSet out;
    const int options = choose ? arity : 1;
    for (int c = 0; c < options; ++c) {
      AltSet acc = same[c];
      for (int i = 0; i < arity; ++i)
        if (i != c) acc = product(acc, lower[i]);
      for (auto& [key, alt] : acc) {
        if (out.count(key)) continue;
        alt.choices.emplace_back(path, c);
        out.emplace(key, std::move(alt));
      }
    }
    return out;
  }
};

}  // namespace

Embedding minimal_embedding(const Tree& t, PatternId p, int depth, std::uint64_t cap) {
  check_compatible(t.model(), p);
  check_depth(depth);
  EmbedSearch search{single_child_conn(p), !is_plane(t.model()), cap};
  Path path;
  const AltSet alts = search.run(t.root(), path, depth);
  const std::uint32_t ess = essential_mask_of(t);
  const Alt* best = nullptr;
  int best_r = 0;
  for (const auto& [key, alt] : alts) {
    const int r = restrictions_of(alt.count, alt.mask, ess);
    if (!best || r < best_r) {
      best = &alt;
      best_r = r;
    }
  }
  ChoiceMap choice(best->choices.begin(), best->choices.end());
  Embedding e;
  e.match = match_pattern(t, p, depth, &choice);
  e.count = count_restrictions(t, e.match);
  e.orderings = search.examined;
  return e;
}

// ---------------------------------------------------------------------------

namespace {

using FlatAlts = std::vector<std::pair<int, std::uint32_t>>;

void normalize(FlatAlts& a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
}

FlatAlts flat_product(const FlatAlts& a, const FlatAlts& b) {
  FlatAlts out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.emplace_back(x.first + y.first, x.second | y.second);
  normalize(out);
  return out;
}

FlatAlts flat_alts(const FlatTree& t, std::size_t pos, int r, Conn single, bool choose) {
  const std::uint8_t b = t.code[pos];
  if (FlatTree::is_leaf(b)) return {{1, var_bit(Literal::from_code(b).var)}};
  const auto kids = t.children(pos);
  if (FlatTree::conn_of(b) != single) {
    FlatAlts acc{{0, 0}};
    for (auto k : kids) acc = flat_product(acc, flat_alts(t, k, r, single, choose));
    return acc;
  }
  const std::size_t arity = kids.size();
  std::vector<FlatAlts> same(arity), lower(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    if (choose || i == 0) same[i] = flat_alts(t, kids[i], r, single, choose);
    lower[i] = r > 1 ? flat_alts(t, kids[i], r - 1, single, choose) : FlatAlts{{0, 0}};
  }
  FlatAlts out;
  for (std::size_t c = 0; c < (choose ? arity : 1); ++c) {
    FlatAlts acc = same[c];
    for (std::size_t i = 0; i < arity; ++i)
      if (i != c) acc = flat_product(acc, lower[i]);
    out.insert(out.end(), acc.begin(), acc.end());
  }
  normalize(out);
  return out;
}

std::uint64_t forced_eval(const FlatTree& t, std::size_t& pos, bool in_pattern, Conn single,
                          const WordEvaluator& ev, bool value) {
  const std::uint8_t b = t.code[pos];
  if (!in_pattern) {
    const std::size_t end = t.skip(pos);
    const std::uint64_t w = ev.eval(t.code.data() + pos, end - pos);
    pos = end;
    return w;
  }
  if (FlatTree::is_leaf(b)) {
    ++pos;
    return value ? ev.full() : 0;
  }
  const Conn c = FlatTree::conn_of(b);
  const int arity = FlatTree::arity_of(b);
  ++pos;
  std::uint64_t acc = c == Conn::And ? ev.full() : 0;
  for (int i = 0; i < arity; ++i) {
    const bool cont = c != single || i == 0;
    const std::uint64_t w = forced_eval(t, pos, cont, single, ev, value);
    acc = c == Conn::And ? (acc & w) : (acc | w);
  }
  return acc;
}

// Plane trees have one match, walked without allocation.
void plane_stats(const FlatTree& t, std::size_t& pos, int r, Conn single, int& count,
                 std::uint32_t& mask) {
  const std::uint8_t b = t.code[pos++];
  if (FlatTree::is_leaf(b)) {
    ++count;
    mask |= var_bit(Literal::from_code(b).var);
    return;
  }
  const int arity = FlatTree::arity_of(b);
  const bool one = FlatTree::conn_of(b) == single;
  for (int i = 0; i < arity; ++i) {
    if (!one || i == 0)
      plane_stats(t, pos, r, single, count, mask);
    else if (r > 1)
      plane_stats(t, pos, r - 1, single, count, mask);
    else
      pos = t.skip(pos);
  }
}

}  // namespace

int min_restrictions(const FlatTree& t, PatternId p, int depth, bool choose,
                     std::uint32_t essential_mask) {
  check_depth(depth);
  if (!choose) {
    int count = 0;
    std::uint32_t mask = 0;
    std::size_t pos = 0;
    plane_stats(t, pos, depth, single_child_conn(p), count, mask);
    return restrictions_of(count, mask, essential_mask);
  }
  const FlatAlts alts = flat_alts(t, 0, depth, single_child_conn(p), choose);
  int best = 1 << 30;
  for (const auto& [count, mask] : alts)
    best = std::min(best, restrictions_of(count, mask, essential_mask));
  return best;
}

std::uint64_t eval_pattern_forced(const FlatTree& t, PatternId p, const WordEvaluator& ev,
                                  bool value) {
  std::size_t pos = 0;
  return forced_eval(t, pos, true, single_child_conn(p), ev, value);
}

// ---------------------------------------------------------------------------

bool LemmaReport::ok() const {
  for (const auto& r : rows)
    if (r.counterexamples) return false;
  return true;
}

std::string LemmaReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "boolform/v1";
  j["kind"] = "pattern-lemmas";
  j["model"] = model_name(model);
  j["max_size"] = max_size;
  j["vars"] = n;
  j["trees"] = std::to_string(trees);
  j["tautologies"] = std::to_string(tautologies);
  auto& rs = j["lemmas"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["name"] = r.name;
    o["checked"] = std::to_string(r.checked);
    o["counterexamples"] = std::to_string(r.counterexamples);
    o["examples"] = r.examples;
    o["status"] = r.counterexamples ? "FAIL" : "PASS";
    rs.push_back(o);
  }
  j["ok"] = ok();
  return j.dump(2);
}

std::string LemmaReport::to_text() const {
  std::ostringstream os;
  os << "model " << model_name(model) << ", sizes 1.." << max_size << ", n=" << n << ": "
     << trees << " trees, " << tautologies << " tautologies\n";
  for (const auto& r : rows) {
    os << (r.counterexamples ? "FAIL" : "PASS") << "  " << r.name << "  checked=" << r.checked
       << " counterexamples=" << r.counterexamples << '\n';
    for (const auto& e : r.examples) os << "      " << e << '\n';
  }
  return os.str();
}

namespace {

constexpr std::size_t kKeptExamples = 5;

struct PartTally {
  std::uint64_t trees = 0, tautologies = 0;
  LemmaRow rows[4];
};

void note(LemmaRow& row, bool failed, const FlatTree& t) {
  ++row.checked;
  if (!failed) return;
  ++row.counterexamples;
  if (row.examples.size() < kKeptExamples) row.examples.push_back(to_text(*t.to_node()));
}

}  // namespace

LemmaReport verify_pattern_lemmas(Model model, int max_size, int n, std::uint64_t cap) {
  if (max_size < 1) throw InputError("size must be >= 1");
  if (n < 1 || n > 6) throw InputError("lemma sweep supports 1 <= n <= 6");
  const PatternId pat = model_pattern(model);
  const bool choose = !is_plane(model);
  const WordEvaluator ev(n);
  LemmaReport rep;
  rep.model = model;
  rep.max_size = max_size;
  rep.n = n;
  rep.rows = {{"tautology has at least one restriction", 0, 0, {}},
              {"one depth-2 restriction implies simple tautology", 0, 0, {}},
              {"pattern leaves False gives False", 0, 0, {}},
              {"S-pattern leaves True gives True", 0, 0, {}}};
  for (int m = 1; m <= max_size; ++m) {
    check_cap(model, m, n, cap);
    const TreeSource src(model, m, n);
    const std::size_t parts = src.parts();
    std::vector<PartTally> tallies(parts);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t part = 0; part < parts; ++part) {
      PartTally& pt = tallies[part];
      src.visit_part(part, [&](const FlatTree& t) {
        ++pt.trees;
        const std::uint64_t f = ev.eval(t);
        note(pt.rows[2], eval_pattern_forced(t, pat, ev, false) != 0, t);
        note(pt.rows[3], eval_pattern_forced(t, PatternId::S, ev, true) != ev.full(), t);
        if (f != ev.full()) return;
        ++pt.tautologies;
        note(pt.rows[0], min_restrictions(t, pat, 1, choose, 0) < 1, t);
        if (min_restrictions(t, pat, 2, choose, 0) == 1)
          note(pt.rows[1], simple_tautology_vars(t).empty(), t);
      });
    }
    for (const auto& pt : tallies) {
      rep.trees += pt.trees;
      rep.tautologies += pt.tautologies;
      for (int i = 0; i < 4; ++i) {
        auto& dst = rep.rows[i];
        dst.checked += pt.rows[i].checked;
        dst.counterexamples += pt.rows[i].counterexamples;
        for (const auto& e : pt.rows[i].examples)
          if (dst.examples.size() < kKeptExamples) dst.examples.push_back(e);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j] * j + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt falling(long x, int k) {
  if (k < 0) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= BigInt(x - i);
  return r;
}

namespace {

BigInt binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  BigInt r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

BigInt ipow(long base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

BigInt labelling_weight(int v, int k, int l) {
  BigInt w = 0;
  for (int r = 0; r <= k; ++r)
    w += stirling2(l, l - r) * binom(v, k - r) * falling(l - r, k - r);
  return w;
}

BigInt labelling_count_formula(int m, int l, int n, int v, int k, bool mobile) {
  if (l - k < 0) return 0;
  const BigInt base = falling(n - v, l - k) * labelling_weight(v, k, l);
  if (mobile) return base * ipow(2, l);
  return base * ipow(n, m - l) * ipow(2, m);
}

namespace {

void pattern_flags(const FlatTree& t, std::size_t& pos, bool in_pattern, Conn single,
                   std::vector<char>& flags) {
  const std::uint8_t b = t.code[pos++];
  if (FlatTree::is_leaf(b)) {
    flags.push_back(in_pattern ? 1 : 0);
    return;
  }
  const int arity = FlatTree::arity_of(b);
  for (int i = 0; i < arity; ++i)
    pattern_flags(t, pos, in_pattern && (FlatTree::conn_of(b) != single || i == 0), single,
                  flags);
}

}  // namespace

std::vector<BigInt> labelling_counts_brute(const Tree& shape, PatternId p, int n, int v,
                                           bool mobile) {
  if (v < 0 || v > n) throw InputError("essential variable count out of range");
  const FlatTree ft = FlatTree::from_tree(shape);
  std::vector<char> flags;
  std::size_t pos = 0;
  pattern_flags(ft, pos, true, single_child_conn(p), flags);
  std::vector<int> slots;  // leaves that receive a label
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (mobile ? flags[i] : true) slots.push_back(static_cast<int>(i));
  const int l = static_cast<int>(std::count(flags.begin(), flags.end(), 1));
  std::vector<BigInt> out(l + 1, 0);
  std::vector<int> digit(slots.size(), 0);
  const int base = 2 * n;
  for (;;) {
    std::uint32_t mask = 0;
    int count = 0;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (flags[slots[s]]) {
        ++count;
        mask |= var_bit(Literal::from_code(digit[s]).var);
      }
    const std::uint32_t ess = v == 0 ? 0 : (std::uint32_t{1} << v) - 1;
    out[restrictions_of(count, mask, ess)] += 1;
    std::size_t i = digit.size();
    while (i > 0) {
      --i;
      if (++digit[i] < base) break;
      digit[i] = 0;
      if (i == 0) return out;
    }
    if (digit.empty()) return out;
  }
}

}  // namespace boolform
