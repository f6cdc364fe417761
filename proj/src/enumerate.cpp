#include "boolform/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <array>

namespace boolform {

namespace {

BigInt multichoose(const BigInt& c, int j) {
  // C(c + j - 1, j)
  BigInt num = 1, den = 1;
  for (int i = 0; i < j; ++i) {
    num *= c + i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

std::vector<BigInt> count_trees_upto(Model model, int m, int n) {
  if (m < 1) throw InputError("size must be >= 1");
  if (n < 1) throw InputError("variable count must be >= 1");
  std::vector<BigInt> out(m + 1, 0);
  out[1] = 2 * n;
  switch (model) {
    case Model::Catalan:
      for (int s = 2; s <= m; ++s) {
        BigInt acc = 0;
        for (int i = 1; i < s; ++i) acc += out[i] * out[s - i];
        out[s] = 2 * acc;
      }
      break;
    case Model::Comm:
      for (int s = 2; s <= m; ++s) {
        BigInt acc = 0;
        for (int i = 1; 2 * i < s; ++i) acc += out[i] * out[s - i];
        if (s % 2 == 0) acc += out[s / 2] * (out[s / 2] + 1) / 2;
        out[s] = 2 * acc;
      }
      break;
    case Model::Assoc: {
      // x[s]: trees allowed below an and-node (leaves and or-rooted trees);
      // seq[s]: nonempty sequences of such trees of total size s.
      std::vector<BigInt> x(m + 1, 0), seq(m + 1, 0);
      x[1] = 2 * n;
      seq[1] = x[1];
      for (int s = 2; s <= m; ++s) {
        BigInt rooted = 0;
        for (int i = 1; i < s; ++i) rooted += x[i] * seq[s - i];
        out[s] = 2 * rooted;
        x[s] = rooted;
        seq[s] = x[s] + rooted;
      }
      break;
    }
    case Model::AssocComm: {
      // w[t]: multisets of allowed children with total size t, built from
      // the sizes folded so far.
      std::vector<BigInt> x(m + 1, 0), w(m + 1, 0);
      w[0] = 1;
      auto fold = [&](int s) {
        for (int t = m; t >= s; --t)
          for (int j = 1; j * s <= t; ++j) w[t] += multichoose(x[s], j) * w[t - j * s];
      };
      x[1] = 2 * n;
      fold(1);
      for (int s = 2; s <= m; ++s) {
        BigInt rooted = w[s];
        out[s] = 2 * rooted;
        x[s] = rooted;
        fold(s);
      }
      break;
    }
  }
  return out;
}

BigInt count_trees(Model model, int m, int n) {
  return count_trees_upto(model, m, n)[m];
}

// ---------------------------------------------------------------------------

namespace {

// Unlabelled non-plane shapes with connectives. Each shape is stored with its
// labelled-tree count, computed from its children.
struct Shape {
  std::uint8_t kind;  // 0 leaf, 1 and, 2 or
  std::vector<std::size_t> kids;  // global shape ids, nondecreasing
};

struct ShapeCounter {
  Model model;
  int n;
  std::vector<Shape> shapes;
  std::vector<BigInt> labelled;
  std::vector<std::vector<std::size_t>> by_size;  // shape ids per size

  BigInt count(int m) {
    shapes.push_back({0, {}});
    labelled.push_back(2 * n);
    by_size.assign(m + 1, {});
    by_size[1].push_back(0);
    for (int s = 2; s <= m; ++s) {
      for (std::uint8_t kind : {std::uint8_t{1}, std::uint8_t{2}}) {
        std::vector<std::size_t> chosen;
        build(s, kind, s, 1, 0, chosen);
      }
    }
    BigInt total = 0;
    for (auto id : by_size[m]) total += labelled[id];
    return total;
  }

  bool allowed(std::uint8_t parent, std::size_t child) const {
    const std::uint8_t k = shapes[child].kind;
    if (is_binary(model) || k == 0) return true;
    return k != parent;
  }

  void build(int total, std::uint8_t kind, int rem, int min_size, std::size_t min_pos,
             std::vector<std::size_t>& chosen) {
    if (rem == 0) {
      if (chosen.size() < 2) return;
      emit(total, kind, chosen);
      return;
    }
    const std::size_t max_items = is_binary(model) ? 2 : static_cast<std::size_t>(total);
    if (chosen.size() == max_items) return;
    for (int s = min_size; s <= rem && s < total; ++s) {
      const auto& ids = by_size[s];
      for (std::size_t p = (s == min_size ? min_pos : 0); p < ids.size(); ++p) {
        if (!allowed(kind, ids[p])) continue;
        chosen.push_back(ids[p]);
        build(total, kind, rem - s, s, p, chosen);
        chosen.pop_back();
      }
    }
  }

  void emit(int total, std::uint8_t kind, const std::vector<std::size_t>& kids) {
    BigInt ways = 1;
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && kids[j] == kids[i]) ++j;
      ways *= multichoose(labelled[kids[i]], static_cast<int>(j - i));
      i = j;
    }
    shapes.push_back({kind, kids});
    labelled.push_back(ways);
    by_size[total].push_back(shapes.size() - 1);
  }
};

}  // namespace

BigInt count_trees_by_shapes(Model model, int m, int n) {
  if (m < 1 || n < 1) throw InputError("size and variable count must be >= 1");
  if (is_plane(model)) {
    BigInt labels = 1;
    for (int i = 0; i < m; ++i) labels *= 2 * n;
    return BigInt(plane_skeleton_count(model, m)) * labels;
  }
  ShapeCounter sc{model, n, {}, {}, {}};
  return sc.count(m);
}

void check_cap(Model model, int m, int n, std::uint64_t cap) {
  BigInt c = count_trees(model, m, n);
  if (c > cap)
    throw ResourceError(model_name(model) + " m=" + std::to_string(m) + " n=" +
                        std::to_string(n) + ": " + c.str() +
                        " trees exceed the generation cap of " + std::to_string(cap));
}

std::uint64_t count_trees_exhaustive(Model model, int m, int n, std::uint64_t cap) {
  check_cap(model, m, n, cap);
  TreeSource src(model, m, n);
  std::uint64_t total = 0;
  const auto parts = static_cast<std::int64_t>(src.parts());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t p = 0; p < parts; ++p) {
    std::uint64_t local = 0;
    src.visit_part(static_cast<std::size_t>(p), [&](const FlatTree&) { ++local; });
    total += local;
  }
  return total;
}

std::vector<Tree> generate_trees(Model model, int m, int n, std::uint64_t cap) {
  check_cap(model, m, n, cap);
  TreeSource src(model, m, n);
  std::vector<Tree> out;
  src.visit_all([&](const FlatTree& t) { out.push_back(t.to_tree(model)); });
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t frontier_mask(const FlatTree& t, Conn conn, std::size_t pos) {
  const std::uint8_t b = t.code[pos];
  if (FlatTree::is_leaf(b)) return std::uint64_t{1} << b;
  if (FlatTree::conn_of(b) != conn) return 0;
  std::uint64_t mask = 0;
  const int k = FlatTree::arity_of(b);
  std::size_t p = pos + 1;
  for (int i = 0; i < k; ++i) {
    mask |= frontier_mask(t, conn, p);
    p = t.skip(p);
  }
  return mask;
}

namespace {

std::vector<int> both_polarities(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 1; 2 * v <= 64; ++v)
    if (((mask >> (2 * (v - 1))) & 3U) == 3U) out.push_back(v);
  return out;
}

bool has_both(std::uint64_t mask) {
  return (mask & (mask >> 1) & 0x5555555555555555ULL) != 0;
}

std::uint64_t lit_bit(Literal l) { return std::uint64_t{1} << l.code(); }

bool gx_member(const FlatTree& t, Model model, Literal x, std::size_t pos, Conn conn) {
  const std::uint8_t b = t.code[pos];
  if (is_binary(model)) return (frontier_mask(t, conn, pos) & lit_bit(x)) != 0;
  if (FlatTree::is_leaf(b)) return b == x.code();
  if (FlatTree::conn_of(b) != conn) return false;
  int hits = 0;
  bool opposite = false;
  const int k = FlatTree::arity_of(b);
  std::size_t p = pos + 1;
  for (int i = 0; i < k; ++i) {
    const std::uint8_t c = t.code[p];
    if (FlatTree::is_leaf(c)) {
      if (c == x.code()) ++hits;
      if (c == x.negate().code()) opposite = true;
    }
    p = t.skip(p);
  }
  return hits == 1 && !opposite;
}

}  // namespace

std::vector<int> simple_tautology_vars(const FlatTree& t) {
  return both_polarities(frontier_mask(t, Conn::Or));
}

std::vector<int> is_simple_tautology(const Tree& t) {
  return simple_tautology_vars(FlatTree::from_tree(t));
}

bool is_simple_tautology_for(const FlatTree& t, int var) {
  return ((frontier_mask(t, Conn::Or) >> (2 * (var - 1))) & 3U) == 3U;
}

bool is_simple_contradiction(const FlatTree& t, std::size_t pos) {
  return has_both(frontier_mask(t, Conn::And, pos));
}

bool in_gx_class(const FlatTree& t, Model model, Literal x, std::size_t pos) {
  return gx_member(t, model, x, pos, Conn::Or);
}

bool in_gx_class_dual(const FlatTree& t, Model model, Literal x, std::size_t pos) {
  return gx_member(t, model, x, pos, Conn::And);
}

std::string to_string(SimpleXKind k) {
  switch (k) {
    case SimpleXKind::None: return "not-simple";
    case SimpleXKind::XT: return "x_T";
    case SimpleXKind::XX: return "x_X";
  }
  return "?";
}

SimpleX is_simple_x(const FlatTree& t, Model model) {
  const std::uint8_t b = t.code[0];
  if (FlatTree::is_leaf(b) || FlatTree::arity_of(b) != 2) return {};
  const Conn c = FlatTree::conn_of(b);
  const std::size_t pos[2] = {1, t.skip(1)};
  SimpleX best;
  for (int side = 0; side < 2; ++side) {
    const std::uint8_t lb = t.code[pos[side]];
    if (!FlatTree::is_leaf(lb)) continue;
    const Literal l = Literal::from_code(lb);
    const std::size_t s = pos[1 - side];
    const bool t_kind = c == Conn::And ? has_both(frontier_mask(t, Conn::Or, s))
                                       : has_both(frontier_mask(t, Conn::And, s));
    if (t_kind) return {SimpleXKind::XT, l};
    const bool x_kind = c == Conn::And ? in_gx_class(t, model, l, s)
                                       : in_gx_class_dual(t, model, l, s);
    if (x_kind && best.kind == SimpleXKind::None) best = {SimpleXKind::XX, l};
  }
  return best;
}

SimpleX is_simple_x(const Tree& t) {
  return is_simple_x(FlatTree::from_tree(t), t.model());
}

TautologySplit classify_tautologies(Model model, int m, int n, std::uint64_t cap) {
  check_cap(model, m, n, cap);
  if (n > 6) throw InputError("tautology classification needs n <= 6");
  TreeSource src(model, m, n);
  WordEvaluator ev(n);
  std::uint64_t simple = 0, other = 0;
  const auto parts = static_cast<std::int64_t>(src.parts());
#pragma omp parallel for schedule(dynamic) reduction(+ : simple, other)
  for (std::int64_t p = 0; p < parts; ++p) {
    src.visit_part(static_cast<std::size_t>(p), [&](const FlatTree& t) {
      if (ev.eval(t) != ev.full()) return;
      if (has_both(frontier_mask(t, Conn::Or)))
        ++simple;
      else
        ++other;
    });
  }
  return {BigInt(simple), BigInt(other)};
}

AuxCounts brute_aux_counts(Model model, int m, int n, Literal x, std::uint64_t cap,
                           bool parallel) {
  check_cap(model, m, n, cap);
  if (x.var < 1 || x.var > n) throw InputError("literal out of range");
  TreeSource src(model, m, n);
  const std::uint64_t xb = lit_bit(x), nb = lit_bit(x.negate());
  std::uint64_t total = 0, st = 0, gx = 0, gbar = 0, u = 0, st_all = 0, xt = 0, xx = 0;
  const auto parts = static_cast<std::int64_t>(src.parts());
#pragma omp parallel for schedule(dynamic) if (parallel) \
    reduction(+ : total, st, gx, gbar, u, st_all, xt, xx)
  for (std::int64_t p = 0; p < parts; ++p) {
    src.visit_part(static_cast<std::size_t>(p), [&](const FlatTree& t) {
      ++total;
      const std::uint64_t f = frontier_mask(t, Conn::Or);
      if ((f & xb) && (f & nb)) ++st;
      if (!(f & xb)) ++gbar;
      if (!(f & (xb | nb))) ++u;
      if (has_both(f)) ++st_all;
      if (in_gx_class(t, model, x)) ++gx;
      const SimpleX sx = is_simple_x(t, model);
      if (sx.kind != SimpleXKind::None && sx.lit == x) {
        if (sx.kind == SimpleXKind::XT)
          ++xt;
        else
          ++xx;
      }
    });
  }
  AuxCounts out;
  out.total = total;
  out.st_x = st;
  out.g_x = gx;
  out.gbar_x = gbar;
  out.u_x = u;
  out.st_all = st_all;
  out.simple_x_T = xt;
  out.simple_x_X = xx;
  return out;
}

}  // namespace boolform
