#include "boolform/flat.hpp"

#include "boolform/numeric.hpp"

#include <algorithm>
#include <array>
#include <span>

namespace boolform {

std::size_t FlatTree::skip(std::size_t pos) const {
  std::size_t pending = 1;
  while (pending > 0) {
    std::uint8_t b = code[pos++];
    --pending;
    if (!is_leaf(b)) pending += arity_of(b);
  }
  return pos;
}

std::vector<std::size_t> FlatTree::children(std::size_t pos) const {
  std::vector<std::size_t> out;
  const int k = arity_of(code[pos]);
  std::size_t p = pos + 1;
  for (int i = 0; i < k; ++i) {
    out.push_back(p);
    p = skip(p);
  }
  return out;
}

int FlatTree::size() const {
  int s = 0;
  for (auto b : code)
    if (is_leaf(b)) ++s;
  return s;
}

namespace {
void append_node(const Node& n, std::vector<std::uint8_t>& out) {
  if (n.leaf) {
    out.push_back(static_cast<std::uint8_t>(n.lit.code()));
    return;
  }
  if (n.kids.size() > 63) throw StructureError("arity above 63 not supported");
  out.push_back(FlatTree::internal(n.conn, static_cast<int>(n.kids.size())));
  for (const auto& k : n.kids) append_node(*k, out);
}
}  // namespace

FlatTree FlatTree::from_node(const Node& n) {
  FlatTree t;
  t.code.reserve(2 * n.size);
  append_node(n, t.code);
  return t;
}

NodePtr FlatTree::to_node(std::size_t pos) const {
  std::uint8_t b = code[pos];
  if (is_leaf(b)) return Node::make_leaf(Literal::from_code(b));
  std::vector<NodePtr> kids;
  for (auto c : children(pos)) kids.push_back(to_node(c));
  return Node::make_internal(conn_of(b), std::move(kids));
}

WordEvaluator::WordEvaluator(int n) : n_(n), full_(full_word(n)) {
  if (n < 1 || n > 6) throw InputError("word evaluation needs 1 <= n <= 6");
  lit_.assign(2 * n, 0);
  for (int v = 1; v <= n; ++v) {
    std::uint64_t w = var_word(n, v);
    lit_[2 * (v - 1)] = w;
    lit_[2 * (v - 1) + 1] = ~w & full_;
  }
}

namespace {
std::uint64_t eval_rec(const std::uint64_t* lit, std::uint64_t full,
                       const std::uint8_t* code, std::size_t& pos) {
  std::uint8_t b = code[pos++];
  if (FlatTree::is_leaf(b)) return lit[b];
  const int k = FlatTree::arity_of(b);
  if (b & FlatTree::kOrBit) {
    std::uint64_t acc = 0;
    for (int i = 0; i < k; ++i) acc |= eval_rec(lit, full, code, pos);
    return acc;
  }
  std::uint64_t acc = full;
  for (int i = 0; i < k; ++i) acc &= eval_rec(lit, full, code, pos);
  return acc;
}
}  // namespace

std::uint64_t WordEvaluator::eval(const std::uint8_t* code, std::size_t) const {
  std::size_t pos = 0;
  return eval_rec(lit_.data(), full_, code, pos);
}

// ---------------------------------------------------------------------------

namespace {

using Code = std::vector<std::uint8_t>;

// Plane skeletons, split by root kind: 0 leaf, 1 and-rooted, 2 or-rooted.
struct SkeletonTable {
  Model model;
  std::vector<std::array<std::vector<Code>, 3>> by_size;  // index = size

  explicit SkeletonTable(Model m) : model(m) { by_size.resize(2); by_size[1][0].push_back({0}); }

  const std::array<std::vector<Code>, 3>& get(int s) {
    while (static_cast<int>(by_size.size()) <= s) extend();
    return by_size[s];
  }

  void extend() {
    const int s = static_cast<int>(by_size.size());
    by_size.emplace_back();
    auto& out = by_size.back();
    for (Conn c : {Conn::And, Conn::Or}) {
      const int slot = c == Conn::And ? 1 : 2;
      const int child_slot = c == Conn::And ? 2 : 1;
      std::vector<const Code*> kids;
      // Compositions of s into >= 2 parts (exactly 2 for binary models).
      std::vector<int> parts;
      auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
          if (parts.size() < 2) return;
          pick(self, c, slot, child_slot, parts, 0, kids, out);
          return;
        }
        if (is_binary(model) && parts.size() == 2) return;
        for (int p = 1; p <= rem; ++p) {
          if (p == s) continue;
          parts.push_back(p);
          self(self, rem - p);
          parts.pop_back();
        }
      };
      rec(rec, s);
    }
  }

  template <class Self>
  void pick(Self&, Conn c, int slot, int child_slot, const std::vector<int>& parts,
            std::size_t i, std::vector<const Code*>& kids,
            std::array<std::vector<Code>, 3>& out) {
    if (i == parts.size()) {
      Code code;
      code.push_back(FlatTree::internal(c, static_cast<int>(kids.size())));
      for (auto* k : kids) code.insert(code.end(), k->begin(), k->end());
      out[slot].push_back(std::move(code));
      return;
    }
    const int p = parts[i];
    auto& level = by_size[p];
    auto visit_list = [&](const std::vector<Code>& list) {
      for (const auto& k : list) {
        kids.push_back(&k);
        pick(*this, c, slot, child_slot, parts, i + 1, kids, out);
        kids.pop_back();
      }
    };
    visit_list(level[0]);
    if (is_binary(model)) {
      visit_list(level[1]);
      visit_list(level[2]);
    } else {
      visit_list(level[child_slot]);
    }
  }
};

}  // namespace

struct TreeSource::Impl {
  // Plane data.
  std::vector<Code> skeletons;
  std::vector<std::vector<std::uint32_t>> leaves;

  // Non-plane pools for sizes < m: concatenated codes per size.
  struct Pool {
    Code data;
    std::vector<std::uint32_t> offset;  // size count + 1
    std::vector<std::uint8_t> kind;     // 0 leaf, 1 and, 2 or
    std::size_t count() const { return kind.size(); }
    std::span<const std::uint8_t> at(std::size_t i) const {
      return {data.data() + offset[i], offset[i + 1] - offset[i]};
    }
  };
  std::vector<Pool> pools;  // index = size
  // Flattened first-item list for top-level parts: (size, index).
  std::vector<std::pair<int, std::uint32_t>> items;
};

namespace {

using Span = std::span<const std::uint8_t>;
using Pool = TreeSource::Impl::Pool;

bool allowed(Model model, Conn c, std::uint8_t kind) {
  if (is_binary(model) || kind == 0) return true;
  return kind == (c == Conn::And ? 2 : 1);
}

// Enumerate multisets of pool items with total size `total`, at least two
// items (exactly two for binary models), items nondecreasing in (size,index).
template <class Emit>
void multisets(Model model, const std::vector<Pool>& pools, Conn c, int total,
               int first_size, std::uint32_t first_idx, bool fixed_first,
               Emit&& emit) {
  std::vector<Span> chosen;
  const std::size_t max_items = is_binary(model) ? 2 : static_cast<std::size_t>(total);
  std::vector<Span> sorted;
  FlatTree t;

  auto finish = [&]() {
    sorted = chosen;
    std::sort(sorted.begin(), sorted.end(), [](Span a, Span b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    t.code.clear();
    t.code.push_back(FlatTree::internal(c, static_cast<int>(sorted.size())));
    for (auto s : sorted) t.code.insert(t.code.end(), s.begin(), s.end());
    emit(static_cast<const FlatTree&>(t));
  };

  auto rec = [&](auto&& self, int rem, int min_size, std::uint32_t min_idx) -> void {
    if (rem == 0) {
      if (chosen.size() >= 2) finish();
      return;
    }
    if (chosen.size() == max_items) return;
    for (int s = min_size; s <= rem && s < total; ++s) {
      // A single remaining slot must take the whole remainder.
      if (is_binary(model) && chosen.size() + 1 == max_items && s != rem) continue;
      const Pool& pool = pools[s];
      std::uint32_t start = s == min_size ? min_idx : 0;
      for (std::uint32_t i = start; i < pool.count(); ++i) {
        if (!allowed(model, c, pool.kind[i])) continue;
        chosen.push_back(pool.at(i));
        self(self, rem - s, s, i);
        chosen.pop_back();
      }
    }
  };

  if (fixed_first) {
    const Pool& pool = pools[first_size];
    if (first_size > total || !allowed(model, c, pool.kind[first_idx])) return;
    chosen.push_back(pool.at(first_idx));
    rec(rec, total - first_size, first_size, first_idx);
  } else {
    rec(rec, total, 1, 0);
  }
}

void add_to_pool(Pool& pool, const FlatTree& t) {
  pool.data.insert(pool.data.end(), t.code.begin(), t.code.end());
  pool.offset.push_back(static_cast<std::uint32_t>(pool.data.size()));
  std::uint8_t b = t.code[0];
  pool.kind.push_back(FlatTree::is_leaf(b) ? 0 : (FlatTree::conn_of(b) == Conn::And ? 1 : 2));
}

}  // namespace

TreeSource::TreeSource(Model model, int m, int n)
    : model_(model), m_(m), n_(n), impl_(std::make_unique<Impl>()) {
  if (m < 1) throw InputError("size must be >= 1");
  if (n < 1 || 2 * n > 0x80) throw InputError("variable count out of range");
  if (m > 63) throw InputError("size above 63 not supported");
  if (is_plane(model)) {
    SkeletonTable table(model);
    const auto& level = table.get(m);
    for (int k = 0; k < 3; ++k)
      for (const auto& c : level[k]) impl_->skeletons.push_back(c);
    for (const auto& s : impl_->skeletons) {
      std::vector<std::uint32_t> pos;
      for (std::uint32_t i = 0; i < s.size(); ++i)
        if (FlatTree::is_leaf(s[i])) pos.push_back(i);
      impl_->leaves.push_back(std::move(pos));
    }
    return;
  }
  auto& pools = impl_->pools;
  pools.resize(std::max(2, m));
  for (auto& p : pools)
    if (p.offset.empty()) p.offset.push_back(0);
  for (int code = 0; code < 2 * n; ++code) {
    FlatTree leaf;
    leaf.code = {static_cast<std::uint8_t>(code)};
    add_to_pool(pools[1], leaf);
  }
  for (int s = 2; s < m; ++s) {
    for (Conn c : {Conn::And, Conn::Or})
      multisets(model, pools, c, s, 0, 0, false,
                [&](const FlatTree& t) { add_to_pool(pools[s], t); });
  }
  if (m > 1)
    for (int s = 1; s < m; ++s)
      for (std::uint32_t i = 0; i < pools[s].count(); ++i) impl_->items.emplace_back(s, i);
}

TreeSource::~TreeSource() = default;
TreeSource::TreeSource(TreeSource&&) noexcept = default;
TreeSource& TreeSource::operator=(TreeSource&&) noexcept = default;

std::size_t TreeSource::parts() const {
  if (is_plane(model_)) return impl_->skeletons.size();
  if (m_ == 1) return 2 * static_cast<std::size_t>(n_);
  return 2 * impl_->items.size();
}

const std::vector<std::uint8_t>& TreeSource::skeleton(std::size_t part) const {
  return impl_->skeletons.at(part);
}

const std::vector<std::uint32_t>& TreeSource::skeleton_leaves(std::size_t part) const {
  return impl_->leaves.at(part);
}

void TreeSource::visit_nonplane(std::size_t part, void (*cb)(void*, const FlatTree&),
                                void* ctx) const {
  if (m_ == 1) {
    FlatTree leaf;
    leaf.code = {static_cast<std::uint8_t>(part)};
    cb(ctx, leaf);
    return;
  }
  const std::size_t per = impl_->items.size();
  const Conn c = part < per ? Conn::And : Conn::Or;
  const auto [s, idx] = impl_->items.at(part % per);
  multisets(model_, impl_->pools, c, m_, s, idx, true,
            [&](const FlatTree& t) { cb(ctx, t); });
}

std::size_t plane_skeleton_count(Model model, int m) {
  if (!is_plane(model)) throw DomainError("skeletons exist for plane models only");
  SkeletonTable table(model);
  const auto& level = table.get(m);
  return level[0].size() + level[1].size() + level[2].size();
}

}  // namespace boolform
