#pragma once

#include "boolform/tree.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace boolform {

// Preorder byte encoding of a tree. A byte below 0x80 is a leaf holding
// Literal::code(); otherwise bit 6 is the connective (0 = and, 1 = or) and the
// low six bits are the arity. Lexicographic byte order equals compare_nodes.
struct FlatTree {
  std::vector<std::uint8_t> code;

  static constexpr std::uint8_t kInternal = 0x80;
  static constexpr std::uint8_t kOrBit = 0x40;

  static bool is_leaf(std::uint8_t b) { return b < kInternal; }
  static Conn conn_of(std::uint8_t b) { return (b & kOrBit) ? Conn::Or : Conn::And; }
  static int arity_of(std::uint8_t b) { return b & 0x3f; }
  static std::uint8_t internal(Conn c, int arity) {
    return static_cast<std::uint8_t>(kInternal | (c == Conn::Or ? kOrBit : 0) | arity);
  }

  // One past the end of the subtree starting at pos.
  std::size_t skip(std::size_t pos) const;
  // Start offsets of the children of the internal node at pos.
  std::vector<std::size_t> children(std::size_t pos) const;
  int size() const;

  static FlatTree from_node(const Node& n);
  static FlatTree from_tree(const Tree& t) { return from_node(t.root()); }
  NodePtr to_node(std::size_t pos = 0) const;
  Tree to_tree(Model model) const { return Tree::adopt(model, to_node()); }

  friend bool operator==(const FlatTree&, const FlatTree&) = default;
  friend auto operator<=>(const FlatTree&, const FlatTree&) = default;
};

// Truth tables as single words, valid for n <= 6.
class WordEvaluator {
 public:
  explicit WordEvaluator(int n);
  int vars() const { return n_; }
  std::uint64_t full() const { return full_; }
  std::uint64_t literal(std::uint8_t code) const { return lit_[code]; }
  std::uint64_t eval(const FlatTree& t) const { return eval(t.code.data(), t.code.size()); }
  std::uint64_t eval(const std::uint8_t* code, std::size_t len) const;

 private:
  int n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> lit_;
};

// Exhaustive generator of all canonical trees of one size. The work is split
// into independent parts so callers may process parts concurrently; visiting
// parts 0..parts()-1 in order yields a deterministic sequence.
class TreeSource {
 public:
  TreeSource(Model model, int m, int n);
  ~TreeSource();
  TreeSource(TreeSource&&) noexcept;
  TreeSource& operator=(TreeSource&&) noexcept;

  Model model() const { return model_; }
  int size() const { return m_; }
  int vars() const { return n_; }
  std::size_t parts() const;

  // Thread-safe; visit receives each tree of the part exactly once.
  template <class Visit>
  void visit_part(std::size_t part, Visit&& visit) const;

  template <class Visit>
  void visit_all(Visit&& visit) const {
    for (std::size_t p = 0; p < parts(); ++p) visit_part(p, visit);
  }

  struct Impl;

 private:
  // Plane models: skeleton part with an odometer over leaf labels.
  const std::vector<std::uint8_t>& skeleton(std::size_t part) const;
  const std::vector<std::uint32_t>& skeleton_leaves(std::size_t part) const;
  // Non-plane models: callback-driven recursion in the .cpp.
  void visit_nonplane(std::size_t part, void (*cb)(void*, const FlatTree&),
                      void* ctx) const;

  Model model_;
  int m_;
  int n_;
  std::unique_ptr<Impl> impl_;
};

template <class Visit>
void TreeSource::visit_part(std::size_t part, Visit&& visit) const {
  if (is_plane(model_)) {
    FlatTree t;
    t.code = skeleton(part);
    const auto& leaves = skeleton_leaves(part);
    const int k = 2 * n_;
    std::vector<int> digit(leaves.size(), 0);
    for (auto pos : leaves) t.code[pos] = 0;
    for (;;) {
      visit(static_cast<const FlatTree&>(t));
      std::size_t i = leaves.size();
      while (i > 0) {
        --i;
        if (++digit[i] < k) {
          t.code[leaves[i]] = static_cast<std::uint8_t>(digit[i]);
          break;
        }
        digit[i] = 0;
        t.code[leaves[i]] = 0;
        if (i == 0) return;
      }
      if (leaves.empty()) return;
    }
  } else {
    using V = std::remove_reference_t<Visit>;
    visit_nonplane(
        part,
        [](void* ctx, const FlatTree& t) { (*static_cast<V*>(ctx))(t); },
        const_cast<void*>(static_cast<const void*>(&visit)));
  }
}

// Number of skeletons (shapes with connective labels, unlabelled leaves) of
// size m for a plane model.
std::size_t plane_skeleton_count(Model model, int m);

}  // namespace boolform
