#pragma once

#include "boolform/boolfun.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace boolform {

enum class Model { Catalan, Assoc, Comm, AssocComm };

inline constexpr Model kAllModels[] = {Model::Catalan, Model::Assoc,
                                       Model::Comm, Model::AssocComm};

bool is_plane(Model m);
bool is_binary(Model m);
std::string model_name(Model m);
Model parse_model(const std::string& name);

enum class Conn : std::uint8_t { And, Or };

inline Conn flip(Conn c) { return c == Conn::And ? Conn::Or : Conn::And; }
std::string conn_name(Conn c);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  bool leaf = true;
  Literal lit{};
  Conn conn = Conn::And;
  std::vector<NodePtr> kids;
  int size = 1;  // leaf count

  static NodePtr make_leaf(Literal l);
  // No validation; children are taken in the given order.
  static NodePtr make_internal(Conn c, std::vector<NodePtr> kids);
};

// Canonical total order: leaves before internal nodes; leaves by (variable,
// polarity); internal nodes by (connective, arity, children lexicographic).
int compare_nodes(const Node& a, const Node& b);
bool equal_nodes(const Node& a, const Node& b);

// Unvalidated tree as read from text or built by hand.
struct RawTree {
  bool leaf = true;
  Literal lit{};
  Conn conn = Conn::And;
  std::vector<RawTree> kids;

  static RawTree make_leaf(Literal l) { return RawTree{true, l, Conn::And, {}}; }
  static RawTree make(Conn c, std::vector<RawTree> kids) {
    return RawTree{false, {}, c, std::move(kids)};
  }
};

using Path = std::vector<int>;

class Tree {
 public:
  Tree() = default;
  static Tree leaf(Model model, Literal l);
  // Validates arity and stratification, sorts children for non-plane models.
  static Tree make(Model model, Conn c, std::vector<Tree> kids);
  // Trusted constructor: the node must already satisfy the model rules.
  static Tree adopt(Model model, NodePtr root) { return Tree(model, std::move(root)); }

  Model model() const { return model_; }
  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  int size() const { return root_->size; }
  bool is_leaf() const { return root_->leaf; }
  Conn conn() const { return root_->conn; }
  Literal literal() const { return root_->lit; }
  std::size_t arity() const { return root_->kids.size(); }
  Tree child(std::size_t i) const { return Tree(model_, root_->kids.at(i)); }
  int max_var() const;

  const Node& at(const Path& p) const;

  std::string to_text() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.model_ == b.model_ && equal_nodes(*a.root_, *b.root_);
  }

 private:
  Tree(Model model, NodePtr root) : model_(model), root_(std::move(root)) {}

  Model model_ = Model::Catalan;
  NodePtr root_;
};

// Raises StructureError on arity or stratification violations.
Tree canonicalize(const RawTree& raw, Model model);
RawTree to_raw(const Tree& t);
RawTree to_raw(const Node& n);

RawTree parse_tree_text(const std::string& text);
Tree parse_tree(const std::string& text, Model model);
std::string to_text(const Node& n);

BoolFunc compute_function(const Tree& t, int n);
// Uses n = max variable index appearing in t.
BoolFunc compute_function(const Tree& t);
BoolFunc compute_function(const Node& node, int n);

Tree dual_tree(const Tree& t);

// Enumerate node paths in preorder.
std::vector<Path> node_paths(const Node& root);

}  // namespace boolform
