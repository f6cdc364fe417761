#include "boolform/tree.hpp"

#include "boolform/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace boolform {

bool is_plane(Model m) { return m == Model::Catalan || m == Model::Assoc; }
bool is_binary(Model m) { return m == Model::Catalan || m == Model::Comm; }

std::string model_name(Model m) {
  switch (m) {
    case Model::Catalan: return "catalan";
    case Model::Assoc: return "assoc";
    case Model::Comm: return "comm";
    case Model::AssocComm: return "assoccomm";
  }
  return "?";
}

Model parse_model(const std::string& name) {
  std::string s;
  for (char c : name)
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "catalan" || s == "binary") return Model::Catalan;
  if (s == "assoc" || s == "associative") return Model::Assoc;
  if (s == "comm" || s == "commutative") return Model::Comm;
  if (s == "assoccomm" || s == "general" || s == "polya")
    return Model::AssocComm;
  throw InputError("unknown model: " + name);
}

std::string conn_name(Conn c) { return c == Conn::And ? "and" : "or"; }

NodePtr Node::make_leaf(Literal l) {
  auto n = std::make_shared<Node>();
  n->leaf = true;
  n->lit = l;
  n->size = 1;
  return n;
}

NodePtr Node::make_internal(Conn c, std::vector<NodePtr> kids) {
  auto n = std::make_shared<Node>();
  n->leaf = false;
  n->conn = c;
  n->size = 0;
  for (const auto& k : kids) n->size += k->size;
  n->kids = std::move(kids);
  return n;
}

int compare_nodes(const Node& a, const Node& b) {
  if (&a == &b) return 0;
  if (a.leaf != b.leaf) return a.leaf ? -1 : 1;
  if (a.leaf) {
    if (a.lit.var != b.lit.var) return a.lit.var < b.lit.var ? -1 : 1;
    if (a.lit.negated != b.lit.negated) return a.lit.negated ? 1 : -1;
    return 0;
  }
  if (a.conn != b.conn) return a.conn == Conn::And ? -1 : 1;
  if (a.kids.size() != b.kids.size())
    return a.kids.size() < b.kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    int c = compare_nodes(*a.kids[i], *b.kids[i]);
    if (c) return c;
  }
  return 0;
}

bool equal_nodes(const Node& a, const Node& b) { return compare_nodes(a, b) == 0; }

namespace {

void check_literal(Literal l) {
  if (l.var < 1 || l.var > kMaxVars)
    throw StructureError("literal variable out of range: " + to_string(l));
}

NodePtr build(const RawTree& raw, Model model) {
  if (raw.leaf) {
    check_literal(raw.lit);
    return Node::make_leaf(raw.lit);
  }
  const std::size_t k = raw.kids.size();
  if (is_binary(model) && k != 2)
    throw StructureError(model_name(model) + ": internal node with " +
                         std::to_string(k) + " children, expected 2");
  if (!is_binary(model) && k < 2)
    throw StructureError(model_name(model) + ": internal node with " +
                         std::to_string(k) + " children, expected >= 2");
  std::vector<NodePtr> kids;
  kids.reserve(k);
  for (const auto& c : raw.kids) {
    if (!is_binary(model) && !c.leaf && c.conn == raw.conn)
      throw StructureError(model_name(model) + ": " + conn_name(raw.conn) +
                           " node has a child with the same label");
    kids.push_back(build(c, model));
  }
  if (!is_plane(model))
    std::stable_sort(kids.begin(), kids.end(),
                     [](const NodePtr& a, const NodePtr& b) {
                       return compare_nodes(*a, *b) < 0;
                     });
  return Node::make_internal(raw.conn, std::move(kids));
}

}  // namespace

Tree Tree::leaf(Model model, Literal l) {
  check_literal(l);
  return Tree(model, Node::make_leaf(l));
}

Tree Tree::make(Model model, Conn c, std::vector<Tree> kids) {
  RawTree raw = RawTree::make(c, {});
  for (const auto& k : kids) {
    if (k.model() != model) throw StructureError("mixed models in Tree::make");
    raw.kids.push_back(to_raw(k));
  }
  return canonicalize(raw, model);
}

int Tree::max_var() const {
  int m = 0;
  std::function<void(const Node&)> rec = [&](const Node& n) {
    if (n.leaf)
      m = std::max(m, n.lit.var);
    else
      for (const auto& k : n.kids) rec(*k);
  };
  rec(*root_);
  return m;
}

const Node& Tree::at(const Path& p) const {
  const Node* n = root_.get();
  for (int i : p) n = n->kids.at(i).get();
  return *n;
}

Tree canonicalize(const RawTree& raw, Model model) {
  return Tree::adopt(model, build(raw, model));
}

RawTree to_raw(const Node& n) {
  if (n.leaf) return RawTree::make_leaf(n.lit);
  RawTree r = RawTree::make(n.conn, {});
  for (const auto& k : n.kids) r.kids.push_back(to_raw(*k));
  return r;
}

RawTree to_raw(const Tree& t) { return to_raw(t.root()); }

std::string to_text(const Node& n) {
  if (n.leaf) return to_string(n.lit);
  std::string s = "(" + conn_name(n.conn);
  for (const auto& k : n.kids) s += " " + to_text(*k);
  return s + ")";
}

std::string Tree::to_text() const { return boolform::to_text(*root_); }

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw InputError("tree parse error at offset " + std::to_string(pos) +
                     ": " + what);
  }
  std::string word() {
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    return s.substr(start, pos - start);
  }
  RawTree parse() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    if (s[pos] == '(') {
      ++pos;
      skip();
      std::string op = word();
      Conn c;
      if (op == "and")
        c = Conn::And;
      else if (op == "or")
        c = Conn::Or;
      else
        fail("unknown connective '" + op + "'");
      RawTree r = RawTree::make(c, {});
      for (;;) {
        skip();
        if (pos >= s.size()) fail("missing ')'");
        if (s[pos] == ')') {
          ++pos;
          break;
        }
        r.kids.push_back(parse());
      }
      return r;
    }
    std::string w = word();
    bool neg = false;
    std::size_t i = 0;
    if (i < w.size() && w[i] == '~') {
      neg = true;
      ++i;
    }
    if (i >= w.size() || w[i] != 'x') fail("bad literal '" + w + "'");
    ++i;
    if (i >= w.size()) fail("bad literal '" + w + "'");
    int v = 0;
    for (; i < w.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(w[i])))
        fail("bad literal '" + w + "'");
      v = v * 10 + (w[i] - '0');
      if (v > kMaxVars) fail("variable index too large in '" + w + "'");
    }
    if (v < 1) fail("variable index must be >= 1");
    return RawTree::make_leaf({v, neg});
  }
};

}  // namespace

RawTree parse_tree_text(const std::string& text) {
  Parser p{text};
  RawTree r = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return r;
}

Tree parse_tree(const std::string& text, Model model) {
  return canonicalize(parse_tree_text(text), model);
}

BoolFunc compute_function(const Node& node, int n) {
  if (node.leaf) return BoolFunc::literal(n, node.lit);
  BoolFunc acc = compute_function(*node.kids[0], n);
  for (std::size_t i = 1; i < node.kids.size(); ++i) {
    BoolFunc k = compute_function(*node.kids[i], n);
    acc = node.conn == Conn::And ? (acc & k) : (acc | k);
  }
  return acc;
}

BoolFunc compute_function(const Tree& t, int n) {
  return compute_function(t.root(), n);
}

BoolFunc compute_function(const Tree& t) {
  return compute_function(t, std::max(1, t.max_var()));
}

namespace {
RawTree dual_raw(const Node& n) {
  if (n.leaf) return RawTree::make_leaf(n.lit.negate());
  RawTree r = RawTree::make(flip(n.conn), {});
  for (const auto& k : n.kids) r.kids.push_back(dual_raw(*k));
  return r;
}
}  // namespace

Tree dual_tree(const Tree& t) {
  return canonicalize(dual_raw(t.root()), t.model());
}

std::vector<Path> node_paths(const Node& root) {
  std::vector<Path> out;
  Path cur;
  std::function<void(const Node&)> rec = [&](const Node& n) {
    out.push_back(cur);
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
      cur.push_back(static_cast<int>(i));
      rec(*n.kids[i]);
      cur.pop_back();
    }
  };
  rec(root);
  return out;
}

}  // namespace boolform
