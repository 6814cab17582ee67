#include "wysiwyg/forest.hpp"

#include <algorithm>
#include <cctype>

#include "wysiwyg/errors.hpp"

namespace wysiwyg {

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
  return a;
}

}  // namespace

// ------------------------------------------------------------------- Tree

Tree::Tree() {
  static const auto leaf_node = [] {
    auto n = std::make_shared<Node>();
    n->hash = 0x51ed27ULL;
    return std::shared_ptr<const Node>(n);
  }();
  node_ = leaf_node;
}

Tree Tree::caret(const Tree& left, const Tree& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->leaves = left.leaf_count() + right.leaf_count();
  n->depth = 1 + std::max(left.depth(), right.depth());
  n->hash = mix(mix(0xca7e7ULL, left.hash()), right.hash());
  return Tree(std::shared_ptr<const Node>(n));
}

Tree Tree::caret() { return caret(leaf(), leaf()); }

Tree Tree::left() const {
  if (is_leaf()) throw DomainError("leaf has no children");
  return Tree(node_->left);
}

Tree Tree::right() const {
  if (is_leaf()) throw DomainError("leaf has no children");
  return Tree(node_->right);
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->leaves != b.node_->leaves) return false;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
  return a.left() == b.left() && a.right() == b.right();
}

bool operator<(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return false;
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf();
  if (a.is_leaf()) return false;
  if (a.left() != b.left()) return a.left() < b.left();
  return a.right() < b.right();
}

Tree left_comb(int leaves) {
  if (leaves < 1) throw DomainError("comb needs at least one leaf");
  Tree t;
  for (int k = 1; k < leaves; ++k) t = Tree::caret(t, Tree::leaf());
  return t;
}

Tree right_comb(int leaves) {
  if (leaves < 1) throw DomainError("comb needs at least one leaf");
  Tree t;
  for (int k = 1; k < leaves; ++k) t = Tree::caret(Tree::leaf(), t);
  return t;
}

Tree full_tree(int m) {
  if (m < 0) throw DomainError("full tree depth must be non-negative");
  Tree t;
  for (int k = 0; k < m; ++k) t = Tree::caret(t, t);
  return t;
}

// ----------------------------------------------------------------- Forest

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  for (const auto& t : trees_) leaves_ += t.leaf_count();
}

Forest Forest::identity(int m) {
  if (m < 0) throw DomainError("negative forest size");
  return Forest(std::vector<Tree>(static_cast<std::size_t>(m)));
}

namespace {

Tree graft_at(const Tree& t, const std::vector<Tree>& upper, std::size_t& next) {
  if (t.is_leaf()) return upper[next++];
  Tree l = graft_at(t.left(), upper, next);
  Tree r = graft_at(t.right(), upper, next);
  return Tree::caret(l, r);
}

}  // namespace

Forest compose_forests(const Forest& lower, const Forest& upper) {
  if (lower.leaves() != upper.roots()) {
    throw DomainError("forest arity mismatch: " + std::to_string(lower.leaves()) + " leaves vs " +
                      std::to_string(upper.roots()) + " roots");
  }
  std::vector<Tree> out;
  out.reserve(lower.trees().size());
  std::size_t next = 0;
  for (const auto& t : lower.trees()) out.push_back(graft_at(t, upper.trees(), next));
  return Forest(std::move(out));
}

Tree graft(const Tree& t, const Forest& f) { return compose_forests(Forest(t), f).trees().front(); }

Forest elementary_forest(int n, int i) {
  if (n < 1 || i < 1 || i > n) {
    throw DomainError("elementary forest index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
  std::vector<Tree> trees(static_cast<std::size_t>(n));
  trees[static_cast<std::size_t>(i - 1)] = Tree::caret();
  return Forest(std::move(trees));
}

std::vector<std::pair<int, int>> forest_factorize(const Forest& f) {
  std::vector<std::pair<int, int>> word;
  std::vector<Tree> frontier = f.trees();
  std::size_t start = 0;  // every position before `start` is a leaf
  while (true) {
    while (start < frontier.size() && frontier[start].is_leaf()) ++start;
    if (start == frontier.size()) break;
    word.emplace_back(static_cast<int>(frontier.size()), static_cast<int>(start) + 1);
    Tree t = frontier[start];
    frontier[start] = t.right();
    frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(start), t.left());
  }
  return word;
}

Forest forest_from_word(int roots, const std::vector<std::pair<int, int>>& word) {
  Forest f = Forest::identity(roots);
  for (const auto& [n, i] : word) {
    if (n != f.leaves()) throw DomainError("elementary forest word has inconsistent arities");
    f = compose_forests(f, elementary_forest(n, i));
  }
  return f;
}

namespace {

void join_into(const Tree& s, const Tree& t, std::vector<Tree>& fs, std::vector<Tree>& gs, Tree& out) {
  if (s.is_leaf()) {
    out = t;
    fs.push_back(t);
    gs.insert(gs.end(), static_cast<std::size_t>(t.leaf_count()), Tree::leaf());
    return;
  }
  if (t.is_leaf()) {
    out = s;
    fs.insert(fs.end(), static_cast<std::size_t>(s.leaf_count()), Tree::leaf());
    gs.push_back(s);
    return;
  }
  Tree l, r;
  join_into(s.left(), t.left(), fs, gs, l);
  join_into(s.right(), t.right(), fs, gs, r);
  out = Tree::caret(l, r);
}

void collect_siblings(const Tree& t, int offset, std::vector<int>& out) {
  if (t.is_leaf()) return;
  if (t.left().is_leaf() && t.right().is_leaf()) {
    out.push_back(offset + 1);
    return;
  }
  collect_siblings(t.left(), offset, out);
  collect_siblings(t.right(), offset + t.left().leaf_count(), out);
}

Tree remove_caret_at(const Tree& t, int i, int offset) {
  if (t.is_leaf()) throw DomainError("no caret over leaves " + std::to_string(i) + "," + std::to_string(i + 1));
  if (offset + 1 == i && t.left().is_leaf() && t.right().is_leaf()) return Tree::leaf();
  const int split = offset + t.left().leaf_count();
  if (i < split) return Tree::caret(remove_caret_at(t.left(), i, offset), t.right());
  return Tree::caret(t.left(), remove_caret_at(t.right(), i, split));
}

}  // namespace

TreeJoin tree_join(const Tree& s, const Tree& t) {
  std::vector<Tree> fs, gs;
  Tree j;
  join_into(s, t, fs, gs, j);
  return {j, Forest(std::move(fs)), Forest(std::move(gs))};
}

std::vector<int> sibling_leaf_pairs(const Tree& t) {
  std::vector<int> out;
  collect_siblings(t, 0, out);
  return out;
}

std::vector<int> sibling_leaf_pairs(const Forest& f) {
  std::vector<int> out;
  int offset = 0;
  for (const auto& t : f.trees()) {
    collect_siblings(t, offset, out);
    offset += t.leaf_count();
  }
  return out;
}

Tree remove_caret(const Tree& t, int i) { return remove_caret_at(t, i, 0); }

Forest remove_caret(const Forest& f, int i) {
  std::vector<Tree> trees = f.trees();
  int offset = 0;
  for (auto& t : trees) {
    if (i > offset && i < offset + t.leaf_count()) {
      t = remove_caret_at(t, i, offset);
      return Forest(std::move(trees));
    }
    offset += t.leaf_count();
  }
  throw DomainError("no caret over leaves " + std::to_string(i) + "," + std::to_string(i + 1));
}

// ---------------------------------------------------------------- parsing

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  Tree parse_one() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of tree", pos_);
    const char c = s_[pos_];
    if (c == '.') {
      ++pos_;
      return Tree::leaf();
    }
    if (c != '(') throw ParseError(std::string("expected '.' or '(' but found '") + c + "'", pos_);
    ++pos_;
    Tree l = parse_one();
    expect(',');
    Tree r = parse_one();
    expect(')');
    return Tree::caret(l, r);
  }

  bool consume(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected trailing '") + s_[pos_] + "'", pos_);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
    if (s_[pos_] != c) throw ParseError(std::string("expected '") + c + "' but found '" + s_[pos_] + "'", pos_);
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void serialize_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += '.';
    return;
  }
  out += '(';
  serialize_into(t.left(), out);
  out += ',';
  serialize_into(t.right(), out);
  out += ')';
}

}  // namespace

Tree parse_tree(std::string_view text) {
  TreeParser p(text);
  Tree t = p.parse_one();
  p.finish();
  return t;
}

std::string serialize_tree(const Tree& t) {
  std::string out;
  serialize_into(t, out);
  return out;
}

Forest parse_forest(std::string_view text) {
  TreeParser p(text);
  std::vector<Tree> trees{p.parse_one()};
  while (p.consume(';')) trees.push_back(p.parse_one());
  p.finish();
  return Forest(std::move(trees));
}

std::string serialize_forest(const Forest& f) {
  std::string out;
  for (std::size_t k = 0; k < f.trees().size(); ++k) {
    if (k != 0) out += ';';
    serialize_into(f.trees()[k], out);
  }
  return out;
}

}  // namespace wysiwyg
