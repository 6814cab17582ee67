#pragma once

// Binary planar trees and forests: the morphisms of the forest category.
// Leaves and roots are numbered left to right starting at 1 in every
// public API.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wysiwyg {

/// Immutable rooted binary planar tree; compared by shape.
class Tree {
 public:
  /// The single-leaf tree.
  Tree();
  static Tree leaf() { return Tree(); }
  static Tree caret(const Tree& left, const Tree& right);
  /// caret(leaf, leaf).
  static Tree caret();

  bool is_leaf() const { return node_->left == nullptr; }
  int leaf_count() const { return node_->leaves; }
  int caret_count() const { return node_->leaves - 1; }
  int depth() const { return node_->depth; }
  Tree left() const;
  Tree right() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }
  /// Shape order (leaf < caret, then left, then right); used for sorting.
  friend bool operator<(const Tree& a, const Tree& b);

  std::size_t hash() const { return node_->hash; }

 private:
  struct Node {
    std::shared_ptr<const Node> left, right;
    int leaves = 1;
    int depth = 0;
    std::size_t hash = 0;
  };
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Left comb ((..(.,.),.),.) and right comb (.,(.,(..,.))) with n leaves.
Tree left_comb(int leaves);
Tree right_comb(int leaves);
/// Full bifurcating tree with 2^m leaves.
Tree full_tree(int m);

/// An ordered list of trees: a morphism roots() -> leaves().
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  /// Single-tree forest 1 -> leaf_count.
  explicit Forest(const Tree& t) : Forest(std::vector<Tree>{t}) {}
  /// m leaf-trees.
  static Forest identity(int m);

  int roots() const { return static_cast<int>(trees_.size()); }
  int leaves() const { return leaves_; }
  int caret_count() const { return leaves_ - roots(); }
  bool is_identity() const { return leaves_ == roots(); }
  const std::vector<Tree>& trees() const { return trees_; }
  const Tree& tree(int k) const { return trees_.at(static_cast<std::size_t>(k - 1)); }

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
  int leaves_ = 0;
};

/// Graft the k-th tree of `upper` onto the k-th leaf of `lower`.
/// Throws DomainError unless lower.leaves() == upper.roots().
Forest compose_forests(const Forest& lower, const Forest& upper);
/// Tree-valued convenience: `t` grafted with `f` (t.leaf_count() == f.roots()).
Tree graft(const Tree& t, const Forest& f);

/// f_i on n roots: identity except leaf i, which is a single caret.
Forest elementary_forest(int n, int i);

/// Word of elementary forests (n_k, i_k), applied first to last, whose
/// composite is f. Indices are non-decreasing, which makes the word unique.
std::vector<std::pair<int, int>> forest_factorize(const Forest& f);
/// Composite of a word of elementary forests starting from `roots` roots.
Forest forest_from_word(int roots, const std::vector<std::pair<int, int>>& word);

/// Result of tree_join: s.f == t.g == join.
struct TreeJoin {
  Tree join;
  Forest f;  // stabilizer of s
  Forest g;  // stabilizer of t
};
/// Least common refinement s v t (union of shapes).
TreeJoin tree_join(const Tree& s, const Tree& t);

/// 1-based indices i such that leaves i and i+1 are the two children of a
/// single caret (in some tree of the forest, for the forest overload).
std::vector<int> sibling_leaf_pairs(const Tree& t);
std::vector<int> sibling_leaf_pairs(const Forest& f);
/// Replace the caret over leaves i, i+1 by a leaf.
Tree remove_caret(const Tree& t, int i);
Forest remove_caret(const Forest& f, int i);

// Text format: tree := "." | "(" tree "," tree ")", whitespace allowed;
// forest := tree (";" tree)*.
Tree parse_tree(std::string_view text);
std::string serialize_tree(const Tree& t);
Forest parse_forest(std::string_view text);
std::string serialize_forest(const Forest& f);

}  // namespace wysiwyg

template <>
struct std::hash<wysiwyg::Tree> {
  std::size_t operator()(const wysiwyg::Tree& t) const noexcept { return t.hash(); }
};
