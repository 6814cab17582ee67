#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "wysiwyg/errors.hpp"
#include "wysiwyg/forest.hpp"
#include "wysiwyg/thompson.hpp"

using namespace wysiwyg;

namespace {

// All trees with n leaves, by brute force.
std::vector<Tree> all_trees(int n) {
  if (n == 1) return {Tree::leaf()};
  std::vector<Tree> out;
  for (int k = 1; k < n; ++k) {
    for (const auto& l : all_trees(k)) {
      for (const auto& r : all_trees(n - k)) out.push_back(Tree::caret(l, r));
    }
  }
  return out;
}

Forest random_forest(std::mt19937_64& rng, int roots, int max_leaves_per_tree) {
  std::vector<Tree> ts;
  for (int k = 0; k < roots; ++k) ts.push_back(random_tree(rng, 1 + static_cast<int>(rng() % max_leaves_per_tree)));
  return Forest(ts);
}

// s <= t: t refines s at the root (t = s grafted with some forest).
bool dominates(const Tree& t, const Tree& s) {
  if (s.is_leaf()) return true;
  if (t.is_leaf()) return false;
  return dominates(t.left(), s.left()) && dominates(t.right(), s.right());
}

}  // namespace

TEST_CASE("leaf counts and structural equality") {
  CHECK(Tree::leaf().leaf_count() == 1);
  const Tree c = Tree::caret(Tree::caret(), Tree::leaf());
  CHECK(c.leaf_count() == 3);
  CHECK(c == parse_tree("((.,.),.)"));
  CHECK(c != parse_tree("(.,(.,.))"));
  CHECK(left_comb(3) == c);
  CHECK(right_comb(3) == parse_tree("(.,(.,.))"));
  CHECK(full_tree(2) == parse_tree("((.,.),(.,.))"));
  CHECK(all_trees(5).size() == 14);
}

TEST_CASE("parse and serialize") {
  CHECK(parse_tree(".").is_leaf());
  CHECK(serialize_tree(parse_tree(" ( ( . , . ) ,. ) ")) == "((.,.),.)");
  CHECK(serialize_forest(parse_forest("(.,.);.;(.,(.,.))")) == "(.,.);.;(.,(.,.))");
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : all_trees(n)) CHECK(parse_tree(serialize_tree(t)) == t);
  }
  try {
    parse_tree("((.,.),x)");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_tree("(.,.)."), ParseError);
  CHECK_THROWS_AS(parse_tree("(.,."), ParseError);
  CHECK_THROWS_AS(parse_tree(""), ParseError);
}

TEST_CASE("elementary forests") {
  CHECK(elementary_forest(1, 1) == Forest(Tree::caret()));
  CHECK(elementary_forest(3, 2) == parse_forest(".;(.,.);."));
  CHECK(elementary_forest(2, 2).leaves() == 3);
  CHECK_THROWS_AS(elementary_forest(3, 4), DomainError);
  CHECK_THROWS_AS(elementary_forest(3, 0), DomainError);
}

TEST_CASE("composition") {
  const Forest f = parse_forest("(.,.);.;(.,.)");
  CHECK(compose_forests(Forest::identity(3), f) == f);
  CHECK(compose_forests(f, Forest::identity(5)) == f);
  CHECK(compose_forests(elementary_forest(1, 1), elementary_forest(2, 1)) == Forest(left_comb(3)));
  CHECK(compose_forests(elementary_forest(1, 1), elementary_forest(2, 2)) == Forest(right_comb(3)));
  CHECK_THROWS_AS(compose_forests(f, Forest::identity(4)), DomainError);
}

TEST_CASE("category laws on random forests") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const Forest a = random_forest(rng, m, 3);
    const Forest b = random_forest(rng, a.leaves(), 2);
    if (b.leaves() > 12) continue;
    const Forest c = random_forest(rng, b.leaves(), 1 + (b.leaves() < 6 ? 1 : 0));
    CHECK(compose_forests(compose_forests(a, b), c) == compose_forests(a, compose_forests(b, c)));
    CHECK(compose_forests(Forest::identity(m), a) == a);
    CHECK(compose_forests(a, Forest::identity(a.leaves())) == a);
  }
}

TEST_CASE("the single relation f_j f_i = f_i f_(j-1), i < j-1") {
  // Applying f_i first and then f_j on n+1 roots equals applying f_(j-1)
  // first and then f_i.
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 2; j <= n + 1; ++j) {
        const Forest lhs = compose_forests(elementary_forest(n, i), elementary_forest(n + 1, j));
        const Forest rhs = compose_forests(elementary_forest(n, j - 1), elementary_forest(n + 1, i));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("factorization") {
  CHECK(forest_factorize(Forest::identity(4)).empty());
  using W = std::vector<std::pair<int, int>>;
  CHECK(forest_factorize(Forest(left_comb(3))) == W{{1, 1}, {2, 1}});
  CHECK(forest_factorize(Forest(right_comb(3))) == W{{1, 1}, {2, 2}});
  // Exhaustive on 1 -> 3 forests: words are distinct and non-decreasing.
  std::set<W> seen;
  for (const auto& t : all_trees(3)) {
    const W w = forest_factorize(Forest(t));
    CHECK(forest_from_word(1, w) == Forest(t));
    CHECK(seen.insert(w).second);
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Forest f = random_forest(rng, 1 + static_cast<int>(rng() % 3), 4);
    if (f.leaves() > 10) continue;
    const W w = forest_factorize(f);
    CHECK(forest_from_word(f.roots(), w) == f);
    for (std::size_t k = 1; k < w.size(); ++k) CHECK(w[k - 1].second <= w[k].second);
  }
}

TEST_CASE("tree join") {
  const Tree l = left_comb(3), r = right_comb(3);
  const TreeJoin j = tree_join(l, r);
  CHECK(j.join == full_tree(2));
  CHECK(graft(l, j.f) == j.join);
  CHECK(graft(r, j.g) == j.join);
  // Brute force: the join is the unique minimal 4-leaf tree above both.
  int above = 0;
  for (const auto& t : all_trees(4)) above += dominates(t, l) && dominates(t, r);
  CHECK(above == 1);

  const TreeJoin same = tree_join(r, r);
  CHECK(same.f.is_identity());
  CHECK(same.g.is_identity());

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Tree s = random_tree(rng, 1 + static_cast<int>(rng() % 10));
    const Tree t = random_tree(rng, 1 + static_cast<int>(rng() % 10));
    const TreeJoin a = tree_join(s, t), b = tree_join(t, s);
    CHECK(a.join == b.join);
    CHECK(a.f == b.g);
    CHECK(graft(s, a.f) == a.join);
    CHECK(graft(t, a.g) == a.join);
    CHECK(dominates(a.join, s));
    CHECK(dominates(a.join, t));
    CHECK(a.join.leaf_count() <= s.leaf_count() + t.leaf_count() - 1);
    // Minimality: removing any caret of the join that is not a caret of
    // s or t at the same place loses domination of one of them.
    for (int i : sibling_leaf_pairs(a.join)) {
      const Tree smaller = remove_caret(a.join, i);
      CHECK_FALSE((dominates(smaller, s) && dominates(smaller, t)));
    }
  }
}

TEST_CASE("sibling pairs and caret removal") {
  const Tree t = parse_tree("((.,.),((.,.),.))");
  CHECK(sibling_leaf_pairs(t) == std::vector<int>{1, 3});
  CHECK(remove_caret(t, 3) == parse_tree("((.,.),(.,.))"));
  const Forest f = parse_forest("(.,.);.;(.,.)");
  CHECK(sibling_leaf_pairs(f) == std::vector<int>{1, 4});
  CHECK(remove_caret(f, 4) == parse_forest("(.,.);.;."));
}
