#pragma once

// Thompson's group F as reduced pairs of binary trees, plus the
// piecewise-linear model used as an independent multiplication oracle.
//
// A pair top/bottom maps the k-th standard dyadic interval of the bottom
// tree affinely onto the k-th interval of the top tree. Products compose
// as functions: multiply(g, h) = g o h, so (r/s)(s/t) = r/t.

#include <gmpxx.h>

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wysiwyg/forest.hpp"

namespace wysiwyg {

class FElement {
 public:
  /// The identity (pair of single leaves).
  FElement() = default;
  const Tree& top() const { return top_; }
  const Tree& bottom() const { return bottom_; }
  int leaf_count() const { return top_.leaf_count(); }
  bool is_identity() const { return top_.is_leaf(); }

  friend bool operator==(const FElement&, const FElement&) = default;

 private:
  friend FElement reduce_pair(const Tree&, const Tree&);
  friend FElement reduce_pair_with(const Tree&, const Tree&, const std::function<std::size_t(std::size_t)>&);
  FElement(Tree top, Tree bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {}
  Tree top_, bottom_;
};

/// Cancel opposing carets until none remain. Throws DomainError on a leaf
/// count mismatch.
FElement reduce_pair(const Tree& top, const Tree& bottom);
/// Same, but `choose(k)` picks which of the k currently available
/// cancellations to perform; used to exercise confluence.
FElement reduce_pair_with(const Tree& top, const Tree& bottom,
                          const std::function<std::size_t(std::size_t)>& choose);

FElement identity();
FElement inverse(const FElement& g);
/// g * h by stabilizing g's bottom tree and h's top tree to their join.
FElement multiply(const FElement& g, const FElement& h);

/// Statistics from a run of the strand-diagram rewrite engine.
struct RewriteStats {
  int bigon_moves = 0;    // split followed by merge -> one strand
  int exchange_moves = 0; // merge followed by split -> two strands
};

/// g * h by stacking the strand diagram of g on that of h and applying the
/// two local moves until neither applies. `choose` (optional) selects the
/// next move among the k available ones, default is the first found.
FElement multiply_rewrite(const FElement& g, const FElement& h, RewriteStats* stats = nullptr,
                          const std::function<std::size_t(std::size_t)>& choose = {});

/// x0: top = ((.,.),.), bottom = (.,(.,.)).
FElement generator_A();
/// x1 = sigma(A).
FElement generator_B();
/// The element D of the inequivalence invariant, with coeff_psi(D) = (d-2)/(d-1).
FElement element_D();
/// A^n; for n >= 1 the left comb over the right comb with n+2 leaves.
FElement power_A(int n);
/// g^n by repeated squaring.
FElement power(const FElement& g, int n);
/// Shift into [1/2, 1]: a/b -> (.,a)/(.,b).
FElement sigma(const FElement& g);
FElement sigma_pow(const FElement& g, int n);

/// Text forms: "<tree>/<tree>" (top/bottom), or a generator word over
/// A, B, D with integer exponents ("A^2 B^-1 A"; "id" or "" is the identity).
/// The presence of '/' selects the tree-pair form.
FElement parse_element(std::string_view text);
std::string serialize_element(const FElement& g);

/// Uniformly random word over {A, B}^{+-1} of the given length.
FElement random_word(std::mt19937_64& rng, int length);
/// Random (generally non-reduced) pair with the given leaf count.
std::pair<Tree, Tree> random_tree_pair(std::mt19937_64& rng, int leaves);
/// Uniform-ish random binary tree with `leaves` leaves.
Tree random_tree(std::mt19937_64& rng, int leaves);

// ------------------------------------------------------------------ PL maps

/// Piecewise-linear homeomorphism of [0,1] given by its breakpoints,
/// including (0,0) and (1,1), with collinear points removed.
class PLMap {
 public:
  PLMap();  // identity
  explicit PLMap(std::vector<std::pair<mpq_class, mpq_class>> breakpoints);

  const std::vector<std::pair<mpq_class, mpq_class>>& breakpoints() const { return pts_; }
  mpq_class operator()(const mpq_class& x) const;
  PLMap inverse() const;
  /// Slopes of the successive pieces.
  std::vector<mpq_class> slopes() const;
  /// True when all coordinates are dyadic and all slopes powers of two.
  bool is_thompson() const;

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.pts_ == b.pts_; }

 private:
  void simplify();
  std::vector<std::pair<mpq_class, mpq_class>> pts_;
};

PLMap to_pl_map(const FElement& g);
/// Function composition p o q.
PLMap compose_pl(const PLMap& p, const PLMap& q);
/// Left endpoints of the standard dyadic intervals of the leaves, then 1.
std::vector<mpq_class> dyadic_partition(const Tree& t);

}  // namespace wysiwyg
