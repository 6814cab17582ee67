#pragma once

// Vectors of the direct-limit Hilbert space and the action of F on them.
//
// A LimitVector over the tree T stands for the class of (T, Phi(F) x):
// a base state x (width = roots of F, plus one spectator strand in Omega
// mode) pushed through the forest F, whose leaves are the leaves of T.
// F is never applied eagerly; inner products run the forest pair of the
// two vectors as a network of splits and merges.

#include <cstddef>
#include <string>

#include "wysiwyg/cabled.hpp"
#include "wysiwyg/forest.hpp"
#include "wysiwyg/network.hpp"
#include "wysiwyg/thompson.hpp"
#include "wysiwyg/tl.hpp"

namespace wysiwyg {

/// raw * lambda^(-vertices/2) * d^(d_half/2), kept unevaluated so that no
/// square root is ever materialized.
struct PendingScalar {
  RationalFunction raw;
  int vertices = 0;
  int d_half = 0;

  /// Exact value; throws DomainError when either exponent is odd.
  RationalFunction exact() const;
  double numeric(double delta) const;
  friend PendingScalar operator*(const PendingScalar& a, const PendingScalar& b) {
    return {a.raw * b.raw, a.vertices + b.vertices, a.d_half + b.d_half};
  }
};

/// lambda and d at a numeric delta.
double lambda_at(double delta);
double d_at(double delta);

struct EvalStats {
  int leaves = 0;             // leaves of the common tree
  int vertices = 0;           // raw vertices in the evaluated network
  int peak_width = 0;         // X-strands alive at once (spectator included)
  std::size_t peak_terms = 0; // largest state
};

struct LimitVector {
  Mode mode = Mode::Psi;
  Tree tree;
  Forest forest;  // roots = base strands (minus the spectator), leaves = tree leaves
  CabledState<ExactRing> base;
  int d_half = 0;

  int offset() const { return mode == Mode::Omega ? 1 : 0; }
  int vertex_count() const { return base.vertices + forest.caret_count(); }
};

/// The vacuum Psi (resp. Omega) represented over the tree t.
LimitVector vacuum(Mode mode, const Tree& t);
/// (t, x) for an explicit unnormalized state x of width
/// t.leaf_count() (+1 in Omega mode); `d_half` scales by d^(d_half/2).
LimitVector state_vector(Mode mode, const Tree& t, CabledState<ExactRing> x, int d_half = 0);

/// pi(g) v: refine to a common tree with g's bottom tree, then swap in
/// g's top tree. Opposing carets of the new tree and forest are cancelled.
LimitVector act(const FElement& g, const LimitVector& v, const Caps& caps = Caps::from_env());

/// <u, v> (linear in u).
PendingScalar inner_product(const LimitVector& u, const LimitVector& v, const Caps& caps = Caps::from_env(),
                            EvalStats* stats = nullptr);
double inner_product_numeric(const LimitVector& u, const LimitVector& v, double delta,
                             const Caps& caps = Caps::from_env(), EvalStats* stats = nullptr);

/// Both vectors restated over their common tree with the forest applied.
struct Materialized {
  Tree tree;
  CabledState<ExactRing> u, v;
};
Materialized materialize_pair(const LimitVector& u, const LimitVector& v, const Caps& caps = Caps::from_env());

/// Exact vector equality: coefficientwise over the common tree, after
/// matching normalizations.
bool vectors_equal(const LimitVector& u, const LimitVector& v, const Caps& caps = Caps::from_env());

}  // namespace wysiwyg
