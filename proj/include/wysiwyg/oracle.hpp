#pragma once

// Independent evaluator for closed trivalent diagrams: every edge is a
// pair of parallel strands carrying p2 = id - e/delta, and all 2^E
// projector choices are expanded and their loops counted. Shares no code
// with the Temperley-Lieb engine.

#include <utility>
#include <vector>

#include "wysiwyg/poly.hpp"
#include "wysiwyg/thompson.hpp"
#include "wysiwyg/tl.hpp"  // Mode

namespace wysiwyg {

/// A closed graph drawn in the plane. Half-edges are numbered 0..H-1;
/// each vertex lists its half-edges counterclockwise; each edge joins two
/// half-edges. Vertices have degree 2 (a bend) or 3.
struct ClosedGraph {
  std::vector<std::vector<int>> rotation;
  std::vector<std::pair<int, int>> edges;

  int half_edges() const { return 2 * static_cast<int>(edges.size()); }
  int trivalent_vertices() const;
  /// New vertex with `degree` fresh half-edges (returned ccw).
  std::vector<int> add_vertex(int degree);
  void connect(int h1, int h2) { edges.emplace_back(h1, h2); }
};

/// Euler characteristic of the embedding is 2 (connected graphs).
bool is_planar_embedding(const ClosedGraph& g);

inline constexpr int kOracleMaxEdges = 14;

/// Raw value (vertices unnormalized). Throws ResourceCapError above
/// kOracleMaxEdges edges and DomainError for malformed graphs.
Laurent brute_force_eval(const ClosedGraph& g);

/// Closed diagram of a tree pair: bottom tree upright, top tree upside
/// down, leaves joined. Omega mode ties the two roots with an edge; Psi
/// mode turns each root vertex into a bend. g must not be the identity.
ClosedGraph closed_tree_pair_graph(const FElement& g, Mode mode);

/// One bend with a self-loop (value d), and the theta graph (lambda d).
ClosedGraph loop_graph();
ClosedGraph theta_graph();
/// lambda = theta / loop, from the oracle alone.
RationalFunction oracle_lambda();

/// (1/d) * raw / lambda^(V/2) for the tree-pair graph: the vacuum
/// coefficient computed by brute force.
RationalFunction brute_force_coefficient(const FElement& g, Mode mode);

}  // namespace wysiwyg
