#include "wysiwyg/oracle.hpp"

#include <numeric>
#include <string>

#include "wysiwyg/errors.hpp"

namespace wysiwyg {

int ClosedGraph::trivalent_vertices() const {
  int n = 0;
  for (const auto& r : rotation) n += r.size() == 3 ? 1 : 0;
  return n;
}

std::vector<int> ClosedGraph::add_vertex(int degree) {
  std::vector<int> hs;
  int next = 0;
  for (const auto& r : rotation) next += static_cast<int>(r.size());
  for (int k = 0; k < degree; ++k) hs.push_back(next + k);
  rotation.push_back(hs);
  return hs;
}

namespace {

struct Incidence {
  std::vector<int> vertex;  // half-edge -> vertex
  std::vector<int> slot;    // half-edge -> position in rotation
  std::vector<int> twin;    // half-edge -> other end of its edge
};

Incidence check_graph(const ClosedGraph& g) {
  int h = 0;
  for (const auto& r : g.rotation) {
    if (r.size() != 2 && r.size() != 3) throw DomainError("oracle vertices must have degree 2 or 3");
    h += static_cast<int>(r.size());
  }
  if (h != g.half_edges()) throw DomainError("every half-edge must lie on exactly one edge");
  Incidence inc{std::vector<int>(h, -1), std::vector<int>(h, -1), std::vector<int>(h, -1)};
  for (std::size_t v = 0; v < g.rotation.size(); ++v) {
    for (std::size_t k = 0; k < g.rotation[v].size(); ++k) {
      const int x = g.rotation[v][k];
      if (x < 0 || x >= h || inc.vertex[x] >= 0) throw DomainError("bad half-edge in rotation system");
      inc.vertex[x] = static_cast<int>(v);
      inc.slot[x] = static_cast<int>(k);
    }
  }
  for (const auto& [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= h || b >= h || a == b || inc.twin[a] >= 0 || inc.twin[b] >= 0) {
      throw DomainError("bad edge list");
    }
    inc.twin[a] = b;
    inc.twin[b] = a;
  }
  return inc;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_planar_embedding(const ClosedGraph& g) {
  const Incidence inc = check_graph(g);
  const int h = g.half_edges();
  // Faces: from half-edge x, cross the edge, then turn to the next
  // half-edge counterclockwise at the far vertex.
  std::vector<char> seen(static_cast<std::size_t>(h), 0);
  int faces = 0;
  for (int s = 0; s < h; ++s) {
    if (seen[s]) continue;
    ++faces;
    int x = s;
    do {
      seen[x] = 1;
      const int y = inc.twin[x];
      const auto& r = g.rotation[inc.vertex[y]];
      x = r[(inc.slot[y] + 1) % r.size()];
    } while (x != s);
  }
  UnionFind uf(static_cast<int>(g.rotation.size()));
  for (const auto& [a, b] : g.edges) uf.unite(inc.vertex[a], inc.vertex[b]);
  int comps = 0;
  for (int v = 0; v < static_cast<int>(g.rotation.size()); ++v) comps += uf.find(v) == v ? 1 : 0;
  const int euler = static_cast<int>(g.rotation.size()) - static_cast<int>(g.edges.size()) + faces;
  return euler == 2 * comps;
}

Laurent brute_force_eval(const ClosedGraph& g) {
  const int e = static_cast<int>(g.edges.size());
  if (e > kOracleMaxEdges) {
    throw ResourceCapError("oracle limited to " + std::to_string(kOracleMaxEdges) + " edges, got " + std::to_string(e),
                           static_cast<std::size_t>(e));
  }
  check_graph(g);
  const int h = g.half_edges();
  // Point 2x is the clockwise strand of half-edge x, 2x+1 the counterclockwise one.
  auto cw = [](int x) { return 2 * x; };
  auto ccw = [](int x) { return 2 * x + 1; };

  Laurent total;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    UnionFind uf(2 * h);
    for (const auto& r : g.rotation) {
      for (std::size_t k = 0; k < r.size(); ++k) uf.unite(ccw(r[k]), cw(r[(k + 1) % r.size()]));
    }
    int e_terms = 0;
    for (int k = 0; k < e; ++k) {
      const auto [a, b] = g.edges[static_cast<std::size_t>(k)];
      if (mask & (1u << k)) {
        ++e_terms;
        uf.unite(ccw(a), cw(a));
        uf.unite(ccw(b), cw(b));
      } else {
        uf.unite(ccw(a), cw(b));
        uf.unite(cw(a), ccw(b));
      }
    }
    int loops = 0;
    for (int p = 0; p < 2 * h; ++p) loops += uf.find(p) == p ? 1 : 0;
    Laurent term = Laurent::delta_pow(loops - e_terms);
    if (e_terms % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

namespace {

// Adds the carets of t (`upright` for the bottom tree). Returns
// the root vertex's parent half-edge (or -1 for a bend root) and appends
// the leaf half-edges left to right.
void build_tree(ClosedGraph& g, const Tree& t, bool upright, bool bend_root, int& root_half, std::vector<int>& leaves) {
  std::vector<std::pair<Tree, int>> stack{{t, -1}};
  // Depth-first, right child pushed first so leaves come out left to right.
  while (!stack.empty()) {
    auto [node, up] = stack.back();
    stack.pop_back();
    if (node.is_leaf()) {
      leaves.push_back(up);
      continue;
    }
    int left_h, right_h;
    if (up < 0 && bend_root) {
      const auto hs = g.add_vertex(2);
      left_h = hs[0];
      right_h = hs[1];
      root_half = -1;
    } else {
      const auto hs = g.add_vertex(3);
      // ccw from the parent: upright tree -> parent, right, left;
      // upside-down tree -> parent, left, right.
      const int parent_h = hs[0];
      if (upright) {
        right_h = hs[1];
        left_h = hs[2];
      } else {
        left_h = hs[1];
        right_h = hs[2];
      }
      if (up >= 0) {
        g.connect(up, parent_h);
      } else {
        root_half = parent_h;
      }
    }
    stack.emplace_back(node.right(), right_h);
    stack.emplace_back(node.left(), left_h);
  }
}

}  // namespace

ClosedGraph closed_tree_pair_graph(const FElement& g, Mode mode) {
  if (g.is_identity()) throw DomainError("the oracle graph of the identity has no vertices");
  ClosedGraph out;
  const bool bend = mode == Mode::Psi;
  int bottom_root = -1, top_root = -1;
  std::vector<int> bottom_leaves, top_leaves;
  build_tree(out, g.bottom(), true, bend, bottom_root, bottom_leaves);
  build_tree(out, g.top(), false, bend, top_root, top_leaves);
  for (std::size_t k = 0; k < bottom_leaves.size(); ++k) out.connect(bottom_leaves[k], top_leaves[k]);
  if (!bend) out.connect(bottom_root, top_root);
  return out;
}

ClosedGraph loop_graph() {
  ClosedGraph g;
  const auto hs = g.add_vertex(2);
  g.connect(hs[0], hs[1]);
  return g;
}

ClosedGraph theta_graph() {
  ClosedGraph g;
  const auto u = g.add_vertex(3);
  const auto v = g.add_vertex(3);
  g.connect(u[0], v[0]);
  g.connect(u[1], v[2]);
  g.connect(u[2], v[1]);
  return g;
}

RationalFunction oracle_lambda() {
  return RationalFunction(brute_force_eval(theta_graph())) / RationalFunction(brute_force_eval(loop_graph()));
}

RationalFunction brute_force_coefficient(const FElement& g, Mode mode) {
  const ClosedGraph graph = closed_tree_pair_graph(g, mode);
  const int v = graph.trivalent_vertices();
  if (v % 2 != 0) throw DomainError("odd number of trivalent vertices");
  const RationalFunction loop = brute_force_eval(loop_graph());
  return RationalFunction(brute_force_eval(graph)) / oracle_lambda().pow(v / 2) / loop;
}

}  // namespace wysiwyg
