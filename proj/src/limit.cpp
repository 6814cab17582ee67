#include "wysiwyg/limit.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace wysiwyg {

RationalFunction PendingScalar::exact() const {
  if (vertices % 2 != 0) throw DomainError("odd vertex count: value needs sqrt(lambda)");
  if (d_half % 2 != 0) throw DomainError("odd power of sqrt(d) in an exact value");
  return raw * vertex_lambda().pow(-vertices / 2) * RationalFunction::d().pow(d_half / 2);
}

double lambda_at(double delta) { return (delta * delta - 2.0) / delta; }
double d_at(double delta) { return delta * delta - 1.0; }

namespace {

double normalization(int vertices, int d_half, double delta) {
  const double lam = lambda_at(delta);
  // lambda vanishes at delta = sqrt(2); rounding leaves ~1e-16 there
  if (vertices != 0 && !(lam > 1e-12)) throw DomainError("the trivalent vertex vanishes at this delta");
  return std::pow(lam, -0.5 * vertices) * std::pow(d_at(delta), 0.5 * d_half);
}

}  // namespace

double PendingScalar::numeric(double delta) const { return raw.eval(delta) * normalization(vertices, d_half, delta); }

namespace {

void check_leaves(const Tree& t, const Caps& caps) {
  if (t.leaf_count() > caps.max_leaves) {
    throw ResourceCapError("tree with " + std::to_string(t.leaf_count()) + " leaves exceeds cap " +
                               std::to_string(caps.max_leaves),
                           static_cast<std::size_t>(t.leaf_count()));
  }
}

void check_mode(const LimitVector& u, const LimitVector& v) {
  if (u.mode != v.mode) throw DomainError("vectors live in different modes");
}

std::vector<int> common_pairs(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Prepared {
  Tree tree;
  ForestPair pair;
  Schedule schedule;
};

Prepared prepare(const LimitVector& u, const LimitVector& v, const Caps& caps) {
  check_mode(u, v);
  const TreeJoin j = tree_join(u.tree, v.tree);
  check_leaves(j.join, caps);
  Prepared p{j.join, {compose_forests(u.forest, j.f), compose_forests(v.forest, j.g)}, {}};
  cancel_bigons(p.pair);
  p.schedule = plan_schedule(p.pair);
  const int peak = p.schedule.peak_width + u.offset();
  if (peak > caps.max_width) {
    throw ResourceCapError("network needs " + std::to_string(peak) + " strands, cap " + std::to_string(caps.max_width),
                           static_cast<std::size_t>(peak));
  }
  return p;
}

template <class Ring>
CabledState<Ring> run(CabledState<Ring> x, const Schedule& s, int offset, const Ring& ring, const Caps& caps,
                      EvalStats* stats) {
  if (x.width != s.start_width + offset) throw DomainError("state width does not match the forest pair");
  std::size_t peak = x.terms.size();
  for (const auto& op : s.ops) {
    x = op.kind == OpKind::Split ? split(x, op.strand + offset, ring, caps) : merge(x, op.strand + offset, ring, caps);
    peak = std::max(peak, x.terms.size());
  }
  if (stats != nullptr) {
    stats->peak_terms = std::max(stats->peak_terms, peak);
    stats->peak_width = std::max(stats->peak_width, s.peak_width + offset);
  }
  return x;
}

}  // namespace

LimitVector vacuum(Mode mode, const Tree& t) {
  LimitVector v;
  v.mode = mode;
  v.tree = t;
  v.base = cup_state<ExactRing>();
  v.d_half = -1;
  if (mode == Mode::Psi) {
    if (t.is_leaf()) throw DomainError("psi-mode vacuum needs a tree with at least two leaves");
    v.forest = Forest(std::vector<Tree>{t.left(), t.right()});
  } else {
    // spectator strand 0 bent down onto the root strand
    v.forest = Forest(t);
  }
  return v;
}

LimitVector state_vector(Mode mode, const Tree& t, CabledState<ExactRing> x, int d_half) {
  const int off = mode == Mode::Omega ? 1 : 0;
  if (x.width != t.leaf_count() + off) throw DomainError("state width does not match the tree");
  LimitVector v;
  v.mode = mode;
  v.tree = t;
  v.forest = Forest::identity(t.leaf_count());
  v.base = std::move(x);
  v.d_half = d_half;
  return v;
}

LimitVector act(const FElement& g, const LimitVector& v, const Caps& caps) {
  if (g.is_identity()) return v;
  const TreeJoin j = tree_join(g.bottom(), v.tree);
  check_leaves(j.join, caps);
  LimitVector out = v;
  Tree t = graft(g.top(), j.f);
  Forest f = compose_forests(v.forest, j.g);
  // (T.f_i, Phi(f_i) y) ~ (T, y): strip carets the tree and forest share.
  while (true) {
    const auto common = common_pairs(sibling_leaf_pairs(t), sibling_leaf_pairs(f));
    if (common.empty()) break;
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      t = remove_caret(t, *it);
      f = remove_caret(f, *it);
    }
  }
  out.tree = std::move(t);
  out.forest = std::move(f);
  return out;
}

PendingScalar inner_product(const LimitVector& u, const LimitVector& v, const Caps& caps, EvalStats* stats) {
  const Prepared p = prepare(u, v, caps);
  const ExactRing ring;
  const auto x = run(u.base, p.schedule, u.offset(), ring, caps, stats);
  PendingScalar out{RationalFunction(pair_states(x, v.base, ring)), x.vertices + v.base.vertices,
                    u.d_half + v.d_half};
  if (stats != nullptr) {
    stats->leaves = std::max(stats->leaves, p.tree.leaf_count());
    stats->vertices = std::max(stats->vertices, out.vertices);
  }
  return out;
}

double inner_product_numeric(const LimitVector& u, const LimitVector& v, double delta, const Caps& caps,
                             EvalStats* stats) {
  const Prepared p = prepare(u, v, caps);
  const NumericRing ring{delta};
  const auto x = run(convert_state(u.base, ring), p.schedule, u.offset(), ring, caps, stats);
  const double raw = pair_states(x, convert_state(v.base, ring), ring);
  const int vertices = x.vertices + v.base.vertices;
  if (stats != nullptr) {
    stats->leaves = std::max(stats->leaves, p.tree.leaf_count());
    stats->vertices = std::max(stats->vertices, vertices);
  }
  return raw * normalization(vertices, u.d_half + v.d_half, delta);
}

Materialized materialize_pair(const LimitVector& u, const LimitVector& v, const Caps& caps) {
  check_mode(u, v);
  const TreeJoin j = tree_join(u.tree, v.tree);
  check_leaves(j.join, caps);
  const int n = j.join.leaf_count();
  if (n + u.offset() > caps.max_width) {
    throw ResourceCapError("materializing needs " + std::to_string(n + u.offset()) + " strands, cap " +
                               std::to_string(caps.max_width),
                           static_cast<std::size_t>(n + u.offset()));
  }
  auto expand = [&](const LimitVector& w, const Forest& f) {
    const Schedule s = plan_schedule({compose_forests(w.forest, f), Forest::identity(n)});
    return run(w.base, s, w.offset(), ExactRing{}, caps, nullptr);
  };
  return {j.join, expand(u, j.f), expand(v, j.g)};
}

bool vectors_equal(const LimitVector& u, const LimitVector& v, const Caps& caps) {
  const Materialized m = materialize_pair(u, v, caps);
  const int dv = m.u.vertices - m.v.vertices;
  const int dd = v.d_half - u.d_half;
  if (dv % 2 != 0 || dd % 2 != 0) {
    // Normalizations differ by a square root: compare through the norm of u - v.
    const RationalFunction uu = inner_product(u, u, caps).exact();
    const RationalFunction vv = inner_product(v, v, caps).exact();
    const RationalFunction uv = inner_product(u, v, caps).exact();
    return uu + vv - uv - uv == RationalFunction(0);
  }
  // u == v  <=>  x_u = x_v * lambda^(dv/2) * d^(dd/2)
  const RationalFunction factor = vertex_lambda().pow(dv / 2) * RationalFunction::d().pow(dd / 2);
  if (m.u.terms.size() != m.v.terms.size()) return false;
  for (const auto& [p, c] : m.u.terms) {
    auto it = m.v.terms.find(p);
    if (it == m.v.terms.end()) return false;
    if (RationalFunction(c) != RationalFunction(it->second) * factor) return false;
  }
  return true;
}

}  // namespace wysiwyg
