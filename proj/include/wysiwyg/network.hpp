#pragma once

// Evaluation of forest-pair operators Phi(upper)* Phi(lower) on projected
// states. A forest pair (lower: m -> n, upper: k -> n) is a planar
// trivalent network; it is first reduced by cancelling bigons (valid since
// the normalized vertex is an isometry) and then executed as a sequence
// of splits and merges ordered to keep the number of live strands small.

#include <vector>

#include "wysiwyg/cabled.hpp"
#include "wysiwyg/forest.hpp"

namespace wysiwyg {

struct ForestPair {
  Forest lower;  // m roots -> n leaves, applied first
  Forest upper;  // k roots -> n leaves, applied as an adjoint
};

/// Cancel every caret over leaves (i, i+1) present in both forests.
/// Returns the number of carets removed from each side.
int cancel_bigons(ForestPair& fp);

enum class OpKind { Split, Merge };
struct NetworkOp {
  OpKind kind;
  int strand;  // 0-based, relative to the forest's first root
};

struct Schedule {
  std::vector<NetworkOp> ops;
  int start_width = 0;
  int end_width = 0;
  int peak_width = 0;
};

/// Order the splits of `lower` and merges of `upper` greedily (merge as soon
/// as possible), trying several split policies and keeping the narrowest.
Schedule plan_schedule(const ForestPair& fp);

/// Run a schedule on x, whose first `offset` X-strands are spectators.
template <class Ring>
CabledState<Ring> run_schedule(CabledState<Ring> x, const Schedule& s, int offset, const Ring& ring,
                               const Caps& caps) {
  if (x.width != s.start_width + offset) throw DomainError("state width does not match the forest pair");
  for (const auto& op : s.ops) {
    x = op.kind == OpKind::Split ? split(x, op.strand + offset, ring, caps) : merge(x, op.strand + offset, ring, caps);
  }
  return x;
}

}  // namespace wysiwyg
