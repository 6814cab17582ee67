#include "wysiwyg/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace wysiwyg {

int cancel_bigons(ForestPair& fp) {
  int removed = 0;
  while (true) {
    const auto a = sibling_leaf_pairs(fp.lower);
    const auto b = sibling_leaf_pairs(fp.upper);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) return removed;
    // Remove right to left so earlier indices stay valid.
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      fp.lower = remove_caret(fp.lower, *it);
      fp.upper = remove_caret(fp.upper, *it);
      ++removed;
    }
  }
}

namespace {

enum class Policy { Leftmost, Rightmost, Smallest };

struct Strand {
  int lo, hi;  // leaf range [lo, hi)
  bool pending;
  Tree node;
};

long long range_key(int lo, int hi) { return (static_cast<long long>(lo) << 32) | static_cast<unsigned>(hi); }

void collect_carets(const Tree& t, int lo, std::unordered_map<long long, int>& out) {
  if (t.is_leaf()) return;
  const int mid = lo + t.left().leaf_count();
  out.emplace(range_key(lo, lo + t.leaf_count()), mid);
  collect_carets(t.left(), lo, out);
  collect_carets(t.right(), mid, out);
}

Schedule simulate(const ForestPair& fp, const std::unordered_map<long long, int>& carets, Policy policy) {
  Schedule s;
  std::vector<Strand> strands;
  int lo = 0;
  for (const auto& t : fp.lower.trees()) {
    strands.push_back({lo, lo + t.leaf_count(), !t.is_leaf(), t});
    lo += t.leaf_count();
  }
  s.start_width = static_cast<int>(strands.size());
  s.peak_width = s.start_width;

  auto try_merge = [&]() {
    for (std::size_t i = 0; i + 1 < strands.size(); ++i) {
      const Strand& a = strands[i];
      const Strand& b = strands[i + 1];
      if (a.pending || b.pending) continue;
      auto it = carets.find(range_key(a.lo, b.hi));
      if (it == carets.end() || it->second != a.hi) continue;
      strands[i] = {a.lo, b.hi, false, Tree()};
      strands.erase(strands.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      s.ops.push_back({OpKind::Merge, static_cast<int>(i)});
      return true;
    }
    return false;
  };

  while (true) {
    while (try_merge()) {
    }
    int pick = -1;
    for (int i = 0; i < static_cast<int>(strands.size()); ++i) {
      if (!strands[static_cast<std::size_t>(i)].pending) continue;
      if (pick < 0) {
        pick = i;
        continue;
      }
      switch (policy) {
        case Policy::Leftmost:
          break;
        case Policy::Rightmost:
          pick = i;
          break;
        case Policy::Smallest: {
          const auto& c = strands[static_cast<std::size_t>(i)];
          const auto& p = strands[static_cast<std::size_t>(pick)];
          if (c.hi - c.lo < p.hi - p.lo) pick = i;
          break;
        }
      }
    }
    if (pick < 0) break;
    const Strand st = strands[static_cast<std::size_t>(pick)];
    const Tree l = st.node.left(), r = st.node.right();
    const int mid = st.lo + l.leaf_count();
    strands[static_cast<std::size_t>(pick)] = {st.lo, mid, !l.is_leaf(), l};
    strands.insert(strands.begin() + pick + 1, Strand{mid, st.hi, !r.is_leaf(), r});
    s.ops.push_back({OpKind::Split, pick});
    s.peak_width = std::max(s.peak_width, static_cast<int>(strands.size()));
  }

  s.end_width = static_cast<int>(strands.size());
  if (s.end_width != fp.upper.roots()) throw std::logic_error("forest pair schedule did not reach the upper roots");
  lo = 0;
  for (std::size_t k = 0; k < strands.size(); ++k) {
    const int hi = lo + fp.upper.trees()[k].leaf_count();
    if (strands[k].lo != lo || strands[k].hi != hi) throw std::logic_error("forest pair schedule ended misaligned");
    lo = hi;
  }
  return s;
}

}  // namespace

Schedule plan_schedule(const ForestPair& fp) {
  if (fp.lower.leaves() != fp.upper.leaves()) throw DomainError("forest pair leaf counts differ");
  std::unordered_map<long long, int> carets;
  int lo = 0;
  for (const auto& t : fp.upper.trees()) {
    collect_carets(t, lo, carets);
    lo += t.leaf_count();
  }
  Schedule best;
  bool have = false;
  for (Policy p : {Policy::Leftmost, Policy::Rightmost, Policy::Smallest}) {
    Schedule s = simulate(fp, carets, p);
    if (!have || s.peak_width < best.peak_width) {
      best = std::move(s);
      have = true;
    }
  }
  return best;
}

}  // namespace wysiwyg
