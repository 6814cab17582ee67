#include "wysiwyg/cabled.hpp"

#include <cmath>

namespace wysiwyg {

NumericRing::Coeff NumericRing::delta_pow(int k) const { return std::pow(delta, k); }

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  return (end != nullptr && *end == '\0' && x > 0) ? static_cast<int>(x) : fallback;
}

}  // namespace

Caps Caps::from_env() {
  Caps c;
  c.max_width = env_int("WYSIWYG_MAX_WIDTH", c.max_width);
  c.max_terms = static_cast<std::size_t>(env_int("WYSIWYG_MAX_TERMS", static_cast<int>(c.max_terms)));
  c.max_leaves = env_int("WYSIWYG_MAX_LEAVES", c.max_leaves);
  return c;
}

bool has_turnback(const Pairing& p) {
  for (std::size_t a = 0; a + 1 < p.size(); a += 2) {
    if (static_cast<std::size_t>(p[a]) == a + 1) return true;
  }
  return false;
}

Pairing apply_window(const Pairing& state, int start, int bottom, const Pairing& gadget, int top, int& loops) {
  const int n = static_cast<int>(state.size());
  const int s = start, b = bottom;
  Pairing out(static_cast<std::size_t>(n - b + top));
  std::vector<char> vis(static_cast<std::size_t>(b), 0);
  auto outside = [&](int x) { return x < s || x >= s + b; };
  auto map_out = [&](int x) { return x < s ? x : x - b + top; };

  // Continue a walk that has just arrived at state point x.
  auto follow = [&](int x) -> int {
    while (true) {
      if (outside(x)) return map_out(x);
      const int l = x - s;
      vis[static_cast<std::size_t>(l)] = 1;
      const int q = gadget[static_cast<std::size_t>(l)];
      if (q >= b) return s + (q - b);
      vis[static_cast<std::size_t>(q)] = 1;
      x = state[static_cast<std::size_t>(s + q)];
    }
  };

  std::vector<char> done(out.size(), 0);
  for (int j = 0; j < n; ++j) {
    if (!outside(j)) continue;
    const int from = map_out(j);
    if (done[static_cast<std::size_t>(from)]) continue;
    const int to = follow(state[static_cast<std::size_t>(j)]);
    out.set(static_cast<std::size_t>(from), static_cast<std::size_t>(to));
    done[static_cast<std::size_t>(from)] = done[static_cast<std::size_t>(to)] = 1;
  }
  for (int i = 0; i < top; ++i) {
    const int from = s + i;
    if (done[static_cast<std::size_t>(from)]) continue;
    const int q = gadget[static_cast<std::size_t>(b + i)];
    int to;
    if (q >= b) {
      to = s + (q - b);
    } else {
      vis[static_cast<std::size_t>(q)] = 1;
      to = follow(state[static_cast<std::size_t>(s + q)]);
    }
    out.set(static_cast<std::size_t>(from), static_cast<std::size_t>(to));
    done[static_cast<std::size_t>(from)] = done[static_cast<std::size_t>(to)] = 1;
  }

  loops = 0;
  for (int l = 0; l < b; ++l) {
    if (vis[static_cast<std::size_t>(l)]) continue;
    ++loops;
    int cur = l;
    do {
      vis[static_cast<std::size_t>(cur)] = 1;
      const int y = state[static_cast<std::size_t>(s + cur)] - s;
      vis[static_cast<std::size_t>(y)] = 1;
      cur = gadget[static_cast<std::size_t>(y)];
    } while (cur != l);
  }
  return out;
}

namespace {

TLMor bare_vertex() {
  Pairing p(6);
  p.set(0, 2);
  p.set(1, 5);
  p.set(3, 4);
  return TLMor::basis(2, 4, p);
}

}  // namespace

const TLMor& split_gadget() {
  static const TLMor g = tl_compose(p2(), bare_vertex());
  return g;
}

const TLMor& merge_gadget() {
  static const TLMor g = tl_compose(tl_tensor(p2(), p2()), adjoint(bare_vertex()));
  return g;
}

int count_cycles(const Pairing& a, const Pairing& b) {
  std::vector<char> seen(a.size(), 0);
  int cycles = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    std::size_t x = s;
    do {
      seen[x] = 1;
      const auto y = static_cast<std::size_t>(a[x]);
      seen[y] = 1;
      x = static_cast<std::size_t>(b[y]);
    } while (x != s);
  }
  return cycles;
}

TLMor to_plain(const CabledState<ExactRing>& x) {
  TLMor out(0, 2 * x.width);
  out.set_vertex_count(x.vertices);
  for (const auto& [p, c] : expand_projectors(x, ExactRing{})) out.add_term(p, c);
  return out;
}

CabledState<ExactRing> from_plain(const TLMor& v) {
  if (v.source() != 0 || v.target() % 2 != 0) throw DomainError("projected states are 0 -> 2w vectors");
  CabledState<ExactRing> s;
  s.width = v.target() / 2;
  s.vertices = v.vertex_count();
  for (const auto& [p, c] : v.terms()) {
    if (!has_turnback(p)) s.add(p, c);
  }
  return s;
}

}  // namespace wysiwyg
