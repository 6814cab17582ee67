#include "wysiwyg/tl.hpp"

#include <mutex>
#include <stdexcept>

#include "wysiwyg/errors.hpp"

namespace wysiwyg {

Pairing::Pairing(std::vector<int> partners) : p_(partners.size(), '\0') {
  if (partners.size() > 255) throw ResourceCapError("pairing has more than 255 points", partners.size());
  for (std::size_t i = 0; i < partners.size(); ++i) {
    const int j = partners[i];
    if (j < 0 || static_cast<std::size_t>(j) >= partners.size() || partners[static_cast<std::size_t>(j)] != static_cast<int>(i) ||
        j == static_cast<int>(i)) {
      throw DomainError("partner list is not a perfect matching");
    }
    p_[i] = static_cast<char>(j);
  }
}

bool is_planar_pairing(const Pairing& p) {
  // Chords (i, j) with i < j are non-crossing iff they nest like brackets.
  std::vector<int> stack;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int j = p[i];
    if (j < 0 || static_cast<std::size_t>(j) >= p.size() || p[static_cast<std::size_t>(j)] != static_cast<int>(i) ||
        j == static_cast<int>(i)) {
      return false;
    }
    if (j > static_cast<int>(i)) {
      stack.push_back(static_cast<int>(i));
    } else {
      if (stack.empty() || stack.back() != j) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

Pairing compose_pairings(const Pairing& lower, int m, int n, const Pairing& upper, int p, int& loops) {
  // Output points: lower bottoms 0..m-1, then upper tops m..m+p-1.
  Pairing out(static_cast<std::size_t>(m + p));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);

  // Walk from an outer point until another outer point is reached.
  auto walk = [&](bool in_lower, int idx) -> int {
    while (true) {
      if (in_lower) {
        const int q = lower[static_cast<std::size_t>(idx)];
        if (q < m) return q;
        const int mid = q - m;
        seen[static_cast<std::size_t>(mid)] = 1;
        in_lower = false;
        idx = mid;
      } else {
        const int q = upper[static_cast<std::size_t>(idx)];
        if (q >= n) return m + (q - n);
        seen[static_cast<std::size_t>(q)] = 1;
        in_lower = true;
        idx = m + q;
      }
    }
  };

  std::vector<char> done(static_cast<std::size_t>(m + p), 0);
  for (int i = 0; i < m; ++i) {
    if (done[static_cast<std::size_t>(i)]) continue;
    const int j = walk(true, i);
    out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    done[static_cast<std::size_t>(i)] = done[static_cast<std::size_t>(j)] = 1;
  }
  for (int t = 0; t < p; ++t) {
    const int i = m + t;
    if (done[static_cast<std::size_t>(i)]) continue;
    const int j = walk(false, n + t);
    out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    done[static_cast<std::size_t>(i)] = done[static_cast<std::size_t>(j)] = 1;
  }

  loops = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++loops;
    int mid = s;
    do {
      seen[static_cast<std::size_t>(mid)] = 1;
      const int q = upper[static_cast<std::size_t>(mid)];  // stays in the middle
      seen[static_cast<std::size_t>(q)] = 1;
      mid = lower[static_cast<std::size_t>(m + q)] - m;
    } while (mid != s);
  }
  return out;
}

// ------------------------------------------------------------------ TLMor

namespace {

void check_points(int points) {
  if (points > kMaxPlainPoints) {
    throw ResourceCapError("dense Temperley-Lieb morphism exceeds " + std::to_string(kMaxPlainPoints) + " points",
                           static_cast<std::size_t>(points));
  }
}

}  // namespace

TLMor TLMor::identity(int points) {
  Pairing p(static_cast<std::size_t>(2 * points));
  for (int i = 0; i < points; ++i) p.set(static_cast<std::size_t>(i), static_cast<std::size_t>(points + i));
  return basis(points, points, p);
}

TLMor TLMor::cup() {
  Pairing p(2);
  p.set(0, 1);
  return basis(0, 2, p);
}

TLMor TLMor::cap() {
  Pairing p(2);
  p.set(0, 1);
  return basis(2, 0, p);
}

TLMor TLMor::basis(int source, int target, const Pairing& p, Laurent c) {
  TLMor r(source, target);
  r.add_term(p, c);
  return r;
}

Laurent TLMor::coeff(const Pairing& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Laurent() : it->second;
}

void TLMor::add_term(const Pairing& p, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLMor& TLMor::operator+=(const TLMor& o) {
  if (o.m_ != m_ || o.n_ != n_) throw DomainError("adding morphisms of different arity");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

TLMor& TLMor::operator-=(const TLMor& o) {
  if (o.m_ != m_ || o.n_ != n_) throw DomainError("subtracting morphisms of different arity");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

TLMor TLMor::scaled(const Laurent& c) const {
  TLMor r(m_, n_);
  r.vertices_ = vertices_;
  if (c.is_zero()) return r;
  for (const auto& [p, x] : terms_) r.terms_.emplace(p, x * c);
  return r;
}

bool TLMor::same_terms(const TLMor& o) const {
  if (o.m_ != m_ || o.n_ != n_ || o.terms_.size() != terms_.size()) return false;
  for (const auto& [p, c] : terms_) {
    if (o.coeff(p) != c) return false;
  }
  return true;
}

TLMor tl_compose(const TLMor& lower, const TLMor& upper) {
  if (lower.target() != upper.source()) {
    throw DomainError("Temperley-Lieb arity mismatch: " + std::to_string(lower.target()) + " vs " +
                      std::to_string(upper.source()));
  }
  check_points(lower.source());
  check_points(upper.target());
  const int m = lower.source(), n = lower.target(), p = upper.target();
  TLMor out(m, p);
  out.set_vertex_count(lower.vertex_count() + upper.vertex_count());
  for (const auto& [a, ca] : lower.terms()) {
    for (const auto& [b, cb] : upper.terms()) {
      int loops = 0;
      Pairing c = compose_pairings(a, m, n, b, p, loops);
      out.add_term(c, (ca * cb).times_delta_pow(loops));
    }
  }
  return out;
}

TLMor tl_tensor(const TLMor& left, const TLMor& right) {
  const int m1 = left.source(), n1 = left.target(), m2 = right.source(), n2 = right.target();
  check_points(m1 + m2);
  check_points(n1 + n2);
  const int m = m1 + m2, n = n1 + n2;
  auto map_left = [&](int i) { return i < m1 ? i : m + (i - m1); };
  auto map_right = [&](int i) { return i < m2 ? m1 + i : m + n1 + (i - m2); };
  TLMor out(m, n);
  out.set_vertex_count(left.vertex_count() + right.vertex_count());
  for (const auto& [a, ca] : left.terms()) {
    for (const auto& [b, cb] : right.terms()) {
      Pairing c(static_cast<std::size_t>(m + n));
      for (std::size_t i = 0; i < a.size(); ++i) {
        c.set(static_cast<std::size_t>(map_left(static_cast<int>(i))), static_cast<std::size_t>(map_left(a[i])));
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        c.set(static_cast<std::size_t>(map_right(static_cast<int>(i))), static_cast<std::size_t>(map_right(b[i])));
      }
      out.add_term(c, ca * cb);
    }
  }
  return out;
}

TLMor adjoint(const TLMor& v) {
  const int m = v.source(), n = v.target();
  // old bottom i -> new top (n + i); old top (m + j) -> new bottom j
  auto flip = [&](int i) { return i < m ? n + i : i - m; };
  TLMor out(n, m);
  out.set_vertex_count(v.vertex_count());
  for (const auto& [a, c] : v.terms()) {
    Pairing b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      b.set(static_cast<std::size_t>(flip(static_cast<int>(i))), static_cast<std::size_t>(flip(a[i])));
    }
    out.add_term(b, c);
  }
  return out;
}

Laurent trace(const TLMor& v) {
  if (v.source() != v.target()) throw DomainError("trace of a non-square morphism");
  const int n = v.source();
  Laurent total;
  for (const auto& [a, c] : v.terms()) {
    // closure strands join bottom i with top n + i
    std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++loops;
      int x = s;
      while (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        const int y = a[static_cast<std::size_t>(x)];
        seen[static_cast<std::size_t>(y)] = 1;
        x = y < n ? y + n : y - n;
      }
    }
    total += c.times_delta_pow(loops);
  }
  return total;
}

Laurent closed_value(const TLMor& v) {
  if (v.source() != 0 || v.target() != 0) throw DomainError("closed_value needs a 0 -> 0 morphism");
  return v.coeff(Pairing());
}

TLMor tl_e(int points, int i) {
  if (i < 0 || i + 1 >= points) throw DomainError("e_i strand index out of range");
  Pairing p(static_cast<std::size_t>(2 * points));
  for (int k = 0; k < points; ++k) {
    if (k == i || k == i + 1) continue;
    p.set(static_cast<std::size_t>(k), static_cast<std::size_t>(points + k));
  }
  p.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
  p.set(static_cast<std::size_t>(points + i), static_cast<std::size_t>(points + i + 1));
  return TLMor::basis(points, points, p);
}

TLMor p2() {
  TLMor r = TLMor::identity(2);
  r -= tl_e(2, 0).scaled(Laurent::delta_pow(-1));
  return r;
}

TLMor apply_p2(const TLMor& v, int i) {
  if (i < 1 || i + 1 > v.target()) {
    throw DomainError("p2 strand index " + std::to_string(i) + " out of range for " + std::to_string(v.target()) +
                      " strands");
  }
  TLMor r = v;
  r -= tl_compose(v, tl_e(v.target(), i - 1)).scaled(Laurent::delta_pow(-1));
  r.set_vertex_count(v.vertex_count());
  return r;
}

TLMor raw_vertex() {
  static const TLMor y = [] {
    // bottom pair rises to top 1 and 4; a cup creates top 2, 3
    Pairing p(6);
    p.set(0, 2);
    p.set(1, 5);
    p.set(3, 4);
    TLMor legs = tl_compose(p2(), TLMor::basis(2, 4, p));
    TLMor v = tl_compose(legs, tl_tensor(p2(), p2()));
    v.set_vertex_count(1);
    return v;
  }();
  return y;
}

const RationalFunction& vertex_lambda() {
  static std::once_flag once;
  static RationalFunction lambda;
  std::call_once(once, [] {
    const TLMor y = raw_vertex();
    const TLMor bigon = tl_compose(y, adjoint(y));
    const Laurent l = bigon.coeff(TLMor::identity(2).terms().begin()->first);
    if (!bigon.same_terms(p2().scaled(l))) throw std::logic_error("vertex bigon is not proportional to p2");
    lambda = RationalFunction(l);
  });
  return lambda;
}

const char* mode_name(Mode m) { return m == Mode::Psi ? "psi" : "omega"; }

Mode parse_mode(const std::string& s) {
  if (s == "psi") return Mode::Psi;
  if (s == "omega") return Mode::Omega;
  throw DomainError("unknown mode '" + s + "' (expected psi or omega)");
}

namespace {

TLMor tree_morphism(const Tree& t) {
  if (t.is_leaf()) return p2();
  TLMor up = tl_tensor(tree_morphism(t.left()), tree_morphism(t.right()));
  return tl_compose(raw_vertex(), up);
}

TLMor x_cup() {
  Pairing p(4);
  p.set(0, 3);
  p.set(1, 2);
  return apply_p2(apply_p2(TLMor::basis(0, 4, p), 1), 3);
}

}  // namespace

TLMor forest_to_morphism(const Forest& f, Mode /*mode*/) {
  check_points(2 * f.roots());
  check_points(2 * f.leaves());
  if (f.roots() == 0) return TLMor::identity(0);
  TLMor out = tree_morphism(f.trees().front());
  for (std::size_t k = 1; k < f.trees().size(); ++k) out = tl_tensor(out, tree_morphism(f.trees()[k]));
  return out;
}

TLMor tree_vector(const Tree& t, Mode mode) {
  check_points(2 * t.leaf_count());
  if (mode == Mode::Omega) return tree_morphism(t);
  if (t.is_leaf()) throw DomainError("psi-mode space over a one-leaf tree is zero");
  return tl_compose(x_cup(), tl_tensor(tree_morphism(t.left()), tree_morphism(t.right())));
}

RationalFunction inner_product(const TLMor& u, const TLMor& v) {
  if (u.source() != v.source() || u.target() != v.target()) throw DomainError("inner product arity mismatch");
  const int vc = u.vertex_count() + v.vertex_count();
  if (vc % 2 != 0) throw DomainError("odd total vertex count in exact inner product");
  const TLMor uv = tl_compose(u, adjoint(v));
  RationalFunction value;
  if (u.source() == 0) {
    value = RationalFunction(closed_value(uv));
  } else if (u.source() == 2) {
    value = RationalFunction(trace(uv)) / RationalFunction::d();
  } else {
    throw DomainError("inner product defined for 0 -> 2n and 2 -> 2n vectors only");
  }
  return value / vertex_lambda().pow(vc / 2);
}

}  // namespace wysiwyg
