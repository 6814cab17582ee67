#pragma once

// Vectors of the cabled trivalent category, Mor(1, X^w), stored in the
// image of the projector P = p2 (x) ... (x) p2. A basis pairing s stands
// for P.s; pairings with a turnback inside one X-strand (points 2k, 2k+1
// matched) are zero and never stored. Vertices act on a 2- or 4-point
// window, so a split or merge costs O(#terms * points).
//
// Coefficients come from a Ring: ExactRing (Laurent polynomials in delta)
// or NumericRing (double at a fixed delta).

#include <cstddef>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wysiwyg/errors.hpp"
#include "wysiwyg/poly.hpp"
#include "wysiwyg/tl.hpp"

namespace wysiwyg {

struct ExactRing {
  using Coeff = Laurent;
  static Coeff from_laurent(const Laurent& l) { return l; }
  static Coeff delta_pow(int k) { return Laurent::delta_pow(k); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
};

struct NumericRing {
  using Coeff = double;
  double delta = 2.0;
  Coeff from_laurent(const Laurent& l) const { return l.eval(delta); }
  Coeff delta_pow(int k) const;
  static bool is_zero(const Coeff& c) { return c == 0.0; }
};

/// Resource limits for diagram evaluation. Defaults come from the
/// environment (WYSIWYG_MAX_WIDTH, WYSIWYG_MAX_TERMS, WYSIWYG_MAX_LEAVES).
struct Caps {
  int max_width = 16;                 // simultaneous X-strands
  std::size_t max_terms = 5'000'000;  // basis terms per state
  int max_leaves = 512;               // leaves per tree handled by experiments
  static Caps from_env();
};

template <class Ring>
struct CabledState {
  using Coeff = typename Ring::Coeff;
  int width = 0;     // X-strands; points are 0 .. 2*width-1
  int vertices = 0;  // raw trivalent vertices applied so far
  std::unordered_map<Pairing, Coeff, PairingHash> terms;

  void add(const Pairing& p, const Coeff& c) {
    if (Ring::is_zero(c)) return;
    auto [it, fresh] = terms.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (Ring::is_zero(it->second)) terms.erase(it);
    }
  }
};

/// True when some X-strand k has its two points 2k, 2k+1 matched together.
bool has_turnback(const Pairing& p);

/// Apply a local Temperley-Lieb diagram whose `bottom` points sit on state
/// points [start, start + bottom). Returns the new pairing and the number
/// of closed loops.
Pairing apply_window(const Pairing& state, int start, int bottom, const Pairing& gadget, int top, int& loops);

/// Gadgets: the vertex with its input projector expanded (2 -> 4), and
/// the adjoint vertex with both input projectors expanded (4 -> 2).
const TLMor& split_gadget();
const TLMor& merge_gadget();

/// The X-cup on two strands (points 0-3, 1-2), unnormalized.
template <class Ring>
CabledState<Ring> cup_state() {
  CabledState<Ring> s;
  s.width = 2;
  Pairing p(4);
  p.set(0, 3);
  p.set(1, 2);
  s.terms.emplace(p, typename Ring::Coeff(1));
  return s;
}

/// Convert an exact state to another ring.
template <class Ring>
CabledState<Ring> convert_state(const CabledState<ExactRing>& x, const Ring& ring) {
  CabledState<Ring> out;
  out.width = x.width;
  out.vertices = x.vertices;
  for (const auto& [p, c] : x.terms) out.add(p, ring.from_laurent(c));
  return out;
}

namespace detail {

template <class Ring>
CabledState<Ring> apply_gadget(const CabledState<Ring>& x, const TLMor& gadget, int strand, const Ring& ring,
                               const Caps& caps) {
  const int bottom = gadget.source(), top = gadget.target();
  const int new_width = x.width + (top - bottom) / 2;
  if (strand < 0 || 2 * strand + bottom > 2 * x.width) {
    throw DomainError("strand index " + std::to_string(strand) + " out of range for width " + std::to_string(x.width));
  }
  if (new_width > caps.max_width) {
    throw ResourceCapError("state width " + std::to_string(new_width) + " exceeds cap " + std::to_string(caps.max_width),
                           static_cast<std::size_t>(new_width));
  }
  std::vector<std::pair<Pairing, typename Ring::Coeff>> local;
  for (const auto& [g, c] : gadget.terms()) local.emplace_back(g, ring.from_laurent(c));

  CabledState<Ring> out;
  out.width = new_width;
  out.vertices = x.vertices + 1;
  out.terms.reserve(x.terms.size() * 2);
  for (const auto& [p, c] : x.terms) {
    for (const auto& [g, gc] : local) {
      int loops = 0;
      Pairing q = apply_window(p, 2 * strand, bottom, g, top, loops);
      if (has_turnback(q)) continue;
      typename Ring::Coeff v = c * gc;
      if (loops != 0) v = v * ring.delta_pow(loops);
      out.add(q, v);
    }
  }
  if (out.terms.size() > caps.max_terms) {
    throw ResourceCapError("state has " + std::to_string(out.terms.size()) + " terms, cap " +
                               std::to_string(caps.max_terms),
                           out.terms.size());
  }
  return out;
}

}  // namespace detail

/// Apply the (raw) vertex to X-strand k (0-based): width grows by one.
template <class Ring>
CabledState<Ring> split(const CabledState<Ring>& x, int k, const Ring& ring, const Caps& caps) {
  return detail::apply_gadget(x, split_gadget(), k, ring, caps);
}

/// Apply the (raw) adjoint vertex to X-strands k, k+1: width shrinks by one.
template <class Ring>
CabledState<Ring> merge(const CabledState<Ring>& x, int k, const Ring& ring, const Caps& caps) {
  return detail::apply_gadget(x, merge_gadget(), k, ring, caps);
}

/// Expand P.s into plain pairings (no implicit projector).
template <class Ring>
std::unordered_map<Pairing, typename Ring::Coeff, PairingHash> expand_projectors(const CabledState<Ring>& x,
                                                                                 const Ring& ring) {
  using Coeff = typename Ring::Coeff;
  std::unordered_map<Pairing, Coeff, PairingHash> cur;
  for (const auto& [p, c] : x.terms) cur[p] += c;
  const Coeff minus_inv = -ring.delta_pow(-1);
  const Coeff delta = ring.delta_pow(1);
  for (int k = 0; k < x.width; ++k) {
    const std::size_t a = static_cast<std::size_t>(2 * k), b = a + 1;
    std::unordered_map<Pairing, Coeff, PairingHash> next = cur;
    for (const auto& [p, c] : cur) {
      // e_k on a plain pairing: loop if a-b already matched, else reconnect
      Pairing q = p;
      Coeff v = c * minus_inv;
      if (static_cast<std::size_t>(p[a]) == b) {
        v = v * delta;
      } else {
        const int u = p[a], w = p[b];
        q.set(static_cast<std::size_t>(u), static_cast<std::size_t>(w));
        q.set(a, b);
      }
      auto [it, fresh] = next.try_emplace(q, v);
      if (!fresh) it->second += v;
    }
    cur.clear();
    for (auto& [p, c] : next) {
      if (!Ring::is_zero(c)) cur.emplace(p, std::move(c));
    }
  }
  return cur;
}

/// Number of cycles in the union of two perfect matchings on one point set.
int count_cycles(const Pairing& a, const Pairing& b);

/// <x, y> = y* P x as a raw (unnormalized) scalar.
template <class Ring>
typename Ring::Coeff pair_states(const CabledState<Ring>& x, const CabledState<Ring>& y, const Ring& ring) {
  if (x.width != y.width) throw DomainError("pairing states of different widths");
  typename Ring::Coeff total(0);
  if (x.terms.empty() || y.terms.empty()) return total;
  const auto px = expand_projectors(x, ring);
  for (const auto& [p, c] : px) {
    for (const auto& [q, d] : y.terms) {
      total += c * d * ring.delta_pow(count_cycles(p, q));
    }
  }
  return total;
}

/// Convert a projected state into a plain 0 -> 2w Temperley-Lieb vector
/// (exact ring only; used to cross-check against the dense routines).
TLMor to_plain(const CabledState<ExactRing>& x);
/// Project a plain 0 -> 2w vector: drop pairings with a turnback.
CabledState<ExactRing> from_plain(const TLMor& v);

}  // namespace wysiwyg
