#pragma once

// Temperley-Lieb diagrams with exact Laurent-polynomial coefficients, and
// the trivalent category realized inside them by cabling every X-strand
// with the Jones-Wenzl projector p2 = id - e/delta.
//
// A morphism m -> n has m bottom points (indices 0..m-1, left to right)
// and n top points (indices m..m+n-1).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wysiwyg/forest.hpp"
#include "wysiwyg/poly.hpp"

namespace wysiwyg {

/// Non-crossing perfect matching, stored as the partner of every point.
class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(std::vector<int> partners);
  explicit Pairing(std::size_t points) : p_(points, '\0') {}

  std::size_t size() const { return p_.size(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(p_[i]); }
  void set(std::size_t i, std::size_t j) {
    p_[i] = static_cast<char>(j);
    p_[j] = static_cast<char>(i);
  }
  const std::string& key() const { return p_; }

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::string p_;
};

struct PairingHash {
  std::size_t operator()(const Pairing& p) const noexcept { return std::hash<std::string>{}(p.key()); }
};

/// Composite pairing of `lower` (m -> n) under `upper` (n -> p) plus the
/// number of closed loops formed in the middle.
Pairing compose_pairings(const Pairing& lower, int m, int n, const Pairing& upper, int p, int& loops);

/// True when the points are perfectly and non-crossingly matched.
bool is_planar_pairing(const Pairing& p);

/// Linear combination of m -> n pairings.
class TLMor {
 public:
  using Terms = std::unordered_map<Pairing, Laurent, PairingHash>;

  TLMor(int source, int target) : m_(source), n_(target) {}

  static TLMor identity(int points);
  static TLMor cup();  // 0 -> 2
  static TLMor cap();  // 2 -> 0
  static TLMor basis(int source, int target, const Pairing& p, Laurent c = 1);

  int source() const { return m_; }
  int target() const { return n_; }
  const Terms& terms() const { return terms_; }
  int vertex_count() const { return vertices_; }
  void set_vertex_count(int v) { vertices_ = v; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a basis pairing (0 if absent).
  Laurent coeff(const Pairing& p) const;

  void add_term(const Pairing& p, const Laurent& c);
  TLMor& operator+=(const TLMor& o);
  TLMor& operator-=(const TLMor& o);
  TLMor scaled(const Laurent& c) const;
  /// Exact equality of coefficients (vertex counts are not compared).
  bool same_terms(const TLMor& o) const;

 private:
  int m_, n_;
  int vertices_ = 0;
  Terms terms_;
};

/// `lower` (m -> n) followed by `upper` (n -> p); loops evaluate to delta.
TLMor tl_compose(const TLMor& lower, const TLMor& upper);
/// Side-by-side placement, `left` then `right`.
TLMor tl_tensor(const TLMor& left, const TLMor& right);
/// Vertical reflection m -> n  ==>  n -> m.
TLMor adjoint(const TLMor& v);
/// Closes a square morphism (source == target) into a scalar.
Laurent trace(const TLMor& v);
/// Scalar value of a 0 -> 0 morphism.
Laurent closed_value(const TLMor& v);

/// e_i on `points` strands (0-based left strand i), and p2 = id - e/delta.
TLMor tl_e(int points, int i);
TLMor p2();
/// Post-composes with p2 on target strands (i, i+1), 1-based.
TLMor apply_p2(const TLMor& v, int i);

/// The cabled trivalent vertex 2 -> 4 with p2 on all three legs
/// (vertex_count = 1).
TLMor raw_vertex();
/// lambda with adjoint(raw) o raw = lambda * p2; equal to (d-1)/delta.
const RationalFunction& vertex_lambda();

enum class Mode { Psi, Omega };
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

/// Forest m -> n as a cabled morphism 2m -> 2n (raw vertices, p2 on every
/// leaf strand). The mode is accepted for interface symmetry; forests are
/// interpreted identically in both modes.
TLMor forest_to_morphism(const Forest& f, Mode mode = Mode::Psi);
/// Tree vector: Psi mode gives 0 -> 2n (the root caret replaced by a cup),
/// Omega mode gives 2 -> 2n.
TLMor tree_vector(const Tree& t, Mode mode);

/// Normalized inner product <u, v> = v* u closed, divided by
/// lambda^((vc_u + vc_v)/2), and by d for 2 -> 2n vectors (trace
/// normalization). Throws DomainError on an odd total vertex count.
RationalFunction inner_product(const TLMor& u, const TLMor& v);

/// Largest morphism arity (in TL points) the dense routines accept.
inline constexpr int kMaxPlainPoints = 28;

}  // namespace wysiwyg
