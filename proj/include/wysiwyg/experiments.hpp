#pragma once

// Vacuum coefficients and the finite forms of the limit theorems: each
// limit statement becomes an exact identity that holds from some n on.

#include <optional>
#include <string>
#include <vector>

#include "wysiwyg/limit.hpp"

namespace wysiwyg {

/// The vacuum of a mode over its smallest tree (caret for Psi, leaf for Omega).
LimitVector vacuum(Mode mode);

/// The closed diagram of g (tree pair tied at the roots in Omega mode,
/// roots bent into a cup in Psi mode), normalized so that identity -> 1.
PendingScalar eval_closed_pair(const FElement& g, Mode mode, const Caps& caps = Caps::from_env(),
                               EvalStats* stats = nullptr);
double eval_closed_pair_numeric(const FElement& g, Mode mode, double delta, const Caps& caps = Caps::from_env(),
                                EvalStats* stats = nullptr);

/// <pi(g) vacuum, vacuum>.
RationalFunction coeff(Mode mode, const FElement& g, const Caps& caps = Caps::from_env());
/// Same coefficient computed as <act(g, vacuum), vacuum>.
RationalFunction coeff_via_action(Mode mode, const FElement& g, const Caps& caps = Caps::from_env());
double coeff_numeric(Mode mode, const FElement& g, double delta, const Caps& caps = Caps::from_env());

struct CoeffReport {
  std::string element;
  Mode mode = Mode::Psi;
  std::optional<RationalFunction> exact;
  std::optional<double> numeric;
  EvalStats stats;
  double millis = 0;
};
/// Exact value when `exact` is set, numeric value when `delta` is given
/// (both may be requested).
CoeffReport coeff_report(Mode mode, const FElement& g, const std::string& label, bool exact,
                         std::optional<double> delta, const Caps& caps = Caps::from_env());

/// Outcome of a "holds for all n >= N" search over n = 0 .. n_max.
struct Threshold {
  std::optional<int> n;     // smallest N with the identity on [N, n_max]
  std::vector<bool> holds;  // per n
};

/// <A^n g Psi, h Psi> == coeff(g) coeff(h).
Threshold lemma43_threshold(const FElement& g, const FElement& h, int n_max, const Caps& caps = Caps::from_env());
/// <A^n g Psi, h Psi> as an exact value.
RationalFunction lemma43_lhs(const FElement& g, const FElement& h, int n, const Caps& caps = Caps::from_env());

/// coeff(mode, A^n).
RationalFunction an_coefficient(Mode mode, int n, const Caps& caps = Caps::from_env());
double an_coefficient_numeric(Mode mode, int n, double delta, const Caps& caps = Caps::from_env());

struct DecayRow {
  int n;
  double value;
  double ratio;  // value(n) / value(n-1); NaN for the first row
  std::size_t terms;
  double millis;
};
/// Omega-mode |coeff(A^n)| for n = 1 .. n_max at a numeric delta.
std::vector<DecayRow> decay_check(int n_max, double delta, const Caps& caps = Caps::from_env());

/// <sigma^n(g) xi, eta> == coeff(omega, g) <xi, eta>.
Threshold sigma_limit_check(const FElement& g, const LimitVector& xi, const LimitVector& eta, int n_max,
                            const Caps& caps = Caps::from_env());
/// <A^n xi, eta> == <xi, Psi><Psi, eta> (Psi mode).
Threshold weak_limit_projection_check(const LimitVector& xi, const LimitVector& eta, int n_max,
                                      const Caps& caps = Caps::from_env());

using ExactMatrix = std::vector<std::vector<RationalFunction>>;
using NumericMatrix = std::vector<std::vector<double>>;
/// G[i][j] = <g_i vacuum, g_j vacuum>. At most 12 elements.
ExactMatrix gram(Mode mode, const std::vector<FElement>& elements, const Caps& caps = Caps::from_env());
NumericMatrix gram_numeric(Mode mode, const std::vector<FElement>& elements, double delta,
                           const Caps& caps = Caps::from_env());
NumericMatrix evaluate(const ExactMatrix& g, double delta);
/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const NumericMatrix& g);

/// delta = 2 cos(pi / n).
double delta_root(int n);
/// delta in {2cos(pi/n), n >= 4} or delta >= 2.
bool admissible_delta(double delta);

}  // namespace wysiwyg
