#include "wysiwyg/experiments.hpp"

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace wysiwyg {

LimitVector vacuum(Mode mode) { return vacuum(mode, mode == Mode::Psi ? Tree::caret() : Tree::leaf()); }

namespace {

// pi(g) applied to the vacuum stored over g's bottom tree: the forest of
// the bottom tree under g's top tree.
LimitVector moved_vacuum(const FElement& g, Mode mode) {
  if (g.is_identity()) return vacuum(mode);
  LimitVector u = vacuum(mode, g.bottom());
  u.tree = g.top();
  return u;
}

Threshold threshold_from(std::vector<bool> holds) {
  Threshold t;
  int n = static_cast<int>(holds.size());
  while (n > 0 && holds[static_cast<std::size_t>(n - 1)]) --n;
  if (n < static_cast<int>(holds.size())) t.n = n;
  t.holds = std::move(holds);
  return t;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

PendingScalar eval_closed_pair(const FElement& g, Mode mode, const Caps& caps, EvalStats* stats) {
  const LimitVector u = moved_vacuum(g, mode);
  return inner_product(u, vacuum(mode, u.tree), caps, stats);
}

double eval_closed_pair_numeric(const FElement& g, Mode mode, double delta, const Caps& caps, EvalStats* stats) {
  const LimitVector u = moved_vacuum(g, mode);
  return inner_product_numeric(u, vacuum(mode, u.tree), delta, caps, stats);
}

RationalFunction coeff(Mode mode, const FElement& g, const Caps& caps) {
  return eval_closed_pair(g, mode, caps).exact();
}

RationalFunction coeff_via_action(Mode mode, const FElement& g, const Caps& caps) {
  const LimitVector vac = vacuum(mode);
  return inner_product(act(g, vac, caps), vac, caps).exact();
}

double coeff_numeric(Mode mode, const FElement& g, double delta, const Caps& caps) {
  return eval_closed_pair_numeric(g, mode, delta, caps);
}

CoeffReport coeff_report(Mode mode, const FElement& g, const std::string& label, bool exact,
                         std::optional<double> delta, const Caps& caps) {
  CoeffReport r;
  r.element = label;
  r.mode = mode;
  const auto start = std::chrono::steady_clock::now();
  if (exact) r.exact = eval_closed_pair(g, mode, caps, &r.stats).exact();
  if (delta) r.numeric = eval_closed_pair_numeric(g, mode, *delta, caps, &r.stats);
  r.millis = elapsed_ms(start);
  return r;
}

RationalFunction lemma43_lhs(const FElement& g, const FElement& h, int n, const Caps& caps) {
  const LimitVector psi = vacuum(Mode::Psi);
  const LimitVector u = act(power_A(n), act(g, psi, caps), caps);
  return inner_product(u, act(h, psi, caps), caps).exact();
}

Threshold lemma43_threshold(const FElement& g, const FElement& h, int n_max, const Caps& caps) {
  const RationalFunction rhs = coeff(Mode::Psi, g, caps) * coeff(Mode::Psi, h, caps);
  std::vector<bool> holds;
  for (int n = 0; n <= n_max; ++n) holds.push_back(lemma43_lhs(g, h, n, caps) == rhs);
  return threshold_from(std::move(holds));
}

RationalFunction an_coefficient(Mode mode, int n, const Caps& caps) { return coeff(mode, power_A(n), caps); }

double an_coefficient_numeric(Mode mode, int n, double delta, const Caps& caps) {
  return coeff_numeric(mode, power_A(n), delta, caps);
}

std::vector<DecayRow> decay_check(int n_max, double delta, const Caps& caps) {
  std::vector<DecayRow> rows;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int n = 1; n <= n_max; ++n) {
    const auto start = std::chrono::steady_clock::now();
    EvalStats st;
    const double v = eval_closed_pair_numeric(power_A(n), Mode::Omega, delta, caps, &st);
    rows.push_back({n, v, v / prev, st.peak_terms, elapsed_ms(start)});
    prev = v;
  }
  return rows;
}

Threshold sigma_limit_check(const FElement& g, const LimitVector& xi, const LimitVector& eta, int n_max,
                            const Caps& caps) {
  const RationalFunction rhs = coeff(Mode::Omega, g, caps) * inner_product(xi, eta, caps).exact();
  std::vector<bool> holds;
  for (int n = 0; n <= n_max; ++n) {
    holds.push_back(inner_product(act(sigma_pow(g, n), xi, caps), eta, caps).exact() == rhs);
  }
  return threshold_from(std::move(holds));
}

Threshold weak_limit_projection_check(const LimitVector& xi, const LimitVector& eta, int n_max, const Caps& caps) {
  const LimitVector psi = vacuum(Mode::Psi);
  const RationalFunction rhs = (inner_product(xi, psi, caps) * inner_product(psi, eta, caps)).exact();
  std::vector<bool> holds;
  for (int n = 0; n <= n_max; ++n) {
    holds.push_back(inner_product(act(power_A(n), xi, caps), eta, caps).exact() == rhs);
  }
  return threshold_from(std::move(holds));
}

namespace {

void check_gram_size(std::size_t n) {
  if (n > 12) throw DomainError("gram matrices are limited to 12 elements");
}

}  // namespace

ExactMatrix gram(Mode mode, const std::vector<FElement>& elements, const Caps& caps) {
  check_gram_size(elements.size());
  const std::size_t n = elements.size();
  ExactMatrix g(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = g[j][i] = coeff(mode, multiply(inverse(elements[j]), elements[i]), caps);
    }
  }
  return g;
}

NumericMatrix gram_numeric(Mode mode, const std::vector<FElement>& elements, double delta, const Caps& caps) {
  check_gram_size(elements.size());
  const std::size_t n = elements.size();
  NumericMatrix g(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = g[j][i] = coeff_numeric(mode, multiply(inverse(elements[j]), elements[i]), delta, caps);
    }
  }
  return g;
}

NumericMatrix evaluate(const ExactMatrix& g, double delta) {
  NumericMatrix out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const auto& x : g[i]) out[i].push_back(x.eval(delta));
  }
  return out;
}

double min_eigenvalue(const NumericMatrix& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  if (n == 0) throw DomainError("empty matrix");
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double delta_root(int n) {
  if (n < 3) throw DomainError("delta-root needs n >= 3");
  return 2.0 * std::cos(std::numbers::pi / n);
}

bool admissible_delta(double delta) {
  if (delta >= 2.0 - 1e-12) return true;
  if (delta < delta_root(4) - 1e-12) return false;
  const double n = std::numbers::pi / std::acos(delta / 2.0);
  const double k = std::round(n);
  return k >= 4 && std::abs(delta - delta_root(static_cast<int>(k))) < 1e-12;
}

}  // namespace wysiwyg
