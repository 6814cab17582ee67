#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "wysiwyg/errors.hpp"
#include "wysiwyg/thompson.hpp"
#include "wysiwyg/tl.hpp"

using namespace wysiwyg;

namespace {

const RationalFunction& d() {
  static const RationalFunction v = RationalFunction::d();
  return v;
}

RationalFunction delta() { return RationalFunction::delta(); }

std::vector<Tree> all_trees(int n) {
  if (n == 1) return {Tree::leaf()};
  std::vector<Tree> out;
  for (int k = 1; k < n; ++k) {
    for (const auto& l : all_trees(k)) {
      for (const auto& r : all_trees(n - k)) out.push_back(Tree::caret(l, r));
    }
  }
  return out;
}

// A random linear combination of pairings m -> n with small integer coefficients.
TLMor random_morphism(std::mt19937_64& rng, int m, int n) {
  TLMor out(m, n);
  // Build from random compositions of e_i and identities.
  TLMor cur = TLMor::identity(m);
  if (m != n) {
    // pad with cups on the right
    TLMor id = TLMor::identity(m);
    cur = id;
    for (int k = m; k < n; k += 2) cur = tl_tensor(cur, TLMor::cup());
  }
  for (int step = 0; step < 3; ++step) {
    if (n >= 2) {
      const int i = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      TLMor mix = TLMor::identity(n);
      mix += tl_e(n, i).scaled(Laurent(static_cast<long>(rng() % 5) - 2));
      cur = tl_compose(cur, mix);
    }
  }
  out += cur;
  return out;
}

}  // namespace

TEST_CASE("loops, cups and caps") {
  CHECK(closed_value(tl_compose(TLMor::cup(), TLMor::cap())) == Laurent::delta_pow(1));
  const TLMor id4 = TLMor::identity(4);
  CHECK(tl_compose(id4, id4).same_terms(id4));
  const TLMor e = tl_e(2, 0);
  // e^2 = delta e, so e/delta is idempotent
  CHECK(tl_compose(e, e).same_terms(e.scaled(Laurent::delta_pow(1))));
  // a closed p2-cabled strand is d
  CHECK(RationalFunction(trace(p2())) == d());
}

TEST_CASE("p2") {
  const TLMor p = p2();
  CHECK(tl_compose(p, p).same_terms(p));
  CHECK(apply_p2(TLMor::cup(), 1).is_zero());
  CHECK(apply_p2(apply_p2(TLMor::identity(4), 2), 2).same_terms(apply_p2(TLMor::identity(4), 2)));
  CHECK_THROWS_AS(apply_p2(TLMor::identity(4), 4), DomainError);
}

TEST_CASE("the vertex") {
  const TLMor y = raw_vertex();
  CHECK(y.source() == 2);
  CHECK(y.target() == 4);
  CHECK(y.vertex_count() == 1);
  // projectors on every leg
  CHECK(tl_compose(p2(), y).same_terms(y));
  CHECK(tl_compose(y, tl_tensor(p2(), p2())).same_terms(y));
  // Y* Y = lambda p2, lambda = (d-1)/delta
  const TLMor yy = tl_compose(y, adjoint(y));
  CHECK(vertex_lambda() == (d() - 1) / delta());
  for (const auto& [pairing, c] : p2().terms()) CHECK(RationalFunction(yy.coeff(pairing)) == vertex_lambda() * RationalFunction(c));
  CHECK(yy.terms().size() == p2().terms().size());
  // closed theta = lambda d
  CHECK(RationalFunction(trace(yy)) == vertex_lambda() * d());
  // capping the two outputs together leaves a tadpole, which is zero
  const TLMor x_cap =
      tl_compose(tl_tensor(tl_tensor(TLMor::identity(1), TLMor::cap()), TLMor::identity(1)), TLMor::cap());
  CHECK(tl_compose(y, x_cap).is_zero());
}

TEST_CASE("adjoint") {
  CHECK(adjoint(TLMor::identity(4)).same_terms(TLMor::identity(4)));
  CHECK(adjoint(TLMor::cup()).same_terms(TLMor::cap()));
  const TLMor y = raw_vertex();
  CHECK(adjoint(adjoint(y)).same_terms(y));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const TLMor a = random_morphism(rng, 2, 4), b = random_morphism(rng, 4, 4);
    CHECK(adjoint(tl_compose(a, b)).same_terms(tl_compose(adjoint(b), adjoint(a))));
  }
}

TEST_CASE("forest interpretation is functorial") {
  CHECK(forest_to_morphism(Forest::identity(2)).same_terms(tl_tensor(p2(), p2())));
  CHECK(forest_to_morphism(Forest(Tree::caret())).same_terms(raw_vertex()));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    std::vector<Tree> ta, tb;
    for (int k = 0; k < m; ++k) ta.push_back(random_tree(rng, 1 + static_cast<int>(rng() % 2)));
    const Forest a(ta);
    for (int k = 0; k < a.leaves(); ++k) tb.push_back(random_tree(rng, 1 + static_cast<int>(rng() % 2)));
    const Forest b(tb);
    if (b.leaves() > 7) continue;
    const TLMor lhs = forest_to_morphism(compose_forests(a, b));
    const TLMor rhs = tl_compose(forest_to_morphism(a), forest_to_morphism(b));
    CHECK(lhs.same_terms(rhs));
    CHECK(lhs.vertex_count() == rhs.vertex_count());
  }
}

TEST_CASE("vacuum normalization") {
  // Psi over a caret is the X-cup: raw norm d, normalized 1 after 1/d.
  const TLMor cup = tree_vector(Tree::caret(), Mode::Psi);
  CHECK(inner_product(cup, cup) == d());
  // Omega over a caret is the normalized vertex; over a leaf, id_X.
  const TLMor y = tree_vector(Tree::caret(), Mode::Omega);
  CHECK(inner_product(y, y) == RationalFunction(1));
  const TLMor idx = tree_vector(Tree::leaf(), Mode::Omega);
  CHECK(inner_product(idx, idx) == RationalFunction(1));
  CHECK_THROWS_AS(tree_vector(Tree::leaf(), Mode::Psi), DomainError);
  CHECK_THROWS_AS(inner_product(y, idx), DomainError);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& s : all_trees(n)) {
      const TLMor u = tree_vector(s, Mode::Psi);
      CHECK(inner_product(u, u) == d());
    }
  }
}

TEST_CASE("single caret applied to the Psi cup is a unit vector") {
  const TLMor v = tl_compose(tree_vector(Tree::caret(), Mode::Psi), forest_to_morphism(parse_forest("(.,.);.")));
  CHECK(v.vertex_count() == 1);
  const TLMor w = tl_compose(tree_vector(Tree::caret(), Mode::Psi), forest_to_morphism(parse_forest("(.,.);.")));
  CHECK(inner_product(v, w) / d() == RationalFunction(1));
}

TEST_CASE("isometry of forest maps") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Mode mode = trial % 2 ? Mode::Omega : Mode::Psi;
    const int m = mode == Mode::Psi ? 2 + static_cast<int>(rng() % 2) : 1 + static_cast<int>(rng() % 3);
    std::vector<Tree> ts;
    for (int k = 0; k < m; ++k) ts.push_back(random_tree(rng, 1 + static_cast<int>(rng() % 3)));
    const TLMor phi = forest_to_morphism(Forest(ts), mode);
    const TLMor u = tree_vector(random_tree(rng, m), mode), v = tree_vector(random_tree(rng, m), mode);
    CHECK(inner_product(tl_compose(u, phi), tl_compose(v, phi)) == inner_product(u, v));
  }
}

TEST_CASE("Cauchy-Schwarz at delta = 2") {
  const auto trees = all_trees(5);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = 0; j < trees.size(); ++j) {
      const TLMor u = tree_vector(trees[i], Mode::Psi), v = tree_vector(trees[j], Mode::Psi);
      const double uv = inner_product(u, v).eval(2.0);
      const double uu = inner_product(u, u).eval(2.0), vv = inner_product(v, v).eval(2.0);
      CHECK(uv * uv <= uu * vv + 1e-12);
    }
  }
}

TEST_CASE("Gram positivity of tree vectors") {
  for (const double delta : {2 * std::cos(std::numbers::pi / 5), 2 * std::cos(std::numbers::pi / 6), 2.0}) {
    for (const Mode mode : {Mode::Psi, Mode::Omega}) {
      std::vector<TLMor> vecs;
      for (int n = (mode == Mode::Psi ? 2 : 1); n <= 5; ++n) {
        // vectors over the right comb with n leaves: Phi(tree) pushed up to 5 leaves
        for (const auto& t : all_trees(n)) {
          Forest pad = Forest::identity(n);
          if (n < 5) {
            std::vector<Tree> ts(static_cast<std::size_t>(n), Tree::leaf());
            ts.back() = right_comb(5 - n + 1);
            pad = Forest(ts);
          }
          vecs.push_back(tl_compose(tree_vector(t, mode), forest_to_morphism(pad, mode)));
        }
      }
      const auto k = static_cast<Eigen::Index>(vecs.size());
      Eigen::MatrixXd g(k, k);
      for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
          const auto& a = vecs[static_cast<std::size_t>(i)];
          const auto& b = vecs[static_cast<std::size_t>(j)];
          g(i, j) = (a.vertex_count() + b.vertex_count()) % 2 == 0 ? inner_product(a, b).eval(delta) : 0.0;
        }
      }
      // Exact inner products need an even vertex total, so each parity
      // class is checked as its own block.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues().minCoeff() >= -1e-9);
    }
  }
}
