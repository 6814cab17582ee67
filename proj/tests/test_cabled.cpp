#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wysiwyg/cabled.hpp"
#include "wysiwyg/network.hpp"
#include "wysiwyg/thompson.hpp"

using namespace wysiwyg;

namespace {

TLMor ids(int strands) { return TLMor::identity(2 * strands); }

TLMor around(const TLMor& mid, int before, int after) {
  TLMor out = mid;
  if (before > 0) out = tl_tensor(ids(before), out);
  if (after > 0) out = tl_tensor(out, ids(after));
  return out;
}

CabledState<ExactRing> random_state(std::mt19937_64& rng, int width, const Caps& caps) {
  auto x = cup_state<ExactRing>();
  while (x.width < width) x = split(x, static_cast<int>(rng() % static_cast<unsigned>(x.width)), ExactRing{}, caps);
  return x;
}

}  // namespace

TEST_CASE("turnbacks") {
  Pairing p(4);
  p.set(0, 1);
  p.set(2, 3);
  CHECK(has_turnback(p));
  Pairing q(4);
  q.set(0, 3);
  q.set(1, 2);
  CHECK_FALSE(has_turnback(q));
}

TEST_CASE("the cup state is the projected X-cup") {
  const auto x = cup_state<ExactRing>();
  CHECK(to_plain(x).same_terms(tree_vector(Tree::caret(), Mode::Psi)));
  CHECK(RationalFunction(pair_states(x, x, ExactRing{})) == RationalFunction::d());
}

TEST_CASE("split and merge agree with dense composition") {
  const Caps caps;
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_state(rng, 2 + static_cast<int>(rng() % 3), caps);
    const TLMor dense = to_plain(x);
    const int k = static_cast<int>(rng() % static_cast<unsigned>(x.width));
    const auto s = split(x, k, ExactRing{}, caps);
    CHECK(s.width == x.width + 1);
    CHECK(s.vertices == x.vertices + 1);
    CHECK(to_plain(s).same_terms(tl_compose(dense, around(raw_vertex(), k, x.width - k - 1))));
    const int j = static_cast<int>(rng() % static_cast<unsigned>(x.width - 1));
    const auto m = merge(x, j, ExactRing{}, caps);
    CHECK(m.width == x.width - 1);
    CHECK(to_plain(m).same_terms(tl_compose(dense, around(adjoint(raw_vertex()), j, x.width - j - 2))));
  }
}

TEST_CASE("pairing agrees with dense closing") {
  const Caps caps;
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = 2 + static_cast<int>(rng() % 3);
    const auto x = random_state(rng, w, caps), y = random_state(rng, w, caps);
    const Laurent dense = closed_value(tl_compose(to_plain(x), adjoint(to_plain(y))));
    CHECK(pair_states(x, y, ExactRing{}) == dense);
    CHECK(pair_states(y, x, ExactRing{}) == dense);
    const NumericRing num{2.0};
    CHECK(pair_states(convert_state(x, num), convert_state(y, num), num) == doctest::Approx(dense.eval(2.0)));
  }
}

TEST_CASE("round trip through plain vectors") {
  const Caps caps;
  std::mt19937_64 rng(3);
  const auto x = random_state(rng, 4, caps);
  const auto back = from_plain(to_plain(x));
  CHECK(back.terms.size() == x.terms.size());
  for (const auto& [p, c] : x.terms) CHECK(back.terms.at(p) == c);
}

TEST_CASE("caps are typed errors") {
  Caps tight;
  tight.max_width = 3;
  auto x = cup_state<ExactRing>();
  x = split(x, 0, ExactRing{}, tight);
  try {
    split(x, 0, ExactRing{}, tight);
    FAIL("no throw");
  } catch (const ResourceCapError& e) {
    CHECK(e.reached() == 4);
  }
  Caps few;
  few.max_terms = 1;
  CHECK_THROWS_AS(split(split(cup_state<ExactRing>(), 0, ExactRing{}, few), 1, ExactRing{}, few), ResourceCapError);
  CHECK_THROWS_AS(split(x, 7, ExactRing{}, Caps{}), DomainError);
}

TEST_CASE("bigon cancellation and scheduling") {
  ForestPair fp{parse_forest("((.,.),.);."), parse_forest("((.,.),(.,.))")};
  CHECK(cancel_bigons(fp) == 1);
  CHECK(fp.lower == parse_forest("(.,.);."));
  CHECK(fp.upper == parse_forest("(.,(.,.))"));
  const Schedule s = plan_schedule(fp);
  CHECK(s.start_width == 2);
  CHECK(s.end_width == 1);
  CHECK(s.ops.size() == 3);

  // A long comb pair stays narrow.
  ForestPair combs{Forest(right_comb(40)), Forest(left_comb(40))};
  const Schedule c = plan_schedule(combs);
  CHECK(c.peak_width <= 3);
  CHECK(c.ops.size() == 2 * 39);
  CHECK_THROWS_AS(plan_schedule({Forest(right_comb(4)), Forest(left_comb(5))}), DomainError);
}

TEST_CASE("scheduled network equals dense forest pair") {
  const Caps caps;
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Tree lower = random_tree(rng, 2 + static_cast<int>(rng() % 4));
    const Tree upper = random_tree(rng, lower.leaf_count());
    const ForestPair fp{Forest(std::vector<Tree>{lower.left(), lower.right()}),
                        Forest(std::vector<Tree>{upper.left(), upper.right()})};
    const auto x = run_schedule(cup_state<ExactRing>(), plan_schedule(fp), 0, ExactRing{}, caps);
    const TLMor dense = tl_compose(tl_compose(tree_vector(Tree::caret(), Mode::Psi), forest_to_morphism(fp.lower)),
                                   adjoint(forest_to_morphism(fp.upper)));
    CHECK(to_plain(x).same_terms(dense));
  }
}
