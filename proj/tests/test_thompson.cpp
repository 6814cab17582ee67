#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wysiwyg/errors.hpp"
#include "wysiwyg/thompson.hpp"

using namespace wysiwyg;

namespace {

FElement E(const char* s) { return parse_element(s); }

mpq_class Q(long a, long b = 1) { return mpq_class(a, b); }

}  // namespace

TEST_CASE("reduction") {
  const Tree t = parse_tree("((.,.),(.,(.,.)))");
  CHECK(reduce_pair(t, t).is_identity());
  CHECK(reduce_pair(left_comb(3), left_comb(3)) == identity());
  CHECK(reduce_pair(parse_tree("((.,(.,.)),.)"), parse_tree("(.,((.,.),.))")) == generator_A());
  CHECK_THROWS_AS(reduce_pair(left_comb(3), left_comb(4)), DomainError);
}

TEST_CASE("reduction is confluent") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [top, bottom] = random_tree_pair(rng, 2 + static_cast<int>(rng() % 10));
    auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    const FElement a = reduce_pair_with(top, bottom, pick);
    CHECK(a == reduce_pair_with(top, bottom, pick));
    CHECK(a == reduce_pair(top, bottom));
  }
}

TEST_CASE("generators and named elements") {
  const FElement a = generator_A();
  CHECK(serialize_element(a) == "((.,.),.)/(.,(.,.))");
  CHECK(a.leaf_count() == 3);
  CHECK(generator_B() == sigma(a));
  CHECK(generator_B().leaf_count() == 4);
  const FElement d = element_D();
  CHECK(d.leaf_count() == 4);
  CHECK(serialize_element(d) == "((.,(.,.)),.)/(.,(.,(.,.)))");
  CHECK(multiply_rewrite(d, inverse(d)) == identity());
  CHECK(inverse(inverse(d)) == d);
  CHECK(inverse(identity()) == identity());
}

TEST_CASE("A as a PL map") {
  // Bottom intervals go to top intervals: [0,1/2] -> [0,1/4],
  // [1/2,3/4] -> [1/4,1/2], [3/4,1] -> [1/2,1].
  const PLMap a = to_pl_map(generator_A());
  using BP = std::vector<std::pair<mpq_class, mpq_class>>;
  CHECK(a.breakpoints() == BP{{Q(0), Q(0)}, {Q(1, 2), Q(1, 4)}, {Q(3, 4), Q(1, 2)}, {Q(1), Q(1)}});
  CHECK(a.slopes() == std::vector<mpq_class>{Q(1, 2), Q(1), Q(2)});
  // the mirror convention reads the same pair as the inverse map
  CHECK(a.inverse().breakpoints() == BP{{Q(0), Q(0)}, {Q(1, 4), Q(1, 2)}, {Q(1, 2), Q(3, 4)}, {Q(1), Q(1)}});
  CHECK(to_pl_map(identity()).breakpoints() == BP{{Q(0), Q(0)}, {Q(1), Q(1)}});
  CHECK(a.is_thompson());
}

TEST_CASE("the relation x0^-1 x1 x0 = x2") {
  const FElement x0 = generator_A(), x1 = generator_B(), x2 = sigma(x1);
  CHECK(multiply(multiply(inverse(x0), x1), x0) == x2);
  CHECK(compose_pl(compose_pl(to_pl_map(inverse(x0)), to_pl_map(x1)), to_pl_map(x0)) == to_pl_map(x2));
}

TEST_CASE("powers of A") {
  CHECK(power_A(0) == identity());
  CHECK(power_A(1) == generator_A());
  CHECK(power_A(2) == multiply(generator_A(), generator_A()));
  CHECK(power_A(5).top().leaf_count() == 7);
  CHECK(power_A(5).bottom().leaf_count() == 7);
  FElement acc = identity();
  for (int n = 1; n <= 12; ++n) {
    acc = multiply(acc, generator_A());
    CHECK(power_A(n) == acc);
    CHECK(power_A(-n) == inverse(acc));
    CHECK(power(generator_A(), n) == acc);
    CHECK(to_pl_map(power_A(n)) == compose_pl(to_pl_map(power_A(n - 1)), to_pl_map(generator_A())));
  }
}

TEST_CASE("multiplication agrees with PL composition and the rewrite engine") {
  std::mt19937_64 rng(4);
  int bigons = 0, exchanges = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const FElement g = random_word(rng, 1 + static_cast<int>(rng() % 8));
    const FElement h = random_word(rng, 1 + static_cast<int>(rng() % 8));
    const FElement p = multiply(g, h);
    CHECK(to_pl_map(p) == compose_pl(to_pl_map(g), to_pl_map(h)));
    RewriteStats st;
    CHECK(multiply_rewrite(g, h, &st) == p);
    bigons += st.bigon_moves;
    exchanges += st.exchange_moves;
    // A random move order lands on the same normal form.
    auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    CHECK(multiply_rewrite(g, h, nullptr, pick) == p);
  }
  CHECK(bigons > 0);
  CHECK(exchanges > 0);
}

TEST_CASE("group axioms") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const FElement a = random_word(rng, 1 + static_cast<int>(rng() % 10));
    const FElement b = random_word(rng, 1 + static_cast<int>(rng() % 10));
    const FElement c = random_word(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, inverse(a)) == identity());
    CHECK(multiply(a, identity()) == a);
    CHECK(multiply(identity(), a) == a);
  }
}

TEST_CASE("inverse is the functional inverse") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const FElement g = random_word(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(to_pl_map(inverse(g)) == to_pl_map(g).inverse());
    CHECK(compose_pl(to_pl_map(g), to_pl_map(inverse(g))) == PLMap());
  }
}

TEST_CASE("sigma") {
  CHECK(sigma(identity()) == identity());
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const FElement g = random_word(rng, 1 + static_cast<int>(rng() % 8));
    const FElement h = random_word(rng, 1 + static_cast<int>(rng() % 8));
    CHECK(sigma(multiply(g, h)) == multiply(sigma(g), sigma(h)));
    CHECK((sigma(g) == identity()) == (g == identity()));
    const PLMap p = to_pl_map(sigma(g));
    for (const auto& x : {Q(0), Q(1, 8), Q(1, 3), Q(1, 2)}) CHECK(p(x) == x);
    // on [1/2, 1] it is g rescaled
    const PLMap q = to_pl_map(g);
    for (const auto& x : {Q(1, 4), Q(2, 3), Q(7, 9)}) CHECK(p((1 + x) / 2) == (1 + q(x)) / 2);
  }
  CHECK(sigma_pow(generator_A(), 2) == sigma(generator_B()));
}

TEST_CASE("element text forms") {
  CHECK(E("A") == generator_A());
  CHECK(E("B") == generator_B());
  CHECK(E("id") == identity());
  CHECK(E("") == identity());
  CHECK(E("A^2 B^-1 A") == multiply(multiply(power_A(2), inverse(generator_B())), generator_A()));
  CHECK(E("A^-1") == inverse(generator_A()));
  CHECK(E("D A^0") == element_D());
  CHECK(E("((.,.),.)/(.,(.,.))") == generator_A());
  CHECK(E("((.,(.,.)),.)/(.,((.,.),.))") == generator_A());
  try {
    E("A^2 C");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(E("(.,.)/."), DomainError);
  CHECK_THROWS_AS(E("A^"), ParseError);
  CHECK_THROWS_AS(E("(.,.)/(.,x)"), ParseError);
}
