#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wysiwyg/errors.hpp"
#include "wysiwyg/poly.hpp"

using namespace wysiwyg;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

RationalFunction random_rf(std::mt19937_64& rng) {
  auto rp = [&] {
    std::vector<mpz_class> v;
    const int deg = static_cast<int>(rng() % 4);
    for (int k = 0; k <= deg; ++k) v.emplace_back(static_cast<long>(rng() % 11) - 5);
    return Poly(v);
  };
  Poly den = rp();
  while (den.is_zero()) den = rp();
  return RationalFunction(rp(), den);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Poly a = P({-1, 0, 1});  // delta^2 - 1
  const Poly b = P({1, 1});      // delta + 1
  CHECK(a.divexact(b) == P({-1, 1}));
  CHECK(a * b == P({-1, -1, 1, 1}));
  CHECK((a - a).is_zero());
  CHECK(a.pow(2) == P({1, 0, -2, 0, 1}));
  CHECK(P({2, 4, 6}).content() == 2);
  CHECK(P({2, 4, 6}).primitive() == P({1, 2, 3}));
  CHECK_THROWS_AS(a.divexact(P({2, 1})), DomainError);
}

TEST_CASE("gcd") {
  const Poly a = P({-1, 0, 1}), b = P({1, 2, 1});
  CHECK(gcd(a, b) == P({1, 1}));
  CHECK(gcd(P({-3, 0, 1}), P({-2, 0, 1})) == Poly(1));
  CHECK(gcd(Poly(0), P({4, 2})) == P({4, 2}));
}

TEST_CASE("descending rendering") {
  CHECK(P({-3, 0, 1}).to_string() == "δ^2-3");
  CHECK(P({0, 1}).to_string() == "δ");
  CHECK(P({0, -2, 0, 1}).to_string() == "δ^3-2δ");
  CHECK(Poly(0).to_string() == "0");
  CHECK(Poly(-7).to_string() == "-7");
}

TEST_CASE("rational functions are kept reduced") {
  const RationalFunction d = RationalFunction::d();
  const RationalFunction t = (d - 2) / (d - 1);
  CHECK(t.to_string() == "(δ^2-3)/(δ^2-2)");
  CHECK(t.den().lead() > 0);
  CHECK((d / d) == RationalFunction(1));
  CHECK(RationalFunction(P({-2, 0, 2}), P({-2, 2})).to_string() == "δ+1");
  CHECK(RationalFunction(P({1}), P({0, -2})).to_string() == "-1/(2δ)");
  CHECK((RationalFunction::delta().pow(-2) * RationalFunction::delta().pow(2)) == RationalFunction(1));
  CHECK_THROWS_AS(RationalFunction(1) / RationalFunction(0), DomainError);
}

TEST_CASE("evaluation") {
  const RationalFunction t = (RationalFunction::d() - 2) / (RationalFunction::d() - 1);
  CHECK(t.eval(2.0) == doctest::Approx(0.5));
  CHECK(t.eval(mpq_class(2)) == mpq_class(1, 2));
  const Laurent l(P({1, 0, -3}), -1);  // 1/delta - 3 delta
  CHECK(l.eval(2.0) == doctest::Approx(-5.5));
  CHECK(l.eval(mpq_class(2)) == mpq_class(-11, 2));
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == RationalFunction(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(gcd(a.num(), a.den()).degree() <= 0);
  }
}

TEST_CASE("Laurent arithmetic matches rational functions") {
  const Laurent a(P({1, 2}), -3), b(P({-1, 0, 1}), 2);
  CHECK(RationalFunction(a * b) == RationalFunction(a) * RationalFunction(b));
  CHECK(RationalFunction(a + b) == RationalFunction(a) + RationalFunction(b));
  CHECK(Laurent::delta_pow(3).times_delta_pow(-3) == Laurent(1));
}
