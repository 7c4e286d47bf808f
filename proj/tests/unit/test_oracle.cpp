#include "doctest.h"

#include <random>

#include "curvemult/errors.hpp"
#include "curvemult/germ.hpp"
#include "curvemult/oracle.hpp"
#include "../support/random_germs.hpp"

using namespace curvemult;

namespace {

BivariatePolynomial P(const char* s) { return BivariatePolynomial::parse(s); }
Rational R(long p, long q) { return make_rational(p, q); }
IntVector ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
using Polys = std::vector<BivariatePolynomial>;

const char* kQuartic = "y^4-4*x^2*y^3+4*x^4*y^2-2*x^3*y^2+4*x^5*y-4*x^6*y+x^6";
const char* kSextic = "y^6-6*x^2*y^5+9*x^4*y^4-2*x^5*y^3+6*x^7*y^2+x^10-9*x^11";

}  // namespace

TEST_CASE("blow-up engine on the worked examples") {
  auto g = Germ::from_polynomial(P(kQuartic));
  auto t = blowup_resolution(*g.polynomial, g.root);
  CHECK(t.multiplicities().values == ints({4, 2, 2, 2, 1, 1}));
  CHECK(t.a == g.divisors.a);
  CHECK(t.b == g.divisors.b);
  for (std::size_t i = 1; i <= t.k(); ++i)
    for (std::size_t j = 1; j < i; ++j) CHECK(t.proximate(i, j) == g.proximity.proximate(i, j));

  auto g2 = Germ::from_polynomial(P(kSextic));
  CHECK(blowup_resolution(*g2.polynomial, g2.root).multiplicities().values == ints({6, 4, 2, 2, 2, 1, 1}));
  CHECK(blowup_resolution(P("y^2-x^3"), PuiseuxSeries::parse("x^(3/2)")).multiplicities().values == ints({2, 1, 1}));
  // a unit factor changes nothing
  CHECK(blowup_resolution(P("(1+x+y)*(y^2-x^3)"), PuiseuxSeries::parse("x^(3/2)")).multiplicities().values ==
        ints({2, 1, 1}));
  CHECK_THROWS_AS(blowup_resolution(P("y^2-2*x^2"), PuiseuxSeries::parse("x^(3/2)")), UnsupportedCurve);
  CHECK_THROWS_AS(blowup_resolution(P("y^2-x^3+1"), PuiseuxSeries::parse("x^(3/2)")), InvalidInput);
}

TEST_CASE("ord vectors and exceptional coefficients") {
  auto g = Germ::from_polynomial(P(kQuartic));
  auto t = blowup_resolution(*g.polynomial, g.root);
  CHECK(ord_of(P("y"), t) == ints({1, 1, 0, 0, 0, 0}));
  CHECK(ord_of(P("x"), t) == ints({1, 0, 0, 0, 0, 0}));
  CHECK(ord_of(P("1+x"), t) == IntVector(6, 0));
  CHECK(ord_of(*g.polynomial, t) == g.multiplicities.values);
  auto ordF = ord_of(g.factors.factors[0], t);
  CHECK(dot(ordF, g.proximity.row(3)) == 6);
  CHECK(dot(ordF, g.proximity.row(6)) == 15);
  CHECK_THROWS_AS(ord_of(P("0"), t), InvalidInput);

  for (const char* G : {"y", "x", "y^2-x^3", "x^3*y+y^5", "y^2-2*x^2*y-x^3+x^4"}) {
    auto poly = P(G);
    CHECK(exceptional_coefficients(poly, t) == pullback(ord_of(poly, t), g.proximity));
  }
}

TEST_CASE("full rho") {
  auto g = Germ::from_polynomial(P(kQuartic));
  auto t = blowup_resolution(*g.polynomial, g.root);
  CHECK(rho_full(P("x"), t).value == R(17, 30));
  CHECK(rho_full(P("1"), t).value == R(5, 12));
  CHECK(rho_full(P("y^2-x^3"), t).value == R(27, 30));
  CHECK(rho_full(*g.polynomial, t).value == R(17, 12));
  CHECK(rho_full(P("x") * g.factors.factors[0], t).value == R(32, 30));
}

TEST_CASE("ideal equality") {
  CHECK(ideal_equal(Polys{P("y^2-2*x^2*y-x^3+x^4"), P("x^2*y"), P("x^4"), P("x*y^2"), P("y^3")},
                    Polys{P("y^2-x^3"), P("x^2*y"), P("x^4"), P("x*y^2"), P("y^3")}, 12));
  CHECK(ideal_equal(Polys{P("x"), P("y")}, Polys{P("x"), P("y+x^2")}, 6));
  CHECK_FALSE(ideal_equal(Polys{P("x^2"), P("y")}, Polys{P("x"), P("y")}, 6));
  CHECK(ideal_equal(Polys{P("1")}, Polys{P("1+x"), P("y")}, 4));  // 1 + x is a unit
  CHECK_FALSE(ideal_equal(Polys{P("1")}, Polys{P("x"), P("y")}, 4));
  // (y) is not m-primary: equality cannot be certified
  CHECK_THROWS_WITH_AS(ideal_equal(Polys{P("y")}, Polys{P("y+y^2")}, 6), doctest::Contains("cap"), InvalidInput);

  Polys I{P("y^2-x^3"), P("x^2*y"), P("x^4"), P("x*y^2"), P("y^3")};
  CHECK(ideal_equal(I, I, 12));
  Polys J = I;
  J.push_back(P("x^5 + x*y^2"));
  CHECK(ideal_equal(I, J, 12));
  CHECK(ideal_contains(I, P("x^3*y"), 12));
  CHECK_FALSE(ideal_contains(I, P("x^3"), 12));
  CHECK_FALSE(ideal_contains(I, P("x*y"), 12));
}

TEST_CASE("random germs: engine agrees with the combinatorics") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> ex(0, 7), coef(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    auto g = Germ::from_charseq(testsupport::random_charseq(rng, 3, 12));
    auto f = g.defining_polynomial();
    auto t = blowup_resolution(f, g.root);
    CHECK(t.multiplicities() == g.multiplicities);
    CHECK(t.a == g.divisors.a);
    CHECK(t.b == g.divisors.b);
    for (std::size_t i = 1; i <= t.k(); ++i)
      for (std::size_t j = 1; j < i; ++j) CHECK(t.proximate(i, j) == g.proximity.proximate(i, j));
    for (int rep = 0; rep < 5; ++rep) {
      BivariatePolynomial G;
      for (int s = 0; s < 4; ++s) G.add_term(ex(rng), ex(rng), coef(rng));
      if (G.is_zero()) continue;
      const auto ord = ord_of(G, t);
      CHECK(exceptional_coefficients(G, t) == pullback(ord, g.proximity));
      // Noether: sum M_i ord_i = n * o_x(G(x, S))
      CHECK(Rational(dot(g.multiplicities.values, ord)) ==
            Rational(g.characteristic.n()) * substitute_order(G, g.root, SeriesBudget(200)));
    }
  }
}
