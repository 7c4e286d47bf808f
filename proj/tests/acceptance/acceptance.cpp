// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "curvemult/errors.hpp"
#include "curvemult/germ.hpp"
#include "curvemult/multiplier.hpp"
#include "curvemult/oracle.hpp"
#include "../support/random_germs.hpp"

using namespace curvemult;

namespace {

using Polys = std::vector<BivariatePolynomial>;

const char* kQuartic = "y^4-4*x^2*y^3+4*x^4*y^2-2*x^3*y^2+4*x^5*y-4*x^6*y+x^6";
const char* kSextic = "y^6-6*x^2*y^5+9*x^4*y^4-2*x^5*y^3+6*x^7*y^2+x^10-9*x^11";

BivariatePolynomial P(const std::string& s) { return BivariatePolynomial::parse(s); }
Rational R(long p, long q) { return make_rational(p, q); }

Polys polys(std::initializer_list<const char*> l) {
  Polys out;
  for (auto s : l) out.push_back(P(s));
  return out;
}

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

const Germ& quartic() {
  static const Germ g = Germ::from_polynomial(P(kQuartic));
  return g;
}

const Germ& sextic() {
  static const Germ g = Germ::from_polynomial(P(kSextic));
  return g;
}

// Jump points of (4;6,9) and known generators of J(aZ) on each interval.
const std::vector<Rational>& table_cuts() {
  static const std::vector<Rational> c{0,        R(5, 12),  R(17, 30), R(19, 30), R(21, 30), R(23, 30),
                                       R(25, 30), R(27, 30), R(11, 12), R(29, 30), 1};
  return c;
}

const std::vector<Polys>& table_generators() {
  static const std::vector<Polys> t{
      polys({"1"}),
      polys({"x", "y"}),
      polys({"x^2", "y"}),
      polys({"x^2", "x*y", "y^2"}),
      polys({"x^3", "x*y", "y^2"}),
      polys({"x^3", "x^2*y", "y^2"}),
      polys({"y^2-x^3", "x^2*y", "x^4", "x*y^2", "y^3"}),
      polys({"y^2-x^3-2*x^2*y", "x^4", "x^3*y", "x*y^2", "y^3"}),
      polys({"x^3*y", "x^4", "x*y^2", "y^3"}),
      polys({"x*y^2-x^4", "x^5", "x^3*y", "x^2*y^2", "y^3"}),
  };
  return t;
}

Rational sample(std::size_t row) { return (table_cuts()[row] + table_cuts()[row + 1]) / 2; }

void criterion1() {
  const auto& a = quartic();
  expect(a.characteristic.to_string() == "(4;6,9)", "(4;6,9) germ gave " + a.characteristic.to_string());
  expect(a.root == PuiseuxSeries::parse("x^(3/2)+x^2+x^(9/4)"), "(4;6,9) germ root " + a.root.to_string());
  const auto& b = sextic();
  expect(b.characteristic.to_string() == "(6;10,13)", "(6;10,13) germ gave " + b.characteristic.to_string());
  expect(b.root == PuiseuxSeries::parse("x^(5/3)+x^2+x^(13/6)"), "(6;10,13) germ root " + b.root.to_string());
}

void criterion2() {
  struct Case {
    const Germ& g;
    IntVector expected;
  };
  for (const auto& c : {Case{quartic(), {4, 2, 2, 2, 1, 1}}, Case{sextic(), {6, 4, 2, 2, 2, 1, 1}}}) {
    expect(c.g.multiplicities.values == c.expected, "ECT gave " + str(c.g.multiplicities.values));
    const BlowupTrace t = blowup_resolution(*c.g.polynomial, c.g.root);
    expect(t.multiplicities().values == c.expected, "engine gave " + str(t.multiplicities().values));
  }
}

void criterion3() {
  const auto& g = quartic();
  const BlowupTrace t = blowup_resolution(*g.polynomial, g.root);
  for (unsigned long px = 0; px <= 5; ++px)
    for (unsigned long p0 = 0; p0 <= 5; ++p0)
      for (unsigned long p1 = 0; p1 <= 5; ++p1) {
        const FactorMonomial m{px, p0, {p1}};
        const Rational closed = std::min(Rational(5 + 2 * px + 3 * p0 + 6 * p1) / 12,
                                         Rational(13 + 4 * px + 6 * p0 + 15 * p1) / 30);
        const Rational ours = rho_monomial(m, g.factors, g.divisors).value;
        expect(ours == closed, "rho(" + to_string(m) + ") = " + to_short_string(ours));
        const Rational full = rho_full(evaluate(m, g.factors), t).value;
        expect(full == closed, "full rho(" + to_string(m) + ") = " + to_short_string(full));
      }
}

void criterion4() {
  const auto& g = quartic();
  std::vector<Rational> got;
  for (const auto& j : jumping_numbers(g.factors, g.divisors)) got.push_back(j.value);
  const std::vector<Rational> want(table_cuts().begin() + 1, table_cuts().end() - 1);
  expect(got == want, "jumping numbers differ");
  expect(lct(g.factors, g.divisors) == R(5, 12), "lct (4;6,9)");
  expect(lct(sextic().factors, sextic().divisors) == R(4, 15), "lct (6;10,13)");
}

void criterion5() {
  const auto& g = quartic();
  for (std::size_t row = 0; row < table_generators().size(); ++row) {
    const auto I = multiplier_ideal(sample(row), g.factors, g.divisors);
    expect(ideal_equal(*I.polynomial_forms, table_generators()[row], 12),
           "row " + std::to_string(row + 1) + " at " + to_short_string(sample(row)));
  }
}

void criterion6() {
  const auto& g = quartic();
  const StandardFactorSet other = g.factors.with_factors({P("y^2-x^3-2*x^2*y")});
  for (std::size_t row = 0; row < table_generators().size(); ++row) {
    const auto a = multiplier_ideal(sample(row), g.factors, g.divisors);
    const auto b = multiplier_ideal(sample(row), other, g.divisors);
    expect(ideal_equal(*a.polynomial_forms, *b.polynomial_forms, 12), "differ at " + to_short_string(sample(row)));
  }
}

void criterion7() {
  std::mt19937_64 rng(20260415);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 5; ++trial) {
    const CharacteristicSequence cs = testsupport::random_charseq(rng, 3, 12);
    const Germ g = Germ::from_charseq(cs);
    const std::string tag = cs.to_string() + ": ";
    const BivariatePolynomial f = g.defining_polynomial();
    const BlowupTrace t = blowup_resolution(f, g.root);
    expect(t.multiplicities() == g.multiplicities, tag + "engine multiplicities");

    const auto limits = enumeration_bounds(g.factors, g.divisors);
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<unsigned long> e(limits.size());
      for (std::size_t c = 0; c < e.size(); ++c)
        e[c] = std::uniform_int_distribution<unsigned long>(0, limits[c] + 1)(rng);
      FactorMonomial m{e[0], e[1], std::vector<unsigned long>(e.begin() + 2, e.end())};
      const Rational ours = rho_monomial(m, g.factors, g.divisors).value;
      const Rational full = rho_full(evaluate(m, g.factors), t).value;
      expect(ours == full, tag + "rho(" + to_string(m) + ") " + to_short_string(ours) + " vs " + to_short_string(full));
    }

    for (std::size_t i = 1; i <= cs.genus(); ++i)
      expect(closed_gamma_row(cs, g.multiplicities, g.indices, i) == g.proximity.row(g.indices.gamma[i]),
             tag + "X_gamma_" + std::to_string(i));
    for (std::size_t j = 0; j < cs.genus(); ++j)
      expect(closed_tau_row(cs, g.chain, g.multiplicities, g.indices, j) == g.proximity.row(g.indices.tau[j]),
             tag + "X_tau_" + std::to_string(j));

    const std::size_t k = t.k();
    for (std::size_t j = 1; j < k; ++j) {
      Integer s = 0;
      for (std::size_t i = j + 1; i <= k; ++i)
        if (t.proximate(i, j)) s += t.multiplicities()[i];
      expect(s == g.multiplicities[j], tag + "proximity equality at " + std::to_string(j));
    }

    std::uniform_int_distribution<int> ex(0, static_cast<int>(cs.n().get_si()) + 2);
    int tested = 0;
    while (tested < 20) {
      BivariatePolynomial G;
      for (int s = 0; s < 4; ++s) G.add_term(ex(rng), ex(rng), coef(rng));
      if (G.is_zero()) continue;
      const IntVector ord = ord_of(G, t);
      const Rational lhs(dot(g.multiplicities.values, ord));
      const Rational rhs = Rational(cs.n()) * substitute_order(G, g.root, SeriesBudget(lhs + 1));
      expect(lhs == rhs, tag + "Noether for " + G.to_string());
      ++tested;
    }
  }
}

std::vector<std::string> names(const IdealPresentation& I) {
  std::vector<std::string> out;
  for (const auto& m : I.generators) out.push_back(to_string(m));
  return out;
}

void criterion8() {
  const auto& g = quartic();
  const auto& cuts = table_cuts();
  std::optional<IdealPresentation> previous;
  for (std::size_t row = 0; row + 1 < cuts.size(); ++row) {
    const Rational lo = cuts[row], hi = cuts[row + 1];
    const auto I = multiplier_ideal(lo == 0 ? hi / 2 : lo, g.factors, g.divisors);
    for (int q = 1; q < 8; ++q) {
      const Rational a = lo + (hi - lo) * R(q, 8);
      expect(names(multiplier_ideal(a, g.factors, g.divisors)) == names(I),
             "not constant on [" + to_short_string(lo) + ", " + to_short_string(hi) + ")");
    }
    if (previous) {
      for (const auto& p : *I.polynomial_forms)
        expect(ideal_contains(*previous->polynomial_forms, p, 12), "not nested at " + to_short_string(lo));
      expect(!ideal_equal(*previous->polynomial_forms, *I.polynomial_forms, 12), "no drop at " + to_short_string(lo));
    }
    previous = I;
  }
  expect(names(multiplier_ideal(R(1, 3), g.factors, g.divisors)) == std::vector<std::string>{"1"}, "J(Z/3) is not the unit ideal");
}

void criterion9() {
  for (long b = 1; b <= 30; ++b)
    for (long a = 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      for (long u = 1; u <= 50; ++u) {
        const auto [s, t] = bezout_lift(a, b, u);
        expect(s >= 1 && t >= 1 && s * a + t * b == a * b + u,
               "bezout_lift(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(u) + ")");
      }
    }
}

void criterion10() {
  std::mt19937_64 rng(1010);
  for (int trial = 0; trial < 100; ++trial) {
    const CharacteristicSequence cs = testsupport::random_charseq(rng, 4, 48, 9);
    const MultiplicitySequence ms = multiplicity_sequence(euclid_chain(cs));
    expect(characteristic_from_multiplicities(ms) == cs, "round trip failed for " + cs.to_string());
    expect(multiplicity_sequence(euclid_chain(characteristic_from_multiplicities(ms))) == ms,
           "multiplicity round trip failed for " + cs.to_string());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria{
      {"characteristic extraction", criterion1},
      {"multiplicity sequences, ECT and blow-up engine", criterion2},
      {"rho closed form on [0,5]^3 for (4;6,9)", criterion3},
      {"jumping numbers and lct", criterion4},
      {"multiplier ideals of (4;6,9) on every interval", criterion5},
      {"standard factor choice independence", criterion6},
      {"oracle equivalence on random germs", criterion7},
      {"nesting and partition", criterion8},
      {"bezout_lift exhaustive", criterion9},
      {"characteristic/multiplicity round trip", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (detail.empty() ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].first
              << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    if (!detail.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
