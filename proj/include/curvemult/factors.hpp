#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "curvemult/combinatorics.hpp"
#include "curvemult/polynomial.hpp"
#include "curvemult/proximity.hpp"
#include "curvemult/puiseux.hpp"

namespace curvemult {

// x^{px} y^{p0} F_1^{p[0]} ... F_{g-1}^{p[g-2]}.
struct FactorMonomial {
  unsigned long px = 0;
  unsigned long p0 = 0;
  std::vector<unsigned long> p;

  unsigned long degree() const;
  // Componentwise <=.
  bool divides(const FactorMonomial& other) const;
  bool is_one() const { return degree() == 0; }
  auto operator<=>(const FactorMonomial&) const = default;
};

// Standard factors F_1..F_{g-1} of a germ with the table
// w[l-1][j-1] = ord(F_j) . X_{gamma_l}.
struct StandardFactorSet {
  CharacteristicSequence characteristic;
  PuiseuxSeries root;
  std::vector<BivariatePolynomial> factors;
  IntMatrix ord_rows;

  std::size_t genus() const { return characteristic.genus(); }
  // Copy with the polynomials replaced by another admissible choice (same
  // degrees, same ord rows).
  StandardFactorSet with_factors(std::vector<BivariatePolynomial> replacement) const;
};

// minimal_polynomial(truncate(S, (m_i + j d_i)/n, inclusive)). Needs
// 1 <= i <= g-1 with 0 <= j <= h_{i+1,0}, or i = g with j = 0.
BivariatePolynomial standard_factor(const PuiseuxSeries& S, const CharacteristicSequence& cs, std::size_t i,
                                    const Integer& j);

// F_i = F_{i, h_{i+1,0}}. The ord rows come from their closed forms and are
// checked against n * o_x(F_j(x, S)).
StandardFactorSet standard_factors(const PuiseuxSeries& S, const CharacteristicSequence& cs);

// ord(F_j) . X_{gamma_l} = E_{min(l, j+1)} / (d_l d_j).
Integer ord_row_closed_form(const CharacteristicSequence& cs, std::size_t l, std::size_t j);

struct FAdicExpansion {
  std::vector<std::pair<Rational, FactorMonomial>> terms;  // sorted by monomial
};

// Unique expansion with p0 < n/d_1 and p_j < d_j/d_{j+1} for j <= g-2.
FAdicExpansion expand(const BivariatePolynomial& G, const StandardFactorSet& fs);

BivariatePolynomial evaluate(const FactorMonomial& m, const StandardFactorSet& fs);
BivariatePolynomial reassemble(const FAdicExpansion& e, const StandardFactorSet& fs);

// "x^2*y*F1^3" style rendering; "1" for the unit monomial.
std::string to_string(const FactorMonomial& m);

}  // namespace curvemult
