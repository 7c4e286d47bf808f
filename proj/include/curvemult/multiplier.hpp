#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "curvemult/factors.hpp"
#include "curvemult/proximity.hpp"

namespace curvemult {

struct RhoValue {
  Rational value;
  // Centers (1-based row indices of P^{-1}) attaining the minimum.
  std::vector<std::size_t> argmin_rows;
};

// Omega_l = (constant + px*x + p0*y + sum p_j * f[j]) / denominator, reduced
// so that the integer coefficients share no common factor.
struct OmegaRow {
  std::size_t center;  // gamma_l
  Integer constant;
  Integer x;
  Integer y;
  IntVector f;
  Integer denominator;
};

std::vector<OmegaRow> omega_table(const StandardFactorSet& fs, const DivisorVectors& dv);

RhoValue rho_monomial(const FactorMonomial& m, const StandardFactorSet& fs, const DivisorVectors& dv);

// Minimum of rho_monomial over the F-adic expansion of G: a lower bound for
// rho(G).
RhoValue rho_poly(const BivariatePolynomial& G, const StandardFactorSet& fs, const DivisorVectors& dv);

struct IdealPresentation {
  Rational alpha;
  std::vector<FactorMonomial> generators;  // componentwise-minimal antichain
  std::optional<std::vector<BivariatePolynomial>> polynomial_forms;
};

// Generators of J(alpha Z) for 0 < alpha < 1 (rho > alpha, so the
// post-jump ideal at a jumping number).
IdealPresentation multiplier_ideal(const Rational& alpha, const StandardFactorSet& fs, const DivisorVectors& dv,
                                   bool with_polynomials = true);

struct JumpingNumber {
  Rational value;
  FactorMonomial witness;  // least degree, then lexicographically least
};

std::vector<JumpingNumber> jumping_numbers(const StandardFactorSet& fs, const DivisorVectors& dv);

Rational lct(const StandardFactorSet& fs, const DivisorVectors& dv);

// Per-coordinate bounds t with rho(t e_c) >= 1: coordinate order px, p0,
// p_1..p_{g-1}.
std::vector<unsigned long> enumeration_bounds(const StandardFactorSet& fs, const DivisorVectors& dv);

}  // namespace curvemult
