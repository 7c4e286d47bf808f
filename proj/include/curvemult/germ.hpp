#pragma once

#include <optional>

#include "curvemult/combinatorics.hpp"
#include "curvemult/factors.hpp"
#include "curvemult/newton_puiseux.hpp"
#include "curvemult/proximity.hpp"
#include "curvemult/puiseux.hpp"

namespace curvemult {

// Everything derived from one branch, computed once.
struct Germ {
  CharacteristicSequence characteristic;
  PuiseuxSeries root;
  std::optional<BivariatePolynomial> polynomial;
  EuclideanChain chain;
  MultiplicitySequence multiplicities;
  ResolutionIndices indices;
  SemigroupConstants constants;
  ProximityData proximity;
  DivisorVectors divisors;
  StandardFactorSet factors;

  static Germ from_polynomial(const BivariatePolynomial& f);
  static Germ from_series(const PuiseuxSeries& s);
  // Without a series the root defaults to sum_i x^{m_i/n}.
  static Germ from_charseq(const CharacteristicSequence& cs, const std::optional<PuiseuxSeries>& s = std::nullopt);

  // The input polynomial, or the minimal polynomial of the root.
  BivariatePolynomial defining_polynomial() const;
};

PuiseuxSeries default_series(const CharacteristicSequence& cs);

}  // namespace curvemult
