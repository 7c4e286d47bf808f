#pragma once

#include <cstddef>
#include <vector>

#include "curvemult/arith.hpp"
#include "curvemult/combinatorics.hpp"

namespace curvemult {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

// Proximity data of the standard resolution. Indices in the accessors are
// 1-based like the centers q_1..q_k.
struct ProximityData {
  MultiplicitySequence multiplicities;
  // P, unit lower triangular, -1 at (i, j) when q_i is proximate to q_j.
  IntMatrix P;
  // Rows X_1..X_k of P^{-1}.
  IntMatrix X;
  // proximate_sets[j - 1] = {i : q_i proximate to q_j}, ascending.
  std::vector<std::vector<std::size_t>> proximate_sets;

  std::size_t k() const { return P.size(); }
  bool proximate(std::size_t i, std::size_t j) const { return P.at(i - 1).at(j - 1) == -1; }
  // Number of earlier centers q_i is proximate to (0 for q_1).
  std::size_t predecessor_count(std::size_t i) const;
  // Free = proximate to at most one point; q_1 counts as free.
  bool is_free(std::size_t i) const { return predecessor_count(i) <= 1; }
  const IntVector& row(std::size_t i) const { return X.at(i - 1); }
};

// Greedy proximity reconstruction from the multiplicities, plus the exact
// inverse. Throws InvalidInput ("invalid-multiplicity-sequence") when the
// proximity equalities cannot be met.
ProximityData build_proximity(const MultiplicitySequence& ms);

// Rows of P^{-1}. Rows at gamma_i and tau_j are checked against their closed
// forms; a mismatch throws std::logic_error.
const IntMatrix& inverse_rows(const ProximityData& pd);

// Closed-form rows X_{gamma_i} (1 <= i <= g) and X_{tau_j} (0 <= j <= g-1).
IntVector closed_gamma_row(const CharacteristicSequence& cs, const MultiplicitySequence& ms,
                           const ResolutionIndices& idx, std::size_t i);
IntVector closed_tau_row(const CharacteristicSequence& cs, const EuclideanChain& chain,
                         const MultiplicitySequence& ms, const ResolutionIndices& idx, std::size_t j);

// a_i: coefficient of E_i in K_{Y/C^2}; b_i: coefficient of E_i in pi^* Z.
// Stored 0-based.
struct DivisorVectors {
  IntVector a;
  IntVector b;
};

DivisorVectors divisor_vectors(const ProximityData& pd, const MultiplicitySequence& ms);

// Exceptional coefficients ord . X_i of the pullback of a curve with the
// given ord vector.
IntVector pullback(const IntVector& ord, const ProximityData& pd);

Integer dot(const IntVector& a, const IntVector& b);

}  // namespace curvemult
