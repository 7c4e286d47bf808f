#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvemult/arith.hpp"

namespace curvemult {

// Characteristic sequence (n; m_1, ..., m_g) of a plane branch together with
// the gcd chain d_0 = n, d_i = gcd(d_{i-1}, m_i).
class CharacteristicSequence {
 public:
  // Validates n < m_1 < ... < m_g, strict gcd descent and d_g = 1.
  CharacteristicSequence(Integer n, std::vector<Integer> m);

  // Parses "(n;m1,...,mg)"; parentheses and whitespace optional.
  static CharacteristicSequence parse(std::string_view text);

  const Integer& n() const { return n_; }
  // Characteristic exponent m_i, 1-based.
  const Integer& m(std::size_t i) const { return m_.at(i - 1); }
  const std::vector<Integer>& exponents() const { return m_; }
  // d_i for 0 <= i <= g.
  const Integer& d(std::size_t i) const { return d_.at(i); }
  std::size_t genus() const { return m_.size(); }

  std::string to_string() const;

  friend bool operator==(const CharacteristicSequence&, const CharacteristicSequence&) = default;

 private:
  Integer n_;
  std::vector<Integer> m_;
  std::vector<Integer> d_;
};

// One Euclidean algorithm of the chain: dividend = h_0 * divisor + r_1,
// divisor = h_1 * r_1 + r_2, ..., r_{k-1} = h_k * r_k.
struct EuclideanStage {
  Integer dividend;
  Integer divisor;
  std::vector<Integer> quotients;   // h_0 .. h_k
  std::vector<Integer> remainders;  // r_1 .. r_k, strictly decreasing

  const Integer& last_remainder() const { return remainders.back(); }
};

// Chain of g Euclidean algorithms: stage 1 on (m_1, n), stage i on
// (m_i - m_{i-1}, d_{i-1}).
struct EuclideanChain {
  std::vector<EuclideanStage> stages;

  // Total number of blow-ups k (sum of all quotients).
  std::size_t length() const;
};

struct MultiplicitySequence {
  std::vector<Integer> values;  // M_1 .. M_k

  std::size_t size() const { return values.size(); }
  // M_i, 1-based.
  const Integer& operator[](std::size_t i) const { return values.at(i - 1); }
  friend bool operator==(const MultiplicitySequence&, const MultiplicitySequence&) = default;
};

// gamma_0 = 0 < gamma_1 < ... < gamma_g = k and tau_0 < ... < tau_{g-1}.
struct ResolutionIndices {
  std::vector<std::size_t> gamma;  // size g + 1
  std::vector<std::size_t> tau;    // size g
};

// E_l = M_1^2 + ... + M_{gamma_l}^2 and B_l = E_l / d_{l-1}, stored 0-based
// (E[0] is E_1).
struct SemigroupConstants {
  std::vector<Integer> E;
  std::vector<Integer> B;
};

EuclideanChain euclid_chain(const CharacteristicSequence& cs);

// Block expansion of the chain.
MultiplicitySequence multiplicity_sequence(const EuclideanChain& chain);

// Inverse of multiplicity_sequence(euclid_chain(.)). Throws InvalidInput
// ("invalid-multiplicity-sequence") when no chain expands to the input.
CharacteristicSequence characteristic_from_multiplicities(const MultiplicitySequence& ms);

ResolutionIndices resolution_indices(const EuclideanChain& chain);

SemigroupConstants semigroup_constants(const CharacteristicSequence& cs,
                                       const MultiplicitySequence& ms,
                                       const ResolutionIndices& idx);

// Positive (s, t) with s*a + t*b = a*b + u and t minimal. Requires
// 1 <= a <= b, gcd(a, b) = 1, u >= 1.
std::pair<Integer, Integer> bezout_lift(const Integer& a, const Integer& b, const Integer& u);

}  // namespace curvemult
