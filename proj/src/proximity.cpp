#include "curvemult/proximity.hpp"

#include <stdexcept>

#include "curvemult/errors.hpp"

namespace curvemult {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw InvalidInput("invalid-multiplicity-sequence", "invalid multiplicity sequence: " + why);
}

}  // namespace

std::size_t ProximityData::predecessor_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t j = 1; j < i; ++j) c += proximate(i, j) ? 1 : 0;
  return c;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InvalidInput("length-mismatch", "vector lengths differ");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ProximityData build_proximity(const MultiplicitySequence& ms) {
  const std::size_t k = ms.size();
  if (k == 0) invalid("empty");
  ProximityData pd;
  pd.multiplicities = ms;
  pd.P.assign(k, IntVector(k, 0));
  pd.proximate_sets.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) pd.P[i][i] = 1;

  for (std::size_t j = 1; j < k; ++j) {
    // shortest run q_{j+1}, ..., q_{j+t} whose multiplicities add up to M_j
    Integer sum = 0;
    std::size_t i = j;
    while (i < k && sum < ms[j]) {
      ++i;
      sum += ms[i];
    }
    if (sum > ms[j]) invalid("no run after q_" + std::to_string(j) + " sums to its multiplicity");
    for (std::size_t t = j + 1; t <= i; ++t) {
      pd.P[t - 1][j - 1] = -1;
      pd.proximate_sets[j - 1].push_back(t);
    }
  }
  for (std::size_t i = 1; i <= k; ++i)
    if (pd.predecessor_count(i) > 2) invalid("q_" + std::to_string(i) + " would be proximate to more than two points");

  // forward substitution; P is unit lower triangular
  pd.X.assign(k, IntVector(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    pd.X[i][i] = 1;
    for (std::size_t l = 0; l < i; ++l) {
      if (pd.P[i][l] == 0) continue;
      for (std::size_t c = 0; c <= l; ++c) pd.X[i][c] -= pd.P[i][l] * pd.X[l][c];
    }
  }
  return pd;
}

IntVector closed_gamma_row(const CharacteristicSequence& cs, const MultiplicitySequence& ms,
                           const ResolutionIndices& idx, std::size_t i) {
  IntVector row(ms.size(), 0);
  for (std::size_t c = 1; c <= idx.gamma.at(i); ++c) row[c - 1] = ms[c] / cs.d(i);
  return row;
}

IntVector closed_tau_row(const CharacteristicSequence& cs, const EuclideanChain& chain,
                         const MultiplicitySequence& ms, const ResolutionIndices& idx, std::size_t j) {
  IntVector row(ms.size(), 0);
  const std::size_t g = idx.gamma.at(j);
  for (std::size_t c = 1; c <= g; ++c) row[c - 1] = ms[c] / cs.d(j);
  const std::size_t ones = to_size(chain.stages.at(j).quotients[0]) + 1;
  for (std::size_t c = g + 1; c <= g + ones; ++c) row.at(c - 1) = 1;
  return row;
}

const IntMatrix& inverse_rows(const ProximityData& pd) {
  const CharacteristicSequence cs = characteristic_from_multiplicities(pd.multiplicities);
  const EuclideanChain chain = euclid_chain(cs);
  const ResolutionIndices idx = resolution_indices(chain);
  for (std::size_t i = 1; i <= cs.genus(); ++i)
    if (pd.row(idx.gamma[i]) != closed_gamma_row(cs, pd.multiplicities, idx, i))
      throw std::logic_error("inverse row at gamma_" + std::to_string(i) + " disagrees with its closed form");
  for (std::size_t j = 0; j < cs.genus(); ++j)
    if (pd.row(idx.tau[j]) != closed_tau_row(cs, chain, pd.multiplicities, idx, j))
      throw std::logic_error("inverse row at tau_" + std::to_string(j) + " disagrees with its closed form");
  return pd.X;
}

DivisorVectors divisor_vectors(const ProximityData& pd, const MultiplicitySequence& ms) {
  if (ms.size() != pd.k()) throw InvalidInput("length-mismatch", "multiplicity sequence length differs from k");
  DivisorVectors dv;
  const IntVector ones(pd.k(), 1);
  for (const auto& row : pd.X) {
    dv.a.push_back(dot(ones, row));
    dv.b.push_back(dot(ms.values, row));
  }
  return dv;
}

IntVector pullback(const IntVector& ord, const ProximityData& pd) {
  IntVector out;
  for (const auto& row : pd.X) out.push_back(dot(ord, row));
  return out;
}

}  // namespace curvemult
