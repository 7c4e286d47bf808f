#include "curvemult/germ.hpp"

#include "curvemult/errors.hpp"

namespace curvemult {

namespace {

Germ assemble(const CharacteristicSequence& cs, const PuiseuxSeries& root, std::optional<BivariatePolynomial> f) {
  EuclideanChain chain = euclid_chain(cs);
  MultiplicitySequence ms = multiplicity_sequence(chain);
  ResolutionIndices idx = resolution_indices(chain);
  SemigroupConstants sc = semigroup_constants(cs, ms, idx);
  ProximityData pd = build_proximity(ms);
  inverse_rows(pd);
  DivisorVectors dv = divisor_vectors(pd, ms);
  StandardFactorSet fs = standard_factors(root, cs);
  return Germ{cs, root, std::move(f), std::move(chain), std::move(ms), std::move(idx), std::move(sc),
              std::move(pd), std::move(dv), std::move(fs)};
}

}  // namespace

PuiseuxSeries default_series(const CharacteristicSequence& cs) {
  PuiseuxSeries s;
  for (const auto& m : cs.exponents()) s.add_term(make_rational(m, cs.n()), 1);
  return s;
}

Germ Germ::from_polynomial(const BivariatePolynomial& f) {
  CurveAnalysis a = analyze_curve(f);
  return assemble(a.characteristic, a.root, f);
}

Germ Germ::from_series(const PuiseuxSeries& s) {
  return assemble(characteristic_of_series(s), s, std::nullopt);
}

Germ Germ::from_charseq(const CharacteristicSequence& cs, const std::optional<PuiseuxSeries>& s) {
  if (!s) return assemble(cs, default_series(cs), std::nullopt);
  if (characteristic_of_series(*s) != cs)
    throw InvalidInput("series-mismatch", "series has characteristic sequence " + characteristic_of_series(*s).to_string() +
                                              ", not " + cs.to_string());
  return assemble(cs, *s, std::nullopt);
}

BivariatePolynomial Germ::defining_polynomial() const {
  if (polynomial) return *polynomial;
  return minimal_polynomial(root);
}

}  // namespace curvemult
