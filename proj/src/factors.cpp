#include "curvemult/factors.hpp"

#include <map>
#include <stdexcept>

#include "curvemult/errors.hpp"

namespace curvemult {

unsigned long FactorMonomial::degree() const {
  unsigned long d = px + p0;
  for (auto e : p) d += e;
  return d;
}

bool FactorMonomial::divides(const FactorMonomial& o) const {
  if (p.size() != o.p.size()) return false;
  if (px > o.px || p0 > o.p0) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > o.p[i]) return false;
  return true;
}

std::string to_string(const FactorMonomial& m) {
  std::string out;
  auto put = [&out](const std::string& base, unsigned long e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += base;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put("x", m.px);
  put("y", m.p0);
  for (std::size_t j = 0; j < m.p.size(); ++j) put("F" + std::to_string(j + 1), m.p[j]);
  return out.empty() ? "1" : out;
}

StandardFactorSet StandardFactorSet::with_factors(std::vector<BivariatePolynomial> replacement) const {
  if (replacement.size() != factors.size())
    throw InvalidInput("length-mismatch", "expected " + std::to_string(factors.size()) + " factors");
  for (std::size_t j = 0; j < factors.size(); ++j)
    if (!replacement[j].is_monic_in_y() || replacement[j].degree_y() != factors[j].degree_y())
      throw InvalidInput("invalid-factor", "F" + std::to_string(j + 1) + " must be monic of y-degree " +
                                               std::to_string(factors[j].degree_y()));
  StandardFactorSet out = *this;
  out.factors = std::move(replacement);
  return out;
}

BivariatePolynomial standard_factor(const PuiseuxSeries& S, const CharacteristicSequence& cs, std::size_t i,
                                    const Integer& j) {
  const std::size_t g = cs.genus();
  if (i < 1 || i > g) throw InvalidInput("out-of-range", "stage index out of range");
  const EuclideanChain chain = euclid_chain(cs);
  if (i == g ? j != 0 : (j < 0 || j > chain.stages[i].quotients[0]))
    throw InvalidInput("out-of-range", "sub-index out of range");
  const Rational l = make_rational(cs.m(i) + j * cs.d(i), cs.n());
  if (S.is_zero() || S.terms().rbegin()->first < l)
    throw InvalidInput("truncation-beyond-support", "the series stops before x^" + to_short_string(l));
  const PuiseuxSeries t = truncate(S, l, TruncationMode::Inclusive);
  if (t.polydromy() != cs.n() / cs.d(i))
    throw InvalidInput("series-mismatch", "series does not match " + cs.to_string());
  return minimal_polynomial(t);
}

Integer ord_row_closed_form(const CharacteristicSequence& cs, std::size_t l, std::size_t j) {
  // E_s = m_1 n + sum_{t=2}^{s} d_{t-1} (m_t - m_{t-1})
  const std::size_t s = std::min(l, j + 1);
  Integer E = cs.m(1) * cs.n();
  for (std::size_t t = 2; t <= s; ++t) E += cs.d(t - 1) * (cs.m(t) - cs.m(t - 1));
  return E / (cs.d(l) * cs.d(j));
}

StandardFactorSet standard_factors(const PuiseuxSeries& S, const CharacteristicSequence& cs) {
  StandardFactorSet fs{cs, S, {}, {}};
  const std::size_t g = cs.genus();
  const EuclideanChain chain = euclid_chain(cs);
  for (std::size_t i = 1; i < g; ++i) fs.factors.push_back(standard_factor(S, cs, i, chain.stages[i].quotients[0]));
  fs.ord_rows.assign(g, IntVector(g - 1));
  for (std::size_t l = 1; l <= g; ++l)
    for (std::size_t j = 1; j < g; ++j) fs.ord_rows[l - 1][j - 1] = ord_row_closed_form(cs, l, j);

  // X_{gamma_g} = M, so the last row is the intersection number with the germ.
  for (std::size_t j = 1; j < g; ++j) {
    const Integer& w = fs.ord_rows[g - 1][j - 1];
    const Rational expected = make_rational(w, cs.n());
    Rational got;
    try {
      got = substitute_order(fs.factors[j - 1], S, SeriesBudget(expected + 1));
    } catch (const PrecisionExhausted&) {
      got = -1;
    }
    if (got != expected)
      throw std::logic_error("intersection of F" + std::to_string(j) + " with the germ is not " + w.get_str());
  }
  return fs;
}

namespace {

using Accumulator = std::map<FactorMonomial, Rational>;

void expand_level(const BivariatePolynomial& G, std::size_t level, FactorMonomial stem, const StandardFactorSet& fs,
                  Accumulator& acc) {
  if (level == 0) {
    for (const auto& [e, c] : G.terms()) {
      FactorMonomial m = stem;
      m.px = e.x;
      m.p0 = e.y;
      acc[m] += c;
    }
    return;
  }
  BivariatePolynomial rest = G;
  for (unsigned long t = 0; !rest.is_zero(); ++t) {
    auto [q, r] = divmod_y(rest, fs.factors[level - 1]);
    if (!r.is_zero()) {
      FactorMonomial m = stem;
      m.p[level - 1] = t;
      expand_level(r, level - 1, m, fs, acc);
    }
    rest = std::move(q);
  }
}

}  // namespace

FAdicExpansion expand(const BivariatePolynomial& G, const StandardFactorSet& fs) {
  Accumulator acc;
  FactorMonomial stem;
  stem.p.assign(fs.factors.size(), 0);
  expand_level(G, fs.factors.size(), stem, fs, acc);
  FAdicExpansion out;
  for (auto& [m, c] : acc)
    if (c != 0) out.terms.emplace_back(c, m);
  return out;
}

BivariatePolynomial evaluate(const FactorMonomial& m, const StandardFactorSet& fs) {
  if (m.p.size() != fs.factors.size()) throw InvalidInput("length-mismatch", "monomial has the wrong number of factor exponents");
  BivariatePolynomial out = BivariatePolynomial::monomial(static_cast<std::uint32_t>(m.px), static_cast<std::uint32_t>(m.p0));
  for (std::size_t j = 0; j < m.p.size(); ++j)
    if (m.p[j] > 0) out = out * fs.factors[j].pow(m.p[j]);
  return out;
}

BivariatePolynomial reassemble(const FAdicExpansion& e, const StandardFactorSet& fs) {
  BivariatePolynomial out;
  for (const auto& [c, m] : e.terms) out += c * evaluate(m, fs);
  return out;
}

}  // namespace curvemult
