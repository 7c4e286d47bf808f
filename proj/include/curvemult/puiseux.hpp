#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "curvemult/arith.hpp"
#include "curvemult/combinatorics.hpp"
#include "curvemult/polynomial.hpp"

namespace curvemult {

// Finitely supported series sum c_e x^e with rational e > 0 and nonzero
// rational c.
class PuiseuxSeries {
 public:
  using TermMap = std::map<Rational, Rational>;

  PuiseuxSeries() = default;
  // Throws InvalidInput when an exponent is not positive. Zero coefficients
  // are dropped. A nonzero declared denominator must be a multiple of the
  // polydromy.
  explicit PuiseuxSeries(const TermMap& terms, const Integer& declared_denominator = 0);

  // Parses terms `c*x^(p/q)` joined by + and -, e.g. "x^(3/2)+x^2+x^(9/4)".
  static PuiseuxSeries parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Rational& exponent, const Rational& coefficient);

  // Least exponent, nullopt for the zero series (order +infinity).
  std::optional<Rational> order() const;
  // lcm of the exponent denominators; throws InvalidInput on the zero series.
  Integer polydromy() const;
  // N with every exponent in (1/N)Z: the declared value, or the polydromy.
  Integer declared_denominator() const;

  std::string to_string() const;

  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
  Integer declared_ = 0;
};

// Limit on the exponents tracked by truncated series computations.
struct SeriesBudget {
  Rational exponent_cap;

  explicit SeriesBudget(Rational cap);
};

struct SeriesQueries {
  Rational order;
  Integer polydromy;
};

// Order and polydromy of a nonzero series.
SeriesQueries series_queries(const PuiseuxSeries& s);

enum class TruncationMode { Strict, Inclusive };

// Terms with exponent < l (Strict) or <= l (Inclusive).
PuiseuxSeries truncate(const PuiseuxSeries& s, const Rational& l, TruncationMode mode);

// Reads (n; m_1, ..., m_g) off a modified series of order > 1.
CharacteristicSequence characteristic_of_series(const PuiseuxSeries& s);

// o_x(f(x, S)) by exact series arithmetic keeping exponents below the cap.
// Throws PrecisionExhausted when every tracked term cancels.
Rational substitute_order(const BivariatePolynomial& f, const PuiseuxSeries& s, const SeriesBudget& budget);

// prod over the conjugates of (y - S), computed as the norm of y - s(u) from
// Q(x)[u]/(u^N - x) with N the polydromy. Monic of y-degree N.
BivariatePolynomial minimal_polynomial(const PuiseuxSeries& s);

}  // namespace curvemult
