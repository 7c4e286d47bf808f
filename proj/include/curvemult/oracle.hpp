#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "curvemult/multiplier.hpp"
#include "curvemult/polynomial.hpp"
#include "curvemult/proximity.hpp"
#include "curvemult/puiseux.hpp"

namespace curvemult {

// Chart of the blow-up at the origin holding the next center:
// Slope: u = u', v = u'(v' + c), exceptional divisor u' = 0.
// Vertical: u = u'v', v = v', exceptional divisor v' = 0.
enum class Chart { Slope, Vertical };

struct BlowupStep {
  std::size_t center = 0;  // j, 1-based
  Integer multiplicity;
  // Earlier exceptional divisors E_l passing through q_j.
  std::vector<std::size_t> through;
  // Local equation of the strict transform at q_j (total degree truncated).
  BivariatePolynomial strict_transform;
  Chart chart = Chart::Slope;
  Rational center_coordinate;
};

// Literal run of the standard resolution.
struct BlowupTrace {
  std::vector<BlowupStep> steps;
  // Coefficients of E_j in K_{Y/C^2} and in pi^* Z, read off the local
  // total transforms (0-based).
  IntVector a;
  IntVector b;
  // Total-degree cap the run needed.
  std::uint64_t precision = 0;

  std::size_t k() const { return steps.size(); }
  MultiplicitySequence multiplicities() const;
  bool proximate(std::size_t i, std::size_t j) const;
};

// Blows up the germ f = 0 until its total transform is a normal crossing
// divisor. S only bounds the number of steps. Throws UnsupportedCurve
// ("irrational-center-required") and BudgetExhausted.
BlowupTrace blowup_resolution(const BivariatePolynomial& f, const PuiseuxSeries& S);

// Multiplicities of the strict transforms of G = 0 at the traced centers.
IntVector ord_of(const BivariatePolynomial& G, const BlowupTrace& trace);

// Coefficients G^{(j)} of E_j in pi^* C_G, accumulated center by center.
IntVector exceptional_coefficients(const BivariatePolynomial& G, const BlowupTrace& trace);

// min_j (G^{(j)} + a_j + 1) / b_j over all k centers.
RhoValue rho_full(const BivariatePolynomial& G, const BlowupTrace& trace);

// Image of an ideal of the local ring in Q[x, y] / m^N.
class TruncatedIdealBasis {
 public:
  TruncatedIdealBasis(const std::vector<BivariatePolynomial>& generators, unsigned cap);

  unsigned cap() const { return cap_; }
  std::size_t rank() const { return rows_.size(); }
  // h mod m^N lies in the image.
  bool contains(const BivariatePolynomial& h) const;
  // Every monomial of total degree c lies in the image.
  bool contains_power(unsigned c) const;
  bool same_span(const TruncatedIdealBasis& other) const;

 private:
  using Row = std::map<std::size_t, Rational>;
  Row vectorize(const BivariatePolynomial& h) const;
  // Reduces v against the rows; true when v becomes zero.
  bool reduce(Row& v) const;
  void insert(Row v);

  unsigned cap_;
  std::map<std::size_t, Row> rows_;  // keyed by pivot
};

// Equality of the ideals generated in the local ring at the origin, decided
// modulo m^N. Returns false as soon as the truncations differ; equality needs
// m^{N-1} in the ideal (then m^{N-1} lies in it by Nakayama), otherwise
// throws InvalidInput ("cap-too-small").
bool ideal_equal(const std::vector<BivariatePolynomial>& A, const std::vector<BivariatePolynomial>& B, unsigned N);

// Membership of h in the local ideal, certified the same way.
bool ideal_contains(const std::vector<BivariatePolynomial>& generators, const BivariatePolynomial& h, unsigned N);

}  // namespace curvemult
