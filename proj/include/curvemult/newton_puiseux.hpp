#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "curvemult/arith.hpp"
#include "curvemult/combinatorics.hpp"
#include "curvemult/polynomial.hpp"
#include "curvemult/puiseux.hpp"

namespace curvemult {

struct LatticePoint {
  std::uint64_t alpha = 0;  // x-exponent
  std::uint64_t beta = 0;   // y-exponent
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Compact side n*alpha + m*beta = level with gcd(n, m) = 1.
struct NewtonSide {
  LatticePoint upper;  // endpoint with the larger beta
  LatticePoint lower;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t level = 0;
};

// Newton polygon: vertices with alpha strictly increasing, beta strictly
// decreasing.
struct NewtonPolygon {
  std::vector<LatticePoint> vertices;
  std::vector<NewtonSide> sides;

  // h(N(f)) = beta of the first vertex.
  std::uint64_t height() const { return vertices.empty() ? 0 : vertices.front().beta; }
  bool ends_on_alpha_axis() const { return !vertices.empty() && vertices.back().beta == 0; }
};

NewtonPolygon newton_polygon(const BivariatePolynomial& f);

// Truncated y-root produced by the Newton-Puiseux algorithm.
struct RootExpansion {
  PuiseuxSeries series;
  // True when the algorithm terminated, i.e. the series is an exact root.
  bool complete = false;
  // h(N(f)) of the input.
  std::uint64_t height = 0;
};

// Runs the Newton-Puiseux algorithm keeping every root term of exponent
// <= cap. Requires f(0,0) = 0, x not dividing f and h(N(f)) > 0. Throws
// UnsupportedCurve ("reducible-detected", "irrational-root-required") and
// BudgetExhausted.
RootExpansion y_root(const BivariatePolynomial& f, const SeriesBudget& budget);

struct CurveAnalysis {
  CharacteristicSequence characteristic;
  // Root truncated inclusively at m_g / n.
  PuiseuxSeries root;
};

// Characteristic sequence and a sufficient root truncation of an irreducible
// germ with modified root, not tangent to the y-axis.
CurveAnalysis analyze_curve(const BivariatePolynomial& f);

}  // namespace curvemult
