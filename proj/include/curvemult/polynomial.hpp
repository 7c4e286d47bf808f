#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "curvemult/arith.hpp"

namespace curvemult {

// Exponent pair of a monomial x^x * y^y.
struct Exponent {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  std::uint64_t degree() const { return std::uint64_t{x} + y; }
  auto operator<=>(const Exponent&) const = default;
};

// Sparse polynomial in Q[x, y]. Zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(const Rational& constant);

  static BivariatePolynomial monomial(std::uint32_t ex, std::uint32_t ey, const Rational& c = 1);
  static BivariatePolynomial x() { return monomial(1, 0); }
  static BivariatePolynomial y() { return monomial(0, 1); }

  // Parses the polynomial literal grammar: rational numbers, x, y, ^, *, /
  // (by constants only), +, - and parentheses.
  static BivariatePolynomial parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(std::uint32_t ex, std::uint32_t ey) const;
  void add_term(std::uint32_t ex, std::uint32_t ey, const Rational& c);

  std::uint32_t degree_x() const;
  std::uint32_t degree_y() const;
  std::uint64_t total_degree() const;
  // Order at the origin (least total degree of a term); nullopt for zero.
  std::optional<std::uint64_t> order() const;
  // Homogeneous component of the given total degree.
  BivariatePolynomial homogeneous_part(std::uint64_t degree) const;
  // Drops every term of total degree >= bound.
  BivariatePolynomial truncated_below_degree(std::uint64_t bound) const;
  // Drops every term with x-exponent >= bound.
  BivariatePolynomial truncated_below_x(std::uint64_t bound) const;

  // Leading coefficient in y (as a polynomial in x).
  BivariatePolynomial leading_coefficient_y() const;
  bool is_monic_in_y() const;

  BivariatePolynomial pow(unsigned long exponent) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const Rational& scalar);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& s) { return a *= s; }
  friend BivariatePolynomial operator*(const Rational& s, BivariatePolynomial a) { return a *= s; }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  // Renders in the literal grammar, terms ordered by descending y-degree and
  // then ascending x-degree (e.g. "y^2 - 2*x^2*y - x^3 + x^4").
  std::string to_string() const;

 private:
  TermMap terms_;
};

// Quotient and remainder of division by a polynomial monic in y, treating
// both as polynomials in y over Q[x]. The remainder has y-degree below the
// divisor's.
std::pair<BivariatePolynomial, BivariatePolynomial> divmod_y(const BivariatePolynomial& dividend,
                                                             const BivariatePolynomial& divisor);

}  // namespace curvemult
