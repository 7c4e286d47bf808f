#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace curvemult {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "p/q" rendering (q >= 1, always present).
std::string to_fraction_string(const Rational& q);

// Short rendering: "p" for integers, "p/q" otherwise.
std::string to_short_string(const Rational& q);

// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Exact n-th root of a non-negative integer, if it exists.
bool exact_root(const Integer& value, unsigned long n, Integer& root);

// Rational n-th root (real root; the positive one for even n). Returns false
// when no rational root exists.
bool rational_root(const Rational& value, unsigned long n, Rational& root);

// Narrowing to std::size_t for quantities used as container sizes/indices.
std::size_t to_size(const Integer& value);

}  // namespace curvemult
