#include "curvemult/arith.hpp"

#include <limits>

#include "curvemult/errors.hpp"

namespace curvemult {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') return false;
  out.set_str(std::string(text.substr(i)), 10);
  if (negative) out = -out;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  Integer num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw ParseError("malformed rational '" + std::string(text) + "'");
  } else {
    if (!parse_integer(trim(text.substr(0, slash)), num) ||
        !parse_integer(trim(text.substr(slash + 1)), den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool exact_root(const Integer& value, unsigned long n, Integer& root) {
  if (value < 0 || n == 0) return false;
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), n) != 0;
}

bool rational_root(const Rational& value, unsigned long n, Rational& root) {
  if (n == 0) return false;
  if (n == 1) {
    root = value;
    return true;
  }
  const bool negative = value < 0;
  if (negative && n % 2 == 0) return false;
  Integer num = abs(value.get_num());
  Integer rn, rd;
  if (!exact_root(num, n, rn) || !exact_root(value.get_den(), n, rd)) return false;
  root = make_rational(negative ? Integer(-rn) : rn, rd);
  return true;
}

std::size_t to_size(const Integer& value) {
  if (value < 0 || !value.fits_ulong_p())
    throw InvalidInput("out-of-range", "integer " + value.get_str() + " does not fit a size");
  return static_cast<std::size_t>(value.get_ui());
}

}  // namespace curvemult
