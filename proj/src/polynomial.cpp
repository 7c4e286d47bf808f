#include "curvemult/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

#include "curvemult/errors.hpp"

namespace curvemult {

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

BivariatePolynomial BivariatePolynomial::monomial(std::uint32_t ex, std::uint32_t ey,
                                                  const Rational& c) {
  BivariatePolynomial p;
  p.add_term(ex, ey, c);
  return p;
}

Rational BivariatePolynomial::coefficient(std::uint32_t ex, std::uint32_t ey) const {
  const auto it = terms_.find(Exponent{ex, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(std::uint32_t ex, std::uint32_t ey, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{ex, ey}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t BivariatePolynomial::degree_x() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

std::uint32_t BivariatePolynomial::degree_y() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

std::uint64_t BivariatePolynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

std::optional<std::uint64_t> BivariatePolynomial::order() const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e.degree());
  return d;
}

BivariatePolynomial BivariatePolynomial::homogeneous_part(std::uint64_t degree) const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_)
    if (e.degree() == degree) out.terms_.emplace(e, c);
  return out;
}

BivariatePolynomial BivariatePolynomial::truncated_below_degree(std::uint64_t bound) const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_)
    if (e.degree() < bound) out.terms_.emplace(e, c);
  return out;
}

BivariatePolynomial BivariatePolynomial::truncated_below_x(std::uint64_t bound) const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_)
    if (e.x < bound) out.terms_.emplace(e, c);
  return out;
}

BivariatePolynomial BivariatePolynomial::leading_coefficient_y() const {
  const auto dy = degree_y();
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_)
    if (e.y == dy) out.add_term(e.x, 0, c);
  return out;
}

bool BivariatePolynomial::is_monic_in_y() const {
  return !is_zero() && leading_coefficient_y() == BivariatePolynomial(1);
}

BivariatePolynomial BivariatePolynomial::pow(unsigned long exponent) const {
  BivariatePolynomial result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.x, e.y, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.x, e.y, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BivariatePolynomial operator-(const BivariatePolynomial& a) {
  BivariatePolynomial out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.x + eb.x, ea.y + eb.y, ca * cb);
  return out;
}

namespace {

std::string monomial_string(const Exponent& e) {
  std::string s;
  auto append = [&s](char var, std::uint32_t power) {
    if (power == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (power > 1) s += "^" + std::to_string(power);
  };
  append('x', e.x);
  append('y', e.y);
  return s;
}

}  // namespace

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.y != b.first.y) return a.first.y > b.first.y;
    return a.first.x < b.first.x;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(e);
    if (mono.empty()) {
      out += to_short_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_short_string(mag) + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  BivariatePolynomial parse() {
    auto p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial literal: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BivariatePolynomial expression() {
    BivariatePolynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BivariatePolynomial term() {
    BivariatePolynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const BivariatePolynomial divisor = unary();
        if (divisor.is_zero() || divisor.order().value() != 0 || divisor.size() != 1)
          fail("division only by nonzero constants");
        acc *= 1 / divisor.coefficient(0, 0);
      } else {
        return acc;
      }
    }
  }

  BivariatePolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BivariatePolynomial power() {
    BivariatePolynomial base = primary();
    if (accept('^')) {
      skip_space();
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const Integer e(std::string(text_.substr(start, pos_ - start)));
      if (!e.fits_ulong_p() || e > 100000) fail("exponent too large");
      return base.pow(e.get_ui());
    }
    return base;
  }

  BivariatePolynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return BivariatePolynomial::x();
    }
    if (c == 'y') {
      ++pos_;
      return BivariatePolynomial::y();
    }
    if (c == '(') {
      ++pos_;
      auto inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return BivariatePolynomial(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial BivariatePolynomial::parse(std::string_view text) {
  return PolynomialParser(text).parse();
}

std::pair<BivariatePolynomial, BivariatePolynomial> divmod_y(const BivariatePolynomial& dividend,
                                                             const BivariatePolynomial& divisor) {
  if (!divisor.is_monic_in_y()) throw InvalidInput("not-monic", "divisor must be monic in y");
  const auto dy = divisor.degree_y();
  BivariatePolynomial quotient, remainder = dividend;
  const BivariatePolynomial tail = divisor - BivariatePolynomial::monomial(0, dy);
  while (!remainder.is_zero() && remainder.degree_y() >= dy) {
    const auto ry = remainder.degree_y();
    BivariatePolynomial lead;
    for (const auto& [e, c] : remainder.terms())
      if (e.y == ry) lead.add_term(e.x, ry - dy, c);
    quotient += lead;
    // remainder -= lead * divisor; the y^ry part cancels exactly.
    for (const auto& [e, c] : lead.terms()) remainder.add_term(e.x, e.y + dy, -c);
    remainder -= lead * tail;
  }
  return {quotient, remainder};
}

}  // namespace curvemult
