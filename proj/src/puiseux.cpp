#include "curvemult/puiseux.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

#include "curvemult/errors.hpp"

namespace curvemult {

PuiseuxSeries::PuiseuxSeries(const TermMap& terms, const Integer& declared_denominator) {
  for (const auto& [e, c] : terms) add_term(e, c);
  if (declared_denominator < 0)
    throw InvalidInput("invalid-series", "declared denominator must be positive");
  if (declared_denominator > 0) {
    if (!terms_.empty()) {
      Integer r;
      const Integer nu = polydromy();
      mpz_fdiv_r(r.get_mpz_t(), declared_denominator.get_mpz_t(), nu.get_mpz_t());
      if (r != 0) throw InvalidInput("invalid-series", "declared denominator is not a multiple of the polydromy");
    }
    declared_ = declared_denominator;
  }
}

void PuiseuxSeries::add_term(const Rational& exponent, const Rational& coefficient) {
  if (exponent <= 0) throw InvalidInput("invalid-series", "Puiseux exponents must be positive");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Rational> PuiseuxSeries::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Integer PuiseuxSeries::polydromy() const {
  if (terms_.empty()) throw InvalidInput("zero-series", "polydromy of the zero series is undefined");
  Integer nu = 1;
  for (const auto& [e, c] : terms_) nu = lcm(nu, e.get_den());
  return nu;
}

Integer PuiseuxSeries::declared_denominator() const {
  if (declared_ > 0) return declared_;
  return terms_.empty() ? Integer(1) : polydromy();
}

std::string PuiseuxSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out += to_short_string(mag) + "*";
    out += "x";
    if (e.get_den() != 1) {
      out += "^(" + to_fraction_string(e) + ")";
    } else if (e != 1) {
      out += "^" + e.get_num().get_str();
    }
  }
  return out;
}

namespace {

class SeriesParser {
 public:
  explicit SeriesParser(std::string_view text) : text_(text) {}

  PuiseuxSeries parse() {
    PuiseuxSeries s;
    skip_space();
    if (pos_ == text_.size()) fail("empty series");
    bool first = true;
    while (pos_ < text_.size()) {
      Rational sign = 1;
      if (accept('-')) {
        sign = -1;
      } else if (accept('+')) {
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      s.add_term(e, sign * c);
      skip_space();
    }
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("series literal: " + what + " at offset " + std::to_string(pos_));
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

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational fraction() {
    Integer num = integer();
    Integer den = 1;
    if (accept('/')) den = integer();
    if (den == 0) fail("zero denominator");
    return make_rational(num, den);
  }

  std::pair<Rational, Rational> term() {
    Rational coefficient = 1;
    if (peek_digit()) {
      coefficient = fraction();
      if (!accept('*')) fail("a constant term is not allowed in a Puiseux series");
    }
    if (!accept('x')) fail("expected 'x'");
    Rational exponent = 1;
    if (accept('^')) {
      if (accept('(')) {
        const bool negative = accept('-');
        exponent = fraction();
        if (negative) exponent = -exponent;
        if (!accept(')')) fail("expected ')'");
      } else {
        exponent = Rational(integer());
      }
    }
    if (exponent <= 0) fail("exponents must be positive");
    return {exponent, coefficient};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Sparse univariate polynomial with non-negative integer exponents.
using UPoly = std::map<std::uint64_t, Rational>;

UPoly multiply(const UPoly& a, const UPoly& b, std::uint64_t bound) {
  UPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      if (ea + eb >= bound) break;
      auto& slot = out[ea + eb];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::uint64_t to_u64(const Integer& v) {
  if (v < 0 || !v.fits_ulong_p()) throw InvalidInput("out-of-range", "exponent too large");
  return v.get_ui();
}

// S with t = x^(1/N): exponent e maps to e*N.
UPoly scaled_series(const PuiseuxSeries& s, const Integer& N) {
  UPoly out;
  for (const auto& [e, c] : s.terms()) {
    Rational scaled = e * Rational(N);
    out[to_u64(scaled.get_num())] = c;
  }
  return out;
}

}  // namespace

PuiseuxSeries PuiseuxSeries::parse(std::string_view text) { return SeriesParser(text).parse(); }

SeriesBudget::SeriesBudget(Rational cap) : exponent_cap(std::move(cap)) {
  if (exponent_cap <= 0) throw InvalidInput("out-of-range", "series budget cap must be positive");
}

SeriesQueries series_queries(const PuiseuxSeries& s) {
  if (s.is_zero()) throw InvalidInput("zero-series", "series_queries on the zero series");
  return {*s.order(), s.polydromy()};
}

PuiseuxSeries truncate(const PuiseuxSeries& s, const Rational& l, TruncationMode mode) {
  PuiseuxSeries::TermMap kept;
  for (const auto& [e, c] : s.terms()) {
    if (mode == TruncationMode::Strict ? e < l : e <= l) kept.emplace(e, c);
  }
  return PuiseuxSeries(kept);
}

CharacteristicSequence characteristic_of_series(const PuiseuxSeries& s) {
  if (s.is_zero()) throw InvalidInput("zero-series", "characteristic sequence of the zero series");
  const Rational ord = *s.order();
  if (ord <= 1)
    throw UnsupportedCurve("tangent-to-y-axis", "series order " + to_short_string(ord) + " <= 1");
  if (ord.get_den() == 1)
    throw UnsupportedCurve("non-modified", "series order " + to_short_string(ord) + " is an integer");
  const Integer n = s.polydromy();
  std::vector<Integer> m;
  Integer d = n;
  for (const auto& [e, c] : s.terms()) {
    Rational scaled = e * Rational(n);
    const Integer j = scaled.get_num();
    const Integer next = gcd(d, j);
    if (next != d) {
      m.push_back(j);
      d = next;
      if (d == 1) break;
    }
  }
  return CharacteristicSequence(n, std::move(m));
}

Rational substitute_order(const BivariatePolynomial& f, const PuiseuxSeries& s, const SeriesBudget& budget) {
  if (f.is_zero()) throw InvalidInput("zero-polynomial", "substitute_order of the zero polynomial");
  const Integer N = s.is_zero() ? Integer(1) : s.declared_denominator();
  Rational scaled_cap = budget.exponent_cap * Rational(N);
  Integer bound_z;
  mpz_cdiv_q(bound_z.get_mpz_t(), scaled_cap.get_num_mpz_t(), scaled_cap.get_den_mpz_t());
  const std::uint64_t bound = to_u64(bound_z);
  const std::uint64_t xstep = to_u64(N);

  const UPoly series = scaled_series(s, N);
  const auto dy = f.degree_y();
  UPoly total;
  UPoly power{{0, Rational(1)}};
  for (std::uint32_t b = 0; b <= dy; ++b) {
    if (b > 0) power = multiply(power, series, bound);
    for (const auto& [e, c] : f.terms()) {
      if (e.y != b) continue;
      const std::uint64_t shift = std::uint64_t{e.x} * xstep;
      for (const auto& [pe, pc] : power) {
        if (pe + shift >= bound) break;
        total[pe + shift] += c * pc;
      }
    }
  }
  for (const auto& [e, c] : total)
    if (c != 0) return make_rational(Integer(static_cast<unsigned long>(e)), N);
  throw PrecisionExhausted("every term below x^" + to_short_string(budget.exponent_cap) +
                           " cancels in f(x, S); raise the cap");
}

BivariatePolynomial minimal_polynomial(const PuiseuxSeries& s) {
  if (s.is_zero()) return BivariatePolynomial::y();
  const Integer N = s.polydromy();
  const std::uint64_t n = to_u64(N);
  const UPoly series = scaled_series(s, N);

  // Power sums p_k = trace(s(u)^k) = N * sum_{j = 0 mod N} [u^j] s^k * x^{j/N}.
  std::vector<UPoly> power_sums(n + 1);
  UPoly power{{0, Rational(1)}};
  for (std::uint64_t k = 1; k <= n; ++k) {
    power = multiply(power, series, UINT64_MAX);
    for (const auto& [e, c] : power)
      if (e % n == 0) power_sums[k][e / n] += c * Rational(N);
  }

  // Newton identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
  std::vector<UPoly> elem(n + 1);
  elem[0] = {{0, Rational(1)}};
  for (std::uint64_t k = 1; k <= n; ++k) {
    UPoly acc;
    for (std::uint64_t i = 1; i <= k; ++i) {
      const UPoly prod = multiply(elem[k - i], power_sums[i], UINT64_MAX);
      const Rational sign = (i % 2 == 1) ? 1 : -1;
      for (const auto& [e, c] : prod) acc[e] += sign * c;
    }
    for (auto& [e, c] : acc) c /= Rational(static_cast<unsigned long>(k));
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    elem[k] = std::move(acc);
  }

  BivariatePolynomial out;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [e, c] : elem[k])
      out.add_term(static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(n - k), sign * c);
  }
  return out;
}

}  // namespace curvemult
