#include "curvemult/oracle.hpp"

#include <optional>

#include "curvemult/errors.hpp"

namespace curvemult {

namespace {

struct NeedPrecision {};

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Strict transform of s (order >= drop) in the given chart, divided by the
// exceptional factor to the power drop; terms of total degree >= cap dropped.
BivariatePolynomial apply_chart(const BivariatePolynomial& s, Chart chart, const Rational& c, std::uint64_t drop,
                                std::uint64_t cap) {
  BivariatePolynomial out;
  for (const auto& [e, coef] : s.terms()) {
    const std::uint64_t base = std::uint64_t{e.x} + e.y - drop;
    if (chart == Chart::Vertical) {
      if (base + e.x < cap) out.add_term(e.x, static_cast<std::uint32_t>(base), coef);
      continue;
    }
    if (base >= cap) continue;
    if (c == 0) {
      if (base + e.y < cap) out.add_term(static_cast<std::uint32_t>(base), e.y, coef);
      continue;
    }
    Rational cp = 1;  // c^(y - f), built from f = y downwards
    for (std::uint32_t f = e.y + 1; f-- > 0;) {
      if (base + f < cap) out.add_term(static_cast<std::uint32_t>(base), f, coef * Rational(binomial(e.y, f)) * cp);
      cp *= c;
    }
  }
  return out;
}

struct TangentCone {
  Chart chart;
  Rational c;
};

TangentCone tangent_direction(const BivariatePolynomial& s, std::uint32_t M) {
  const BivariatePolynomial H = s.homogeneous_part(M);
  const Rational lead = H.coefficient(0, M);
  const auto u = BivariatePolynomial::x(), v = BivariatePolynomial::y();
  if (lead != 0) {
    const Rational c = -H.coefficient(1, M - 1) / (lead * Rational(M));
    if (H == lead * (v - c * u).pow(M)) return {Chart::Slope, c};
  } else if (H == H.coefficient(M, 0) * u.pow(M)) {
    return {Chart::Vertical, 0};
  }
  throw UnsupportedCurve("irrational-center-required",
                         "tangent cone " + H.to_string() + " is not a power of a single rational line");
}

std::size_t step_guard(const PuiseuxSeries& S) {
  try {
    return 4 * euclid_chain(characteristic_of_series(S)).length() + 8;
  } catch (const CurveError&) {
    return 256;
  }
}

BlowupTrace run_engine(const BivariatePolynomial& f, std::uint64_t T0, std::size_t guard) {
  BlowupTrace trace;
  trace.precision = T0;
  std::uint64_t T = T0;
  BivariatePolynomial s = f.truncated_below_degree(T);
  std::optional<std::size_t> u_label, v_label;  // divisors with local equation u = 0, v = 0

  for (std::size_t j = 1;; ++j) {
    if (j > guard) throw BudgetExhausted("blow-up engine did not terminate after " + std::to_string(guard) + " steps");
    const auto order = s.order();
    if (!order || *order >= T) throw NeedPrecision{};
    if (*order == 0) throw std::logic_error("strict transform left the traced center");
    const auto M = static_cast<std::uint32_t>(*order);

    BlowupStep step;
    step.center = j;
    step.multiplicity = M;
    Integer a = 1, b = M;
    for (const auto& lab : {u_label, v_label}) {
      if (!lab) continue;
      step.through.push_back(*lab);
      a += trace.a[*lab - 1];
      b += trace.b[*lab - 1];
    }
    std::sort(step.through.begin(), step.through.end());
    trace.a.push_back(a);
    trace.b.push_back(b);
    step.strict_transform = s;

    const TangentCone tc = tangent_direction(s, M);
    step.chart = tc.chart;
    step.center_coordinate = tc.c;
    trace.steps.push_back(step);

    s = apply_chart(s, tc.chart, tc.c, M, T - M);
    T -= M;
    if (tc.chart == Chart::Slope) {
      u_label = j;
      if (tc.c != 0) v_label.reset();
    } else {
      v_label = j;
    }

    if (T <= 1) throw NeedPrecision{};
    const auto next = s.order();
    if (!next) throw NeedPrecision{};
    if (*next == 1 && (!u_label || !v_label)) {
      const bool transverse = tc.chart == Chart::Slope ? s.coefficient(0, 1) != 0 : s.coefficient(1, 0) != 0;
      if (transverse) return trace;
    }
  }
}

}  // namespace

MultiplicitySequence BlowupTrace::multiplicities() const {
  MultiplicitySequence ms;
  for (const auto& st : steps) ms.values.push_back(st.multiplicity);
  return ms;
}

bool BlowupTrace::proximate(std::size_t i, std::size_t j) const {
  const auto& t = steps.at(i - 1).through;
  return std::find(t.begin(), t.end(), j) != t.end();
}

BlowupTrace blowup_resolution(const BivariatePolynomial& f, const PuiseuxSeries& S) {
  if (f.is_zero() || f.coefficient(0, 0) != 0)
    throw InvalidInput("not-through-origin", "the curve must pass through the origin");
  const std::size_t guard = step_guard(S);
  for (std::uint64_t T = 16; T <= (1u << 12); T *= 2) {
    try {
      return run_engine(f, T, guard);
    } catch (const NeedPrecision&) {
    }
  }
  throw BudgetExhausted("blow-up engine needs a total-degree cap above 4096");
}

IntVector ord_of(const BivariatePolynomial& G, const BlowupTrace& trace) {
  if (G.is_zero()) throw InvalidInput("zero-polynomial", "ord of the zero polynomial");
  for (std::uint64_t T = 16; T <= (1u << 14); T *= 2) {
    BivariatePolynomial g = G.truncated_below_degree(T);
    std::uint64_t t = T;
    IntVector ords;
    bool ok = true;
    for (const auto& st : trace.steps) {
      const auto order = g.order();
      if (!order || *order >= t) {
        ok = false;
        break;
      }
      ords.emplace_back(static_cast<unsigned long>(*order));
      g = apply_chart(g, st.chart, st.center_coordinate, *order, t - *order);
      t -= *order;
    }
    if (ok) return ords;
  }
  throw BudgetExhausted("ord_of needs a total-degree cap above 16384");
}

IntVector exceptional_coefficients(const BivariatePolynomial& G, const BlowupTrace& trace) {
  const IntVector ords = ord_of(G, trace);
  IntVector out;
  for (std::size_t j = 0; j < trace.k(); ++j) {
    Integer v = ords[j];
    for (auto l : trace.steps[j].through) v += out[l - 1];
    out.push_back(v);
  }
  return out;
}

RhoValue rho_full(const BivariatePolynomial& G, const BlowupTrace& trace) {
  const IntVector coeff = exceptional_coefficients(G, trace);
  RhoValue best;
  for (std::size_t j = 0; j < trace.k(); ++j) {
    const Rational v = make_rational(coeff[j] + trace.a[j] + 1, trace.b[j]);
    if (best.argmin_rows.empty() || v < best.value) {
      best.value = v;
      best.argmin_rows = {j + 1};
    } else if (v == best.value) {
      best.argmin_rows.push_back(j + 1);
    }
  }
  return best;
}

TruncatedIdealBasis::TruncatedIdealBasis(const std::vector<BivariatePolynomial>& generators, unsigned cap)
    : cap_(cap) {
  if (cap == 0) throw InvalidInput("out-of-range", "degree cap must be positive");
  for (const auto& g : generators) {
    const auto order = g.order();
    if (!order || *order >= cap) continue;
    for (unsigned d = 0; d + *order < cap; ++d)
      for (unsigned a = 0; a <= d; ++a)
        insert(vectorize(g * BivariatePolynomial::monomial(a, d - a)));
  }
}

TruncatedIdealBasis::Row TruncatedIdealBasis::vectorize(const BivariatePolynomial& h) const {
  Row r;
  for (const auto& [e, c] : h.terms()) {
    const std::uint64_t d = e.degree();
    if (d >= cap_) continue;
    r[d * (d + 1) / 2 + e.y] = c;
  }
  return r;
}

bool TruncatedIdealBasis::reduce(Row& v) const {
  while (!v.empty()) {
    const auto [pivot, coef] = *v.begin();
    const auto it = rows_.find(pivot);
    if (it == rows_.end()) return false;
    const Rational factor = coef;
    for (const auto& [idx, c] : it->second) {
      auto& slot = v[idx];
      slot -= factor * c;
      if (slot == 0) v.erase(idx);
    }
  }
  return true;
}

void TruncatedIdealBasis::insert(Row v) {
  if (reduce(v)) return;
  const Rational lead = v.begin()->second;
  for (auto& [idx, c] : v) c /= lead;
  rows_.emplace(v.begin()->first, std::move(v));
}

bool TruncatedIdealBasis::contains(const BivariatePolynomial& h) const {
  Row v = vectorize(h);
  return reduce(v);
}

bool TruncatedIdealBasis::contains_power(unsigned c) const {
  if (c >= cap_) return true;
  for (unsigned a = 0; a <= c; ++a)
    if (!contains(BivariatePolynomial::monomial(a, c - a))) return false;
  return true;
}

bool TruncatedIdealBasis::same_span(const TruncatedIdealBasis& other) const {
  if (cap_ != other.cap_ || rank() != other.rank()) return false;
  for (const auto& [p, row] : other.rows_) {
    Row v = row;
    if (!reduce(v)) return false;
  }
  return true;
}

bool ideal_equal(const std::vector<BivariatePolynomial>& A, const std::vector<BivariatePolynomial>& B, unsigned N) {
  const TruncatedIdealBasis va(A, N), vb(B, N);
  if (!va.same_span(vb)) return false;
  if (!va.contains_power(N - 1))
    throw InvalidInput("cap-too-small", "cannot certify m^" + std::to_string(N - 1) + " inside the ideals; raise the cap");
  return true;
}

bool ideal_contains(const std::vector<BivariatePolynomial>& generators, const BivariatePolynomial& h, unsigned N) {
  const TruncatedIdealBasis v(generators, N);
  if (!v.contains_power(N - 1))
    throw InvalidInput("cap-too-small", "cannot certify m^" + std::to_string(N - 1) + " inside the ideal; raise the cap");
  return v.contains(h);
}

}  // namespace curvemult
