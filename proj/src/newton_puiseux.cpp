#include "curvemult/newton_puiseux.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "curvemult/errors.hpp"

namespace curvemult {

namespace {

using i128 = __int128;

i128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (i128(a.alpha) - i128(o.alpha)) * (i128(b.beta) - i128(o.beta)) -
         (i128(a.beta) - i128(o.beta)) * (i128(b.alpha) - i128(o.alpha));
}

std::uint32_t narrow(std::uint64_t v) {
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw BudgetExhausted("exponent overflow in Newton-Puiseux substitution");
  return static_cast<std::uint32_t>(v);
}

// Smallest beta among the alpha = 0 terms; 0 when there is none.
std::uint64_t height_on_y_axis(const BivariatePolynomial& f) {
  std::uint64_t h = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [e, c] : f.terms())
    if (e.x == 0) h = std::min<std::uint64_t>(h, e.y);
  return h == std::numeric_limits<std::uint64_t>::max() ? 0 : h;
}

void check_preconditions(const BivariatePolynomial& f) {
  if (f.is_zero()) throw InvalidInput("zero-polynomial", "the zero polynomial defines no germ");
  if (f.coefficient(0, 0) != 0) throw InvalidInput("not-through-origin", "f(0,0) != 0: the curve misses the origin");
  bool x_free = false;
  for (const auto& [e, c] : f.terms())
    if (e.x == 0) x_free = true;
  if (!x_free) throw UnsupportedCurve("reducible-detected", "x divides f, so x = 0 is a component");
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Needs more x-precision to decide the next step.
struct NeedPrecision {};

struct StepState {
  BivariatePolynomial g;
  std::uint64_t precision;  // terms with x-exponent >= precision are unknown
  bool truncated;           // something was dropped along the way
};

RootExpansion run(const BivariatePolynomial& f, const Rational& cap, std::uint64_t scale) {
  const std::uint64_t h0 = height_on_y_axis(f);
  Rational p0 = cap * Rational(static_cast<unsigned long>(h0)) * Rational(static_cast<unsigned long>(scale));
  Integer p0z;
  mpz_fdiv_q(p0z.get_mpz_t(), p0.get_num_mpz_t(), p0.get_den_mpz_t());
  p0z += 1;
  if (!p0z.fits_ulong_p() || p0z > std::numeric_limits<std::uint32_t>::max())
    throw BudgetExhausted("initial precision too large");

  StepState st{f.truncated_below_x(narrow(p0z.get_ui())), p0z.get_ui(), false};
  st.truncated = st.g.size() != f.size();

  RootExpansion out;
  out.height = h0;
  Integer N = 1;  // x = x_i^N
  Integer E = 0;  // y = P(x_i) + x_i^E y_i

  while (true) {
    const std::uint64_t h = height_on_y_axis(st.g);
    const NewtonPolygon poly = newton_polygon(st.g);

    if (!poly.ends_on_alpha_axis()) {
      if (!st.truncated) {
        out.complete = true;
        return out;
      }
      // Minimal slope alpha / (h - beta) seen from (0, h); invisible points give >= precision / h.
      Rational visible = -1;
      for (const auto& [e, c] : st.g.terms()) {
        if (e.y >= h) continue;
        Rational s = make_rational(Integer(static_cast<unsigned long>(e.x)), Integer(static_cast<unsigned long>(h - e.y)));
        if (visible < 0 || s < visible) visible = s;
      }
      const Rational hidden = make_rational(Integer(static_cast<unsigned long>(st.precision)), Integer(static_cast<unsigned long>(h)));
      const Rational bound = (visible >= 0 && visible < hidden) ? visible : hidden;
      if ((Rational(E) + bound) / Rational(N) > cap) return out;
      if (visible >= 0 && visible < hidden && visible * Rational(static_cast<unsigned long>(h)) < Rational(static_cast<unsigned long>(st.precision)))
        throw UnsupportedCurve("reducible-detected", "Newton polygon has more than one side");
      throw NeedPrecision{};
    }

    if (poly.sides.size() != 1)
      throw UnsupportedCurve("reducible-detected", "Newton polygon has " + std::to_string(poly.sides.size()) + " sides");
    const NewtonSide& side = poly.sides.front();
    const std::uint64_t n1 = side.n, m1 = side.m, k = side.level;

    const Integer E_next = E * static_cast<unsigned long>(n1) + static_cast<unsigned long>(m1);
    const Integer N_next = N * static_cast<unsigned long>(n1);
    const Rational exponent = make_rational(E_next, N_next);
    if (exponent > cap) return out;

    // Side polynomial F(Z) = sum_beta c_beta Z^beta over the side's lattice points.
    if (h % n1 != 0) throw UnsupportedCurve("reducible-detected", "side height is not a multiple of n");
    const std::uint64_t delta = h / n1;
    std::vector<Rational> cz(h + 1);
    for (std::uint64_t beta = 0; beta <= h; ++beta) {
      if (m1 * beta > k || (k - m1 * beta) % n1 != 0) continue;
      cz[beta] = st.g.coefficient(narrow((k - m1 * beta) / n1), narrow(beta));
    }
    const Rational lead = cz[h];
    const Rational w = -cz[h - n1] / (lead * Rational(static_cast<unsigned long>(delta)));
    for (std::uint64_t beta = 0; beta <= h; ++beta) {
      Rational expected = 0;
      if (beta % n1 == 0) {
        const std::uint64_t j = beta / n1;
        Rational pw = 1;
        for (std::uint64_t t = j; t < delta; ++t) pw *= -w;
        expected = lead * Rational(binomial(delta, j)) * pw;
      }
      if (cz[beta] != expected)
        throw UnsupportedCurve("reducible-detected",
                               "side polynomial is not a power of a single binomial Z^n - w");
    }
    Rational a;
    if (!rational_root(w, static_cast<unsigned long>(n1), a))
      throw UnsupportedCurve("irrational-root-required",
                             "side polynomial needs the " + std::to_string(n1) + "-th root of " + to_short_string(w));

    out.series.add_term(exponent, a);

    // x = x1^n1, y = x1^m1 (a + y1), divided by x1^k.
    const std::uint64_t next_precision = n1 * st.precision - k;
    BivariatePolynomial g;
    bool dropped = false;
    for (const auto& [e, c] : st.g.terms()) {
      const std::uint64_t base = n1 * e.x + m1 * e.y - k;
      if (base >= next_precision) {
        dropped = true;
        continue;
      }
      Rational apow = 1;
      std::vector<Rational> powers(e.y + 1);
      for (std::uint32_t t = 0; t <= e.y; ++t) {
        powers[t] = apow;
        apow *= a;
      }
      for (std::uint32_t j = 0; j <= e.y; ++j)
        g.add_term(narrow(base), j, c * Rational(binomial(e.y, j)) * powers[e.y - j]);
    }
    st.g = std::move(g);
    st.precision = next_precision;
    st.truncated = st.truncated || dropped;
    E = E_next;
    N = N_next;
  }
}

}  // namespace

NewtonPolygon newton_polygon(const BivariatePolynomial& f) {
  NewtonPolygon poly;
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back({e.x, e.y});
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
  });
  std::vector<LatticePoint> hull;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    if (i > 0 && pts[i - 1].alpha == p.alpha) continue;
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  for (const auto& p : hull) {
    if (!poly.vertices.empty() && p.beta >= poly.vertices.back().beta) break;
    poly.vertices.push_back(p);
  }
  for (std::size_t i = 1; i < poly.vertices.size(); ++i) {
    const auto& u = poly.vertices[i - 1];
    const auto& l = poly.vertices[i];
    const std::uint64_t da = l.alpha - u.alpha, db = u.beta - l.beta;
    const std::uint64_t g = std::gcd(da, db);
    NewtonSide s;
    s.upper = u;
    s.lower = l;
    s.n = db / g;
    s.m = da / g;
    s.level = s.n * l.alpha + s.m * l.beta;
    poly.sides.push_back(s);
  }
  return poly;
}

RootExpansion y_root(const BivariatePolynomial& f, const SeriesBudget& budget) {
  check_preconditions(f);
  if (height_on_y_axis(f) == 0) throw InvalidInput("not-through-origin", "h(N(f)) = 0");
  for (std::uint64_t scale = 1; scale <= 64; scale *= 2) {
    try {
      return run(f, budget.exponent_cap, scale);
    } catch (const NeedPrecision&) {
    }
  }
  throw BudgetExhausted("x-adic precision did not suffice to resolve the Newton polygon");
}

CurveAnalysis analyze_curve(const BivariatePolynomial& f) {
  check_preconditions(f);
  const std::uint64_t h = height_on_y_axis(f);
  if (h == 0) throw InvalidInput("not-through-origin", "h(N(f)) = 0");

  const NewtonPolygon poly = newton_polygon(f);
  if (poly.sides.size() > 1)
    throw UnsupportedCurve("reducible-detected", "Newton polygon has " + std::to_string(poly.sides.size()) + " sides");
  if (!poly.sides.empty() && poly.sides.front().m <= poly.sides.front().n)
    throw UnsupportedCurve("tangent-to-y-axis",
                           "first root exponent <= 1 (curve tangent to the y-axis); swap x and y");

  for (Rational cap = 8; cap <= 4096; cap *= 2) {
    const RootExpansion root = y_root(f, SeriesBudget(cap));
    if (root.series.is_zero())
      throw UnsupportedCurve("reducible-detected", "y divides f, so y = 0 is a component");
    const Rational ord = *root.series.order();
    if (ord <= 1)
      throw UnsupportedCurve("tangent-to-y-axis", "first root exponent <= 1; swap x and y");
    if (ord.get_den() == 1)
      throw UnsupportedCurve("non-modified", "first root exponent " + to_short_string(ord) + " is an integer");
    const Integer nu = root.series.polydromy();
    if (nu == h) {
      const CharacteristicSequence cs = characteristic_of_series(root.series);
      const Rational last = make_rational(cs.m(cs.genus()), cs.n());
      return {cs, truncate(root.series, last, TruncationMode::Inclusive)};
    }
    if (nu > h || root.complete)
      throw UnsupportedCurve("reducible-detected",
                             "root polydromy " + nu.get_str() + " differs from h(N(f)) = " + std::to_string(h));
  }
  throw BudgetExhausted("characteristic exponents not found below x^4096");
}

}  // namespace curvemult
