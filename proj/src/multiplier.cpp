#include "curvemult/multiplier.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "curvemult/errors.hpp"

namespace curvemult {

namespace {

// Unreduced rows: Omega_l = (a_l + 1 + px n/d_l + p0 m_1/d_l + sum p_j w_{l,j}) / b_l.
struct RawRow {
  std::size_t center;
  Integer constant, x, y;
  IntVector f;
  Integer b;
};

std::vector<RawRow> raw_rows(const StandardFactorSet& fs, const DivisorVectors& dv) {
  const CharacteristicSequence& cs = fs.characteristic;
  const ResolutionIndices idx = resolution_indices(euclid_chain(cs));
  if (dv.a.size() != idx.gamma.back() || dv.b.size() != idx.gamma.back())
    throw InvalidInput("length-mismatch", "divisor vectors do not match the germ");
  std::vector<RawRow> rows;
  for (std::size_t l = 1; l <= cs.genus(); ++l) {
    const std::size_t c = idx.gamma[l];
    RawRow r{c, dv.a[c - 1] + 1, cs.n() / cs.d(l), cs.m(1) / cs.d(l), fs.ord_rows[l - 1], dv.b[c - 1]};
    rows.push_back(std::move(r));
  }
  return rows;
}

Rational evaluate_row(const RawRow& r, const FactorMonomial& m) {
  Integer num = r.constant + r.x * m.px + r.y * m.p0;
  for (std::size_t j = 0; j < m.p.size(); ++j) num += r.f[j] * m.p[j];
  return make_rational(num, r.b);
}

RhoValue rho_from_rows(const std::vector<RawRow>& rows, const FactorMonomial& m) {
  RhoValue best;
  for (const auto& r : rows) {
    const Rational v = evaluate_row(r, m);
    if (best.argmin_rows.empty() || v < best.value) {
      best.value = v;
      best.argmin_rows = {r.center};
    } else if (v == best.value) {
      best.argmin_rows.push_back(r.center);
    }
  }
  return best;
}

void check_shape(const FactorMonomial& m, const StandardFactorSet& fs) {
  if (m.p.size() + 1 != fs.genus())
    throw InvalidInput("length-mismatch", "factor monomial needs " + std::to_string(fs.genus() - 1) + " F-exponents");
}

// Calls visit on every monomial with coordinates below the given limits.
void for_each_in_box(const std::vector<unsigned long>& limits, std::size_t nfactors,
                     const std::function<void(const FactorMonomial&)>& visit) {
  std::vector<unsigned long> cur(limits.size(), 0);
  while (true) {
    FactorMonomial m;
    m.px = cur[0];
    m.p0 = cur[1];
    m.p.assign(cur.begin() + 2, cur.begin() + 2 + static_cast<std::ptrdiff_t>(nfactors));
    visit(m);
    std::size_t c = 0;
    while (c < cur.size() && ++cur[c] >= limits[c]) cur[c++] = 0;
    if (c == cur.size()) return;
  }
}

}  // namespace

std::vector<OmegaRow> omega_table(const StandardFactorSet& fs, const DivisorVectors& dv) {
  std::vector<OmegaRow> out;
  for (const auto& r : raw_rows(fs, dv)) {
    Integer g = gcd(gcd(gcd(r.constant, r.x), r.y), r.b);
    for (const auto& w : r.f) g = gcd(g, w);
    OmegaRow row{r.center, r.constant / g, r.x / g, r.y / g, {}, r.b / g};
    for (const auto& w : r.f) row.f.push_back(w / g);
    out.push_back(std::move(row));
  }
  return out;
}

RhoValue rho_monomial(const FactorMonomial& m, const StandardFactorSet& fs, const DivisorVectors& dv) {
  check_shape(m, fs);
  return rho_from_rows(raw_rows(fs, dv), m);
}

RhoValue rho_poly(const BivariatePolynomial& G, const StandardFactorSet& fs, const DivisorVectors& dv) {
  if (G.is_zero()) throw InvalidInput("zero-polynomial", "rho of the zero polynomial is infinite");
  const auto rows = raw_rows(fs, dv);
  RhoValue best;
  for (const auto& [c, m] : expand(G, fs).terms) {
    RhoValue v = rho_from_rows(rows, m);
    if (best.argmin_rows.empty() || v.value < best.value) {
      best = std::move(v);
    } else if (v.value == best.value) {
      for (auto r : v.argmin_rows)
        if (std::find(best.argmin_rows.begin(), best.argmin_rows.end(), r) == best.argmin_rows.end())
          best.argmin_rows.push_back(r);
      std::sort(best.argmin_rows.begin(), best.argmin_rows.end());
    }
  }
  return best;
}

std::vector<unsigned long> enumeration_bounds(const StandardFactorSet& fs, const DivisorVectors& dv) {
  const auto rows = raw_rows(fs, dv);
  const std::size_t coords = fs.genus() + 1;
  std::vector<unsigned long> bounds(coords, 0);
  for (std::size_t c = 0; c < coords; ++c) {
    // smallest t with every row >= 1 at t e_c: t >= (b - constant) / coefficient
    unsigned long t = 0;
    for (const auto& r : rows) {
      const Integer& coef = c == 0 ? r.x : c == 1 ? r.y : r.f[c - 2];
      Integer need = r.b - r.constant;
      if (need <= 0) continue;
      Integer q;
      mpz_cdiv_q(q.get_mpz_t(), need.get_mpz_t(), coef.get_mpz_t());
      t = std::max(t, static_cast<unsigned long>(to_size(q)));
    }
    bounds[c] = t;
  }
  return bounds;
}

IdealPresentation multiplier_ideal(const Rational& alpha, const StandardFactorSet& fs, const DivisorVectors& dv,
                                   bool with_polynomials) {
  if (alpha <= 0 || alpha >= 1) throw InvalidInput("alpha-out-of-range", "alpha must satisfy 0 < alpha < 1");
  const auto rows = raw_rows(fs, dv);
  auto limits = enumeration_bounds(fs, dv);
  for (auto& l : limits) l += 1;  // minimal generators have p_c <= bound_c
  IdealPresentation out{alpha, {}, std::nullopt};
  for_each_in_box(limits, fs.genus() - 1, [&](const FactorMonomial& m) {
    if (rho_from_rows(rows, m).value <= alpha) return;
    FactorMonomial probe = m;
    auto lower = [&](unsigned long& coord) {
      if (coord == 0) return true;
      --coord;
      const bool below = rho_from_rows(rows, probe).value <= alpha;
      ++coord;
      return below;
    };
    if (!lower(probe.px) || !lower(probe.p0)) return;
    for (auto& e : probe.p)
      if (!lower(e)) return;
    out.generators.push_back(m);
  });
  std::sort(out.generators.begin(), out.generators.end(), [](const FactorMonomial& a, const FactorMonomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  if (with_polynomials) {
    std::vector<BivariatePolynomial> forms;
    for (const auto& g : out.generators) forms.push_back(evaluate(g, fs));
    out.polynomial_forms = std::move(forms);
  }
  return out;
}

std::vector<JumpingNumber> jumping_numbers(const StandardFactorSet& fs, const DivisorVectors& dv) {
  const auto rows = raw_rows(fs, dv);
  const auto limits = enumeration_bounds(fs, dv);
  std::map<Rational, FactorMonomial> found;
  auto better = [](const FactorMonomial& a, const FactorMonomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  };
  for_each_in_box(limits, fs.genus() - 1, [&](const FactorMonomial& m) {
    const Rational v = rho_from_rows(rows, m).value;
    if (v >= 1) return;
    auto it = found.find(v);
    if (it == found.end())
      found.emplace(v, m);
    else if (better(m, it->second))
      it->second = m;
  });
  std::vector<JumpingNumber> out;
  for (auto& [v, m] : found) out.push_back({v, m});
  return out;
}

Rational lct(const StandardFactorSet& fs, const DivisorVectors& dv) {
  FactorMonomial one;
  one.p.assign(fs.genus() - 1, 0);
  return rho_monomial(one, fs, dv).value;
}

}  // namespace curvemult
