#include "cli.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvemult/errors.hpp"
#include "curvemult/germ.hpp"
#include "curvemult/multiplier.hpp"
#include "curvemult/oracle.hpp"

namespace curvemult::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string poly;
  std::string series;
  std::string charseq;
  std::string alpha;
  std::string budget;
  unsigned cap = 12;
  bool json = false;
};

json num(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json nums(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(num(x));
  return out;
}

json rat(const Rational& q) { return to_fraction_string(q); }

std::string join(const IntVector& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Germ load(const Options& o) {
  const int given = !o.poly.empty() + (!o.series.empty() && o.charseq.empty()) + !o.charseq.empty();
  if (given == 0) throw ParseError("no curve given: use --poly, --series or --charseq");
  if (given > 1 || (!o.poly.empty() && !o.series.empty()))
    throw ParseError("give exactly one of --poly, --series, --charseq (optionally with --series)");
  if (!o.poly.empty()) return Germ::from_polynomial(BivariatePolynomial::parse(o.poly));
  if (!o.charseq.empty()) {
    std::optional<PuiseuxSeries> s;
    if (!o.series.empty()) s = PuiseuxSeries::parse(o.series);
    return Germ::from_charseq(CharacteristicSequence::parse(o.charseq), s);
  }
  return Germ::from_series(PuiseuxSeries::parse(o.series));
}

json header(const char* command, const Germ& g) {
  return json{{"schema", "curvemult/1"},
              {"command", command},
              {"characteristic", g.characteristic.to_string()},
              {"root", g.root.to_string()}};
}

json chain_json(const EuclideanChain& chain) {
  json out = json::array();
  for (const auto& st : chain.stages)
    out.push_back({{"dividend", num(st.dividend)},
                   {"divisor", num(st.divisor)},
                   {"quotients", nums(st.quotients)},
                   {"remainders", nums(st.remainders)}});
  return out;
}

json combinatorics_json(const Germ& g) {
  json j;
  j["multiplicities"] = nums(g.multiplicities.values);
  j["euclid_chain"] = chain_json(g.chain);
  j["gamma"] = g.indices.gamma;
  j["tau"] = g.indices.tau;
  j["E"] = nums(g.constants.E);
  j["B"] = nums(g.constants.B);
  json P = json::array();
  for (const auto& row : g.proximity.P) P.push_back(nums(row));
  j["proximity_matrix"] = P;
  json rows = json::array();
  for (std::size_t i = 1; i < g.indices.gamma.size(); ++i)
    rows.push_back({{"kind", "gamma"}, {"label", i}, {"index", g.indices.gamma[i]},
                    {"row", nums(g.proximity.row(g.indices.gamma[i]))}});
  for (std::size_t t = 0; t < g.indices.tau.size(); ++t)
    rows.push_back({{"kind", "tau"}, {"label", t}, {"index", g.indices.tau[t]},
                    {"row", nums(g.proximity.row(g.indices.tau[t]))}});
  j["x_rows"] = rows;
  j["a"] = nums(g.divisors.a);
  j["b"] = nums(g.divisors.b);
  json kinds = json::array();
  for (std::size_t i = 1; i <= g.proximity.k(); ++i) kinds.push_back(g.proximity.is_free(i) ? "free" : "satellite");
  j["centers"] = kinds;
  return j;
}

json factors_json(const Germ& g) {
  json j;
  json fs = json::array();
  for (const auto& f : g.factors.factors) fs.push_back(f.to_string());
  j["factors"] = fs;
  json w = json::array();
  for (const auto& row : g.factors.ord_rows) w.push_back(nums(row));
  j["ord_rows"] = w;
  json om = json::array();
  for (const auto& r : omega_table(g.factors, g.divisors))
    om.push_back({{"center", r.center},
                  {"constant", num(r.constant)},
                  {"x", num(r.x)},
                  {"y", num(r.y)},
                  {"F", nums(r.f)},
                  {"denominator", num(r.denominator)}});
  j["omega"] = om;
  return j;
}

std::string omega_string(const OmegaRow& r) {
  std::string s = "(" + r.constant.get_str() + " + " + r.x.get_str() + "*px + " + r.y.get_str() + "*p0";
  for (std::size_t j = 0; j < r.f.size(); ++j) s += " + " + r.f[j].get_str() + "*p" + std::to_string(j + 1);
  return s + ")/" + r.denominator.get_str();
}

json jumping_json(const Germ& g) {
  json out = json::array();
  for (const auto& jn : jumping_numbers(g.factors, g.divisors))
    out.push_back({{"value", rat(jn.value)}, {"witness", to_string(jn.witness)},
                   {"witness_polynomial", evaluate(jn.witness, g.factors).to_string()}});
  return out;
}

json ideal_json(const IdealPresentation& I) {
  json gens = json::array(), polys = json::array();
  for (const auto& m : I.generators) gens.push_back(to_string(m));
  if (I.polynomial_forms)
    for (const auto& p : *I.polynomial_forms) polys.push_back(p.to_string());
  return {{"alpha", rat(I.alpha)}, {"generators", gens}, {"polynomials", polys}};
}

struct Interval {
  Rational from, to, sample;
  IdealPresentation ideal;
};

std::vector<Interval> intervals(const Germ& g) {
  std::vector<Rational> cuts{0};
  for (const auto& jn : jumping_numbers(g.factors, g.divisors)) cuts.push_back(jn.value);
  cuts.push_back(1);
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    out.push_back({cuts[i], cuts[i + 1], mid, multiplier_ideal(mid, g.factors, g.divisors)});
  }
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- text rendering ----

void print_combinatorics(std::ostream& out, const Germ& g) {
  out << "characteristic sequence: " << g.characteristic.to_string() << "\n";
  out << "root: " << g.root.to_string() << "\n";
  out << "multiplicity sequence: (" << join(g.multiplicities.values) << ")\n";
  out << "gamma: " << join(g.indices.gamma) << "   tau: " << join(g.indices.tau) << "\n";
  out << "E: " << join(g.constants.E) << "   B: " << join(g.constants.B) << "\n";
  out << "proximity matrix:\n";
  for (const auto& row : g.proximity.P) {
    out << " ";
    for (const auto& v : row) out << (v < 0 ? " " : "  ") << v.get_str();
    out << "\n";
  }
  for (std::size_t i = 1; i < g.indices.gamma.size(); ++i)
    out << "X_" << g.indices.gamma[i] << " (gamma_" << i << "): [" << join(g.proximity.row(g.indices.gamma[i])) << "]\n";
  for (std::size_t t = 0; t < g.indices.tau.size(); ++t)
    out << "X_" << g.indices.tau[t] << " (tau_" << t << "): [" << join(g.proximity.row(g.indices.tau[t])) << "]\n";
  out << "a: [" << join(g.divisors.a) << "]\n";
  out << "b: [" << join(g.divisors.b) << "]\n";
  out << "centers:";
  for (std::size_t i = 1; i <= g.proximity.k(); ++i) out << " " << (g.proximity.is_free(i) ? "free" : "satellite");
  out << "\n";
}

void print_factors(std::ostream& out, const Germ& g) {
  if (g.factors.factors.empty()) out << "standard factors: none (g = 1)\n";
  for (std::size_t j = 0; j < g.factors.factors.size(); ++j)
    out << "F" << j + 1 << " = " << g.factors.factors[j].to_string() << "\n";
  for (std::size_t l = 0; l < g.factors.ord_rows.size(); ++l)
    if (!g.factors.ord_rows[l].empty()) out << "w_" << l + 1 << ": [" << join(g.factors.ord_rows[l]) << "]\n";
  const auto table = omega_table(g.factors, g.divisors);
  for (std::size_t l = 0; l < table.size(); ++l) out << "Omega_" << l + 1 << " = " << omega_string(table[l]) << "\n";
}

void print_ideal(std::ostream& out, const IdealPresentation& I) {
  out << "alpha = " << to_short_string(I.alpha) << "\n";
  for (std::size_t i = 0; i < I.generators.size(); ++i) {
    out << "  " << to_string(I.generators[i]);
    if (I.polynomial_forms) out << " = " << (*I.polynomial_forms)[i].to_string();
    out << "\n";
  }
}

std::string ideal_line(const IdealPresentation& I) {
  std::string s = "(";
  for (std::size_t i = 0; i < I.generators.size(); ++i) s += (i ? ", " : "") + to_string(I.generators[i]);
  return s + ")";
}

// ---- verify ----

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Check> verify(const Germ& g, unsigned cap) {
  std::vector<Check> checks;
  auto add = [&checks](std::string name, const std::function<std::string()>& body) {
    try {
      const std::string failure = body();
      checks.push_back({std::move(name), failure.empty(), failure});
    } catch (const std::exception& e) {
      checks.push_back({std::move(name), false, e.what()});
    }
  };

  const BivariatePolynomial f = g.defining_polynomial();
  std::optional<BlowupTrace> trace;
  add("blowup-multiplicities", [&]() -> std::string {
    trace = blowup_resolution(f, g.root);
    if (trace->multiplicities() != g.multiplicities)
      return "engine (" + join(trace->multiplicities().values) + ") vs ECT (" + join(g.multiplicities.values) + ")";
    return "";
  });
  if (!trace) return checks;
  const BlowupTrace& t = *trace;

  add("blowup-proximity", [&]() -> std::string {
    for (std::size_t i = 1; i <= t.k(); ++i)
      for (std::size_t j = 1; j < i; ++j)
        if (t.proximate(i, j) != g.proximity.proximate(i, j))
          return "q" + std::to_string(i) + " vs q" + std::to_string(j);
    return "";
  });
  add("divisor-vectors", [&]() -> std::string {
    if (t.a != g.divisors.a) return "a: engine [" + join(t.a) + "] vs [" + join(g.divisors.a) + "]";
    if (t.b != g.divisors.b) return "b: engine [" + join(t.b) + "] vs [" + join(g.divisors.b) + "]";
    return "";
  });
  add("closed-form-rows", [&]() -> std::string {
    inverse_rows(g.proximity);
    return "";
  });
  add("proximity-equality", [&]() -> std::string {
    for (std::size_t j = 1; j < g.proximity.k(); ++j) {
      Integer s = 0;
      for (auto i : g.proximity.proximate_sets[j - 1]) s += g.multiplicities[i];
      if (s != g.multiplicities[j]) return "fails at q" + std::to_string(j);
    }
    return "";
  });

  std::vector<BivariatePolynomial> corpus{BivariatePolynomial::x(), BivariatePolynomial::y(), f,
                                          BivariatePolynomial::parse("y^2-x^3"), BivariatePolynomial::parse("x*y+y^3")};
  for (const auto& F : g.factors.factors) corpus.push_back(F);

  add("ord-rows", [&]() -> std::string {
    for (std::size_t j = 1; j <= g.factors.factors.size(); ++j) {
      const IntVector ord = ord_of(g.factors.factors[j - 1], t);
      for (std::size_t l = 1; l <= g.characteristic.genus(); ++l)
        if (dot(ord, g.proximity.row(g.indices.gamma[l])) != g.factors.ord_rows[l - 1][j - 1])
          return "w_" + std::to_string(l) + "," + std::to_string(j);
    }
    return "";
  });
  add("pullback", [&]() -> std::string {
    for (const auto& G : corpus)
      if (exceptional_coefficients(G, t) != pullback(ord_of(G, t), g.proximity)) return G.to_string();
    return "";
  });
  add("noether", [&]() -> std::string {
    for (const auto& G : corpus) {
      if (G == f) continue;
      const Rational lhs(dot(g.multiplicities.values, ord_of(G, t)));
      const Rational rhs = Rational(g.characteristic.n()) * substitute_order(G, g.root, SeriesBudget(lhs + 1));
      if (lhs != rhs) return G.to_string();
    }
    return "";
  });
  add("rho-rows", [&]() -> std::string {
    auto limits = enumeration_bounds(g.factors, g.divisors);
    std::size_t tested = 0;
    FactorMonomial m;
    m.p.assign(g.characteristic.genus() - 1, 0);
    std::vector<unsigned long> cur(limits.size(), 0);
    while (tested < 200) {
      m.px = cur[0];
      m.p0 = cur[1];
      for (std::size_t j = 0; j < m.p.size(); ++j) m.p[j] = cur[j + 2];
      if (rho_monomial(m, g.factors, g.divisors).value != rho_full(evaluate(m, g.factors), t).value)
        return to_string(m);
      ++tested;
      std::size_t c = 0;
      while (c < cur.size() && ++cur[c] > limits[c]) cur[c++] = 0;
      if (c == cur.size()) break;
    }
    return "";
  });
  add("rho-poly", [&]() -> std::string {
    for (const auto& G : corpus)
      if (rho_poly(G, g.factors, g.divisors).value != rho_full(G, t).value) return G.to_string();
    return "";
  });
  add("ideal-membership", [&]() -> std::string {
    const auto rows = intervals(g);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& iv = rows[i];
      for (const auto& p : *iv.ideal.polynomial_forms)
        if (rho_full(p, t).value <= iv.sample) return "generator " + p.to_string() + " at " + to_short_string(iv.sample);
      if (i > 0 && ideal_equal(*rows[i - 1].ideal.polynomial_forms, *iv.ideal.polynomial_forms, cap))
        return "no jump at " + to_short_string(iv.from);
    }
    return "";
  });
  return checks;
}

// ---- commands ----

int cmd_analyze(const Options& o, std::ostream& out) {
  const Germ g = load(o);
  std::optional<PuiseuxSeries> budget_root;
  if (!o.budget.empty()) {
    const BivariatePolynomial f = g.defining_polynomial();
    budget_root = y_root(f, SeriesBudget(parse_rational(o.budget))).series;
  }
  const Rational l = lct(g.factors, g.divisors);
  if (o.json) {
    json j = header("analyze", g);
    j.update(combinatorics_json(g));
    j["lct"] = rat(l);
    if (budget_root) j["root_to_budget"] = budget_root->to_string();
    emit(out, j);
  } else {
    print_combinatorics(out, g);
    if (budget_root) out << "root through x^" << o.budget << ": " << budget_root->to_string() << "\n";
    out << "lct: " << to_short_string(l) << "\n";
  }
  return 0;
}

int cmd_factors(const Options& o, std::ostream& out) {
  const Germ g = load(o);
  if (o.json) {
    json j = header("factors", g);
    j.update(factors_json(g));
    emit(out, j);
  } else {
    print_factors(out, g);
  }
  return 0;
}

int cmd_lct(const Options& o, std::ostream& out) {
  const Germ g = load(o);
  const Rational l = lct(g.factors, g.divisors);
  if (o.json) {
    json j = header("lct", g);
    j["lct"] = rat(l);
    emit(out, j);
  } else {
    out << to_short_string(l) << "\n";
  }
  return 0;
}

int cmd_jumping(const Options& o, std::ostream& out) {
  const Germ g = load(o);
  const json list = jumping_json(g);
  if (o.json) {
    json j = header("jumping-numbers", g);
    j["jumping_numbers"] = list;
    emit(out, j);
  } else {
    for (const auto& e : list)
      out << e["value"].get<std::string>() << "  witness " << e["witness"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_ideal(const Options& o, std::ostream& out) {
  if (o.alpha.empty()) throw ParseError("ideal needs --alpha p/q");
  const Rational alpha = parse_rational(o.alpha);
  const Germ g = load(o);
  const IdealPresentation I = multiplier_ideal(alpha, g.factors, g.divisors);
  if (o.json) {
    json j = header("ideal", g);
    j.update(ideal_json(I));
    emit(out, j);
  } else {
    print_ideal(out, I);
  }
  return 0;
}

int cmd_report(const Options& o, std::ostream& out) {
  const Germ g = load(o);
  const auto rows = intervals(g);
  const Rational l = lct(g.factors, g.divisors);
  if (o.json) {
    json j = header("report", g);
    j.update(combinatorics_json(g));
    j.update(factors_json(g));
    j["lct"] = rat(l);
    j["jumping_numbers"] = jumping_json(g);
    json iv = json::array();
    for (const auto& r : rows) {
      json e = ideal_json(r.ideal);
      e["from"] = rat(r.from);
      e["to"] = rat(r.to);
      e["label"] = rat(r.to);
      e["sample"] = rat(r.sample);
      iv.push_back(e);
    }
    j["intervals"] = iv;
    emit(out, j);
    return 0;
  }
  print_combinatorics(out, g);
  print_factors(out, g);
  out << "lct: " << to_short_string(l) << "\n";
  out << "multiplier ideals J(aZ):\n";
  for (const auto& r : rows) {
    out << "  [" << to_short_string(r.from) << ", " << to_short_string(r.to) << ")  " << ideal_line(r.ideal) << "\n";
    if (r.ideal.polynomial_forms) {
      std::string polys;
      for (const auto& p : *r.ideal.polynomial_forms) polys += (polys.empty() ? "" : ", ") + p.to_string();
      out << "      = (" << polys << ")\n";
    }
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Germ g = load(o);
  const auto checks = verify(g, o.cap);
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (o.json) {
    json j = header("verify", g);
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = list;
    j["pass"] = all;
    emit(out, j);
  } else {
    for (const auto& c : checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return all ? 0 : 4;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"curvemult: resolution data, multiplier ideals and jumping numbers of a plane branch"};
  app.require_subcommand(1);
  Options o;
  auto input = [&o](CLI::App* sub) {
    sub->add_option("--poly", o.poly, "polynomial, e.g. \"y^2-x^3\"");
    sub->add_option("--series", o.series, "Puiseux series, e.g. \"x^(3/2)+x^2\"");
    sub->add_option("--charseq", o.charseq, "characteristic sequence, e.g. \"(4;6,9)\"");
    sub->add_option("--budget", o.budget, "exponent cap for printing the root (with analyze)");
    sub->add_option("--truncation-cap", o.cap, "degree cap N for ideal comparisons")->check(CLI::Range(2u, 64u));
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  std::map<std::string, std::function<int(const Options&, std::ostream&)>> commands{
      {"analyze", cmd_analyze},       {"factors", cmd_factors}, {"lct", cmd_lct},
      {"jumping-numbers", cmd_jumping}, {"ideal", cmd_ideal},   {"report", cmd_report},
      {"verify", cmd_verify}};
  std::map<std::string, std::string> help{
      {"analyze", "characteristic, multiplicity and proximity data"},
      {"factors", "standard factors and the rho table"},
      {"lct", "log canonical threshold"},
      {"jumping-numbers", "jumping numbers in (0,1) with witnesses"},
      {"ideal", "generators of J(alpha Z)"},
      {"report", "everything, with the multiplier ideal of every interval"},
      {"verify", "cross-check closed forms against the blow-up oracle"}};
  for (const auto& [name, fn] : commands) {
    auto* sub = app.add_subcommand(name, help[name]);
    input(sub);
    if (name == "ideal") sub->add_option("--alpha", o.alpha, "rational 0 < alpha < 1")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cout_buf, cerr_buf;
    const int code = app.exit(e, cout_buf, cerr_buf);
    out << cout_buf.str();
    err << cerr_buf.str();
    return code == 0 ? 0 : 2;
  }

  for (const auto& [name, fn] : commands) {
    if (!app.got_subcommand(name)) continue;
    try {
      return fn(o, out);
    } catch (const ParseError& e) {
      err << "error: " << e.id() << ": " << e.what() << "\n";
      return 2;
    } catch (const InvalidInput& e) {
      err << "error: " << e.id() << ": " << e.what() << "\n";
      return 2;
    } catch (const CurveError& e) {
      err << "error: " << e.id() << ": " << e.what() << "\n";
      return 3;
    } catch (const std::logic_error& e) {
      err << "error: verification-failure: " << e.what() << "\n";
      return 4;
    } catch (const std::exception& e) {
      err << "error: internal: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}

}  // namespace curvemult::cli
