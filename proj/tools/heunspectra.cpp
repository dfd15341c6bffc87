#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "heunspectra/aqrm.hpp"
#include "heunspectra/confluence.hpp"
#include "heunspectra/curves.hpp"
#include "heunspectra/errors.hpp"
#include "heunspectra/heun.hpp"
#include "heunspectra/io.hpp"
#include "heunspectra/ncho.hpp"
#include "json.hpp"

using namespace heunspectra;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0, exit_verify = 1, exit_domain = 2, exit_usage = 64;

struct Global {
  std::string output;
  std::string format = "csv";
  unsigned long seed = 0;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string num(double v) { return format_number(v); }

std::string render(const Table& t, const json& meta, const std::string& format) {
  std::ostringstream s;
  if (format == "json-lines") {
    s << json{{"metadata", meta}}.dump() << '\n';
    for (const auto& row : t.rows) {
      json rec = json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) rec[t.columns[c]] = row[c];
      s << rec.dump() << '\n';
    }
    return s.str();
  }
  if (format != "csv") throw InvalidParams("format " + format + " does not apply to this command");
  s << "# " << meta.dump() << '\n' << csv_row(t.columns);
  for (const auto& row : t.rows) s << csv_row(row);
  return s.str();
}

void emit(const Global& g, const std::string& content) {
  if (g.output.empty())
    std::cout << content;
  else
    write_atomic(g.output, content);
}

void emit_table(const Global& g, const Table& t, json meta) {
  meta["seed"] = g.seed;
  emit(g, render(t, meta, g.format));
}

void emit_spectrum(const Global& g, const SpectrumReport& r, json meta) {
  meta["seed"] = g.seed;
  meta["truncation_dim"] = r.truncation_dim;
  meta["degen_tol"] = r.degen_tol;
  if (g.format == "json-lines")
    emit(g, spectrum_jsonl(r, meta.dump()));
  else if (g.format == "csv")
    emit(g, "# " + meta.dump() + "\n" + spectrum_csv(r));
  else
    throw InvalidParams("format " + g.format + " does not apply to spectra");
}

Table poly_table(const MultiPoly& p) {
  Table t;
  for (const auto& v : p.variables()) t.columns.push_back(v + "_degree");
  t.columns.push_back("coefficient");
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::string> row;
    for (int d : e) row.push_back(std::to_string(d));
    row.push_back(to_string(c));
    t.rows.push_back(row);
  }
  return t;
}

HeunVariant parse_variant(const std::string& v) { return v == "bar" ? HeunVariant::LambdaBar : HeunVariant::Lambda; }

std::vector<double> powers_of_two(int lo, int hi) {
  std::vector<double> out;
  for (int e = lo; e <= hi; ++e) out.push_back(std::ldexp(1.0, e));
  return out;
}

Box parse_box(const std::vector<double>& v) {
  if (v.size() != 4) throw InvalidParams("box needs u_min u_max v_min v_max");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and constraint curves of Heun-type oscillator models"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("-o,--output", g.output, "Write to this path atomically instead of stdout");
  app.add_option("-f,--format", g.format, "csv, json-lines or svg")
      ->check(CLI::IsMember({"csv", "json-lines", "svg"}));
  app.add_option("--seed", g.seed, "Seed recorded in the output metadata");

  std::function<int()> action;

  // ncho
  auto* ncho = app.add_subcommand("ncho", "Non-commutative harmonic oscillator")->require_subcommand(1);
  NchoParams np{2, 1, 0};
  int n_max = 200, count = 20;
  double degen_tol = 1e-4;
  std::string twist = "none";
  auto ncho_params = [&](CLI::App* c) {
    c->add_option("--alpha", np.alpha)->required();
    c->add_option("--beta", np.beta)->required();
    c->add_option("--eta", np.eta);
  };
  auto* ns = ncho->add_subcommand("spectrum", "Lowest eigenvalues of the truncated Hamiltonian");
  ncho_params(ns);
  ns->add_option("--n-max", n_max);
  ns->add_option("--count", count);
  ns->add_option("--degen-tol", degen_tol);
  ns->add_option("--twist", twist)->check(CLI::IsMember({"none", "K"}));
  ns->callback([&] {
    action = [&] {
      const SpectrumReport r = spectrum(np, n_max, count, degen_tol, twist == "K" ? Twist::K : Twist::none);
      emit_spectrum(g, r,
                    {{"command", "ncho spectrum"}, {"alpha", np.alpha}, {"beta", np.beta}, {"eta", np.eta},
                     {"n_max", n_max}, {"count", count}, {"twist", twist}});
      return exit_ok;
    };
  });

  int L = 2;
  std::string eta_s = "0", a_s = "1", t_s = "2", eps_s = "1/9";
  bool symbolic = false;
  auto* nc = ncho->add_subcommand("constraint", "Constraint continuant for degree-L polynomial solutions");
  nc->add_option("--L", L)->required();
  nc->add_option("--eta", eta_s);
  nc->add_option("--a", a_s);
  nc->add_option("--t", t_s);
  nc->add_option("--eps-sq", eps_s);
  nc->add_flag("--symbolic", symbolic, "Print the exact sequence R_k in Q(sqrt t)");
  nc->callback([&] {
    action = [&] {
      const BigRat eta = parse_rat(eta_s), a = parse_rat(a_s), t = parse_rat(t_s), e2 = parse_rat(eps_s);
      json meta{{"command", "ncho constraint"}, {"L", L}, {"eta", eta_s}, {"a", a_s}, {"t", t_s}, {"eps_sq", eps_s}};
      Table tab{{"k", "value"}, {}};
      const auto seq = constraint_sequence(exact_entries(L, eta, a, t, e2));
      for (std::size_t k = 0; k < seq.size(); ++k)
        tab.rows.push_back({std::to_string(k), symbolic ? seq[k].str() : num(seq[k].to_double())});
      emit_table(g, tab, meta);
      return exit_ok;
    };
  });

  auto* nq = ncho->add_subcommand("quasi-exact", "Exact coefficients of the degree-L polynomial solution");
  nq->add_option("--L", L)->required();
  nq->add_option("--eta", eta_s);
  nq->add_option("--a", a_s);
  nq->add_option("--t", t_s);
  nq->add_option("--eps-sq", eps_s);
  nq->callback([&] {
    action = [&] {
      const BigRat eta = parse_rat(eta_s), a = parse_rat(a_s), t = parse_rat(t_s), e2 = parse_rat(eps_s);
      const QuasiExactSolution s = quasi_exact(t, e2, a, L, eta);
      const LaurentResidual res = apply_quasi_exact_operator(s, t, e2, eta, BigRat(L) + rat(1, 2) + 2 * eta);
      json meta{{"command", "ncho quasi-exact"}, {"L", L},     {"eta", eta_s},
                {"a", a_s},                      {"t", t_s},   {"eps_sq", eps_s},
                {"residual_terms", res.size()}};
      Table tab{{"degree", "coefficient", "value"}, {}};
      for (const auto& [m, r] : s.coeffs) tab.rows.push_back({std::to_string(m), r.str(), num(r.to_double())});
      emit_table(g, tab, meta);
      return exit_ok;
    };
  });

  // aqrm
  auto* aq = app.add_subcommand("aqrm", "Asymmetric quantum Rabi model")->require_subcommand(1);
  AqrmParams ap{0.5, 1, 0};
  auto aqrm_params = [&](CLI::App* c) {
    c->add_option("--g", ap.g)->required();
    c->add_option("--delta", ap.delta)->required();
    c->add_option("--eta", ap.eta);
  };
  auto* as = aq->add_subcommand("spectrum", "Lowest eigenvalues in the truncated Fock basis");
  aqrm_params(as);
  as->add_option("--n-max", n_max);
  as->add_option("--count", count);
  double aqrm_degen_tol = 1e-8;
  as->add_option("--degen-tol", aqrm_degen_tol);
  as->callback([&] {
    action = [&] {
      const SpectrumReport r = aqrm_spectrum(ap, n_max, count, aqrm_degen_tol);
      emit_spectrum(g, r,
                    {{"command", "aqrm spectrum"}, {"g", ap.g}, {"delta", ap.delta}, {"eta", ap.eta},
                     {"n_max", n_max}, {"count", count}});
      return exit_ok;
    };
  });

  int N = 1, k_index = -1;
  std::string x_s, y_s;
  auto* ac = aq->add_subcommand("constraint", "Constraint polynomial P_k in x = 4g^2, y = Delta^2");
  ac->add_option("--N", N)->required();
  ac->add_option("--eta", eta_s);
  ac->add_option("--k", k_index, "Index, defaults to N");
  ac->add_option("--x", x_s);
  ac->add_option("--y", y_s);
  ac->add_flag("--symbolic", symbolic, "Print the exact coefficient table");
  ac->callback([&] {
    action = [&] {
      const BigRat eta = parse_rat(eta_s);
      const int k = k_index < 0 ? N : k_index;
      json meta{{"command", "aqrm constraint"}, {"N", N}, {"k", k}, {"eta", eta_s}};
      const ConstraintPolynomial p = constraint_poly(N, eta, k);
      if (!x_s.empty() || !y_s.empty()) {
        if (x_s.empty() || y_s.empty()) throw InvalidParams("evaluation needs both --x and --y");
        const BigRat v = p.poly.evaluate(std::vector<BigRat>{parse_rat(x_s), parse_rat(y_s)});
        meta["x"] = x_s;
        meta["y"] = y_s;
        emit_table(g, {{"value", "exact"}, {{num(v.get_d()), to_string(v)}}}, meta);
        return exit_ok;
      }
      if (symbolic) {
        emit_table(g, poly_table(p.poly), meta);
      } else {
        meta["polynomial"] = p.poly.str();
        Table tab{{"x_degree", "y_degree", "coefficient"}, {}};
        for (const auto& [e, c] : p.poly.terms())
          tab.rows.push_back({std::to_string(e[0]), std::to_string(e[1]), num(c.get_d())});
        emit_table(g, tab, meta);
      }
      return exit_ok;
    };
  });

  std::string branch = "plus";
  auto* aj = aq->add_subcommand("juddian", "Exceptional eigenvalue and its polynomial solution");
  aqrm_params(aj);
  aj->add_option("--N", N)->required();
  aj->add_option("--branch", branch)->check(CLI::IsMember({"plus", "minus"}));
  aj->callback([&] {
    action = [&] {
      const SignBranch b = branch == "plus" ? SignBranch::plus : SignBranch::minus;
      validate(ap);
      const JuddianCheck c = juddian_check(ap, N, b);
      const JuddianSolution s = juddian_solution(ap, N, b);
      json meta{{"command", "aqrm juddian"}, {"g", ap.g}, {"delta", ap.delta}, {"eta", ap.eta}, {"N", N},
                {"branch", branch}, {"E", s.E}, {"constraint_value", c.constraint_value},
                {"truncation_defect", s.truncation_defect}};
      Table tab{{"n", "coefficient"}, {}};
      for (std::size_t n = 0; n < s.coeffs.size(); ++n) tab.rows.push_back({std::to_string(n), num(s.coeffs[n])});
      emit_table(g, tab, meta);
      return exit_ok;
    };
  });

  int ell = 1;
  auto* ag = aq->add_subcommand("gaa", "Generalized adiabatic energies");
  ag->add_option("--N", N)->required();
  ag->add_option("--ell", ell)->required();
  ag->add_option("--g", ap.g)->required();
  ag->add_option("--delta", ap.delta)->required();
  ag->callback([&] {
    action = [&] {
      const GaaEnergy e = gaa_energy(N, ell, ap.g, ap.delta);
      emit_table(g, {{"E_plus", "E_minus"}, {{num(e.E_plus), num(e.E_minus)}}},
                 {{"command", "aqrm gaa"}, {"N", N}, {"ell", ell}, {"g", ap.g}, {"delta", ap.delta}});
      return exit_ok;
    };
  });

  // heun
  auto* he = app.add_subcommand("heun", "Heun picture of the oscillator")->require_subcommand(1);
  double t = 2, eps = 0, eta = 0, a = 1, nu = 0.5;
  std::string variant = "plain", parity = "any";
  int finite_L = -1;
  auto heun_params = [&](CLI::App* c) {
    c->add_option("--t", t);
    c->add_option("--eps", eps);
    c->add_option("--eta", eta);
    c->add_option("--a", a);
    c->add_option("--nu", nu);
    c->add_option("--variant", variant)->check(CLI::IsMember({"plain", "bar"}));
    c->add_option("--parity", parity)->check(CLI::IsMember({"any", "even", "odd"}));
    c->add_option("--L", finite_L, "Finite-type degree");
  };
  auto scheme = [&] {
    const HeunData h = heun_data(t, eps, eta, a, nu, parse_variant(variant));
    if (parity == "any") return riemann_scheme(h);
    return riemann_scheme(h, parity == "even" ? Parity::even : Parity::odd,
                          finite_L < 0 ? std::nullopt : std::optional<int>(finite_L));
  };
  auto heun_meta = [&](const std::string& cmd) {
    return json{{"command", cmd}, {"t", t},           {"eps", eps},       {"eta", eta}, {"a", a},
                {"nu", nu},       {"variant", variant}, {"parity", parity}, {"L", finite_L}};
  };
  const std::vector<std::string> points{"0", "1", "t", "infinity"};
  auto* hs = he->add_subcommand("scheme", "Riemann scheme");
  heun_params(hs);
  hs->callback([&] {
    action = [&] {
      const RiemannScheme s = scheme();
      json meta = heun_meta("heun scheme");
      meta["accessory"] = s.accessory;
      meta["exponent_sum"] = s.exponent_sum();
      Table tab{{"point", "exponent_1", "exponent_2"}, {}};
      for (int i = 0; i < 4; ++i) tab.rows.push_back({points[i], num(s.exponents[i][0]), num(s.exponents[i][1])});
      emit_table(g, tab, meta);
      return exit_ok;
    };
  });
  auto* hm = he->add_subcommand("monodromy", "Local monodromy eigenvalues");
  heun_params(hm);
  hm->callback([&] {
    action = [&] {
      const MonodromyTable m = monodromy_eigenvalues(scheme());
      Table tab{{"point", "re_1", "im_1", "re_2", "im_2"}, {}};
      for (int i = 0; i < 4; ++i)
        tab.rows.push_back({points[i], num(m[i][0].real()), num(m[i][0].imag()), num(m[i][1].real()),
                            num(m[i][1].imag())});
      emit_table(g, tab, heun_meta("heun monodromy"));
      return exit_ok;
    };
  });

  // confluence
  auto* co = app.add_subcommand("confluence", "Confluence from the oscillator to the Rabi model")->require_subcommand(1);
  double A = -1, r = 1, k = 1, gg = 0.5, delta = 1;
  auto* cd = co->add_subcommand("ode", "Limit operator of the confluence family");
  cd->add_option("--A", A)->required();
  cd->add_option("--eta", eta);
  cd->add_option("--r", r)->required();
  cd->add_option("--k", k)->required();
  cd->add_option("--variant", variant)->check(CLI::IsMember({"plain", "bar"}));
  cd->callback([&] {
    action = [&] {
      const ConfluentLayout c = confluent_limit_ode(heun_with_A(A, eta, parse_variant(variant)), {r, k});
      emit_table(g,
                 {{"expo", "res0", "res1", "lin", "constant"},
                  {{num(c.expo), num(c.res0), num(c.res1), num(c.lin), num(c.constant)}}},
                 {{"command", "confluence ode"}, {"A", A}, {"eta", eta}, {"r", r}, {"k", k}, {"variant", variant}});
      return exit_ok;
    };
  });

  int index = 1, t_lo = 4, t_hi = 24;
  std::string a_opt;
  auto* cc = co->add_subcommand("converge", "Convergence of the finite-t constraint to P_i");
  cc->add_option("--L", L)->required();
  cc->add_option("--eta", eta);
  cc->add_option("--i", index)->required();
  cc->add_option("--g", gg)->required();
  cc->add_option("--delta", delta)->required();
  cc->add_option("--a", a_opt);
  cc->add_option("--log2-t-min", t_lo);
  cc->add_option("--log2-t-max", t_hi);
  cc->callback([&] {
    action = [&] {
      const std::optional<double> aa = a_opt.empty() ? std::nullopt : std::optional<double>(std::stod(a_opt));
      const ConvergenceTable c = q_tilde_convergence(L, eta, index, gg, delta, powers_of_two(t_lo, t_hi), aa);
      Table tab{{"t", "q_tilde", "P_target", "abs_diff"}, {}};
      for (const auto& row : c.rows)
        tab.rows.push_back({num(row.t), num(row.q_tilde), num(row.P_target), num(row.abs_diff)});
      emit_table(g, tab,
                 {{"command", "confluence converge"}, {"L", L}, {"i", index}, {"N", c.N}, {"a", c.a}, {"eta", eta},
                  {"g", gg}, {"delta", delta}, {"slope", num(c.slope)}});
      return exit_ok;
    };
  });

  auto* ce = co->add_subcommand("descend", "Descent of finite-type eigenfunctions to Juddian solutions");
  ce->add_option("--L", L)->required();
  ce->add_option("--eta", eta);
  ce->add_option("--g", gg)->required();
  ce->add_option("--delta", delta)->required();
  ce->add_option("--a", a_opt);
  ce->add_option("--log2-t-min", t_lo);
  ce->add_option("--log2-t-max", t_hi);
  ce->callback([&] {
    action = [&] {
      const std::optional<double> aa = a_opt.empty() ? std::nullopt : std::optional<double>(std::stod(a_opt));
      const DescentMap m = descent_eigenvalue(L, aa.value_or(L % 2 ? 2 : 1), eta, gg);
      const DescentTable d = descent_eigenfunction(L, eta, gg, delta, powers_of_two(t_lo, t_hi), aa);
      Table tab{{"t", "delta_t", "distance"}, {}};
      for (const auto& row : d.rows) tab.rows.push_back({num(row.t), num(row.delta_t), num(row.distance)});
      emit_table(g, tab,
                 {{"command", "confluence descend"}, {"L", L}, {"N", d.N}, {"a", d.a}, {"eta", eta}, {"g", gg},
                  {"delta", delta}, {"E", m.E}, {"juddian", d.juddian}});
      return exit_ok;
    };
  });

  auto* cp = co->add_subcommand("compat", "Compatibility of the eigenvalue descent");
  cp->add_option("--N", N)->required();
  cp->add_option("--g", gg)->required();
  cp->add_option("--delta", delta)->required();
  cp->add_option("--eta", eta);
  cp->add_option("--a", a);
  cp->callback([&] {
    action = [&] {
      const Compatibility c = compatibility_check(N, gg, delta, eta, a);
      std::string ls;
      for (int l : c.admissible_L) ls += (ls.empty() ? "" : " ") + std::to_string(l);
      emit_table(g, {{"residual", "exact_zero", "admissible_L"}, {{num(c.residual), c.exact_zero ? "true" : "false", ls}}},
                 {{"command", "confluence compat"}, {"N", N}, {"g", gg}, {"delta", delta}, {"eta", eta}, {"a", a}});
      return exit_ok;
    };
  });

  // curves
  auto* cu = app.add_subcommand("curves", "Constraint curves by marching squares")->require_subcommand(1);
  std::vector<double> box_v;
  int grid = 128;
  double refine_tol = 1e-13, limit_t = 16, curve_eta = 0.5, curve_a = 2;
  int model_N = 1, ncho_L = 3, limit_L = 1;
  auto curve_opts = [&](CLI::App* c) {
    c->add_option("--box", box_v, "u_min u_max v_min v_max")->expected(4)->required();
    c->add_option("--grid", grid);
    c->add_option("--refine-tol", refine_tol);
    c->add_option("--eta", curve_eta);
  };
  auto run_curve = [&](const CurveModel& model) {
    const CurveSet c = constraint_curve(model, parse_box(box_v), grid, refine_tol);
    json meta{{"command", "curves"},          {"model", describe(model)}, {"grid", grid},
              {"box", box_v},                 {"points", c.point_count()}, {"polylines", c.polylines.size()},
              {"residual_bound", c.residual_bound}, {"seed", g.seed}};
    if (g.format == "svg")
      emit(g, curves_svg(c, meta.dump()));
    else if (g.format == "csv")
      emit(g, "# " + meta.dump() + "\n" + curves_csv(c));
    else {
      Table tab{{"curve_id", "point_index", "u", "v", "residual"}, {}};
      for (std::size_t i = 0; i < c.polylines.size(); ++i)
        for (std::size_t j = 0; j < c.polylines[i].size(); ++j) {
          const CurvePoint& p = c.polylines[i][j];
          tab.rows.push_back({std::to_string(i), std::to_string(j), num(p.u), num(p.v), num(p.residual)});
        }
      emit(g, render(tab, meta, g.format));
    }
    return exit_ok;
  };
  auto* cun = cu->add_subcommand("ncho", "det of the constraint matrix in (x, y)");
  curve_opts(cun);
  cun->add_option("--L", ncho_L);
  cun->add_option("--a", curve_a);
  cun->callback([&] { action = [&] { return run_curve(NchoCurve{ncho_L, curve_eta, curve_a}); }; });
  auto* cua = cu->add_subcommand("aqrm", "P_N(4g^2, Delta^2) in (g, Delta)");
  curve_opts(cua);
  cua->add_option("--N", model_N);
  cua->callback([&] { action = [&] { return run_curve(AqrmCurve{model_N, curve_eta}); }; });
  auto* cul = cu->add_subcommand("limit", "Finite-t constraint in (g, Delta)");
  curve_opts(cul);
  cul->add_option("--L", limit_L);
  cul->add_option("--t", limit_t);
  cul->callback([&] { action = [&] { return run_curve(LimitCurve{limit_L, curve_eta, limit_t}); }; });

  // verify
  auto* ve = app.add_subcommand("verify", "Acceptance checks")->require_subcommand(1);
  ve->add_subcommand("all", "Run every acceptance criterion")->callback([&] {
    action = [&] {
      std::ostringstream lines;
      const auto outcomes = acceptance::run_all(lines);
      int passed = 0;
      for (const auto& o : outcomes) passed += o.pass;
      lines << passed << '/' << outcomes.size() << " criteria pass\n";
      emit(g, lines.str());
      return passed == int(outcomes.size()) ? exit_ok : exit_verify;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain;
  }
}
