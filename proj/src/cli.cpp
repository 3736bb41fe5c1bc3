#include "angelesco/cli.hpp"

#include "angelesco/asymptotics.hpp"
#include "angelesco/cubic.hpp"
#include "angelesco/equilibrium.hpp"
#include "angelesco/modelrhp.hpp"
#include "angelesco/mop.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace angelesco::cli {

namespace {

Rational rat(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid number for ") + what + ": '" + s + "'");
  }
}

struct Raw {
  std::string a, alpha = "0", beta = "0", gamma = "0", h1, h2, tau = "0", ladder, z = "0", format = "json";
  std::string beta_model = "0";
  bool jacobi = false;
  unsigned n = 4, n2 = 0, points = 20;
  double radius = 0.25;
  int digits = -1;
  std::string out, method = "contour";
};

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw UsageError("empty complex number");
  auto num = [](const std::string& t) { return to_real(rat(t, "z")); };
  if (auto comma = s.find(','); comma != std::string::npos)
    return Complex(num(s.substr(0, comma)), num(s.substr(comma + 1)));
  if (s.back() != 'i') return Complex(num(s));
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag_of = [&](const std::string& t) {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    return num(t);
  };
  if (split == std::string::npos) return Complex(Real(0), imag_of(body));
  return Complex(num(body.substr(0, split)), imag_of(body.substr(split)));
}

std::vector<unsigned long> parse_ladder(const std::string& text) {
  std::vector<unsigned long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      const long v = std::stol(item, &pos);
      if (pos != item.size() || v < 1) throw std::invalid_argument("bad");
      out.push_back(static_cast<unsigned long>(v));
    } catch (const std::exception&) {
      throw UsageError("invalid ladder entry '" + item + "'");
    }
  }
  for (std::size_t k = 1; k < out.size(); ++k)
    if (out[k] <= out[k - 1]) throw UsageError("ladder must be strictly increasing");
  return out;
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Angelesco multiple orthogonal polynomials: experiments and checks"};
  app.require_subcommand(1);
  Raw r;
  auto common = [&](CLI::App* s) {
    s->add_option("--digits", r.digits, "working precision in decimal digits (>= 30)");
    s->add_option("--out", r.out, "output file (default stdout)");
    s->add_option("--format", r.format, "json or csv");
  };
  auto weights = [&](CLI::App* s, bool need_a) {
    auto* o = s->add_option("--a", r.a, "left endpoint a < 0");
    if (need_a) o->required();
    s->add_option("--alpha", r.alpha, "exponent at a");
    s->add_option("--beta", r.beta, "exponent at 0");
    s->add_option("--gamma", r.gamma, "exponent at 1");
    s->add_option("--h1", r.h1, "analytic factor on [a,0] as JSON");
    s->add_option("--h2", r.h2, "analytic factor on [0,1] as JSON");
    s->add_flag("--jacobi-angelesco", r.jacobi, "h1 = |x-1|^gamma, h2 = |x-a|^alpha");
  };
  auto curve_a = [&](CLI::App* s) { s->add_option("--a", r.a, "left endpoint a < 0")->required(); };

  auto* mop = app.add_subcommand("mop", "solve the moment system for P_{n1,n2}");
  weights(mop, true);
  mop->add_option("--n", r.n, "n1")->required();
  mop->add_option("--n2", r.n2, "n2 (default n1)");
  common(mop);

  auto* classical = app.add_subcommand("classical", "Jacobi-Angelesco P_{n,n} from the explicit double sum");
  weights(classical, true);
  classical->add_option("--n", r.n, "n")->required();
  classical->add_option("--z", r.z, "evaluation point");
  common(classical);

  auto* zeros = app.add_subcommand("zeros", "real zeros of P_{n1,n2}");
  weights(zeros, true);
  zeros->add_option("--n", r.n, "n1")->required();
  zeros->add_option("--n2", r.n2, "n2 (default n1)");
  common(zeros);

  auto* curve = app.add_subcommand("curve", "spectral curve constants");
  curve_a(curve);
  common(curve);

  auto* equil = app.add_subcommand("equilibrium", "masses, variational conditions and Lagrange constants");
  curve_a(equil);
  equil->add_option("--points", r.points, "test points per interval");
  common(equil);

  auto* dens = app.add_subcommand("density", "equilibrium densities on a grid");
  curve_a(dens);
  dens->add_option("--points", r.points, "grid points per interval");
  common(dens);

  auto* phase = app.add_subcommand("phase", "local phase maps at the origin");
  curve_a(phase);
  phase->add_option("--radius", r.radius, "radius of the averaging circle");
  common(phase);

  auto* model = app.add_subcommand("model-check", "jump, monodromy and ODE checks of the model problem");
  model->add_option("--beta", r.beta_model, "beta > -1");
  model->add_option("--tau", r.tau, "tau");
  common(model);

  auto* qeval = app.add_subcommand("q-eval", "the entire function Q(z; tau)");
  qeval->add_option("--beta", r.beta_model, "beta > -1");
  qeval->add_option("--tau", r.tau, "tau");
  qeval->add_option("--z", r.z, "point, e.g. 1+0.5i");
  qeval->add_option("--method", r.method, "contour, series or both");
  common(qeval);

  auto* consts = app.add_subcommand("constants", "c1, c2 and C_n");
  weights(consts, false);
  consts->add_option("--n", r.n, "n")->required();
  consts->add_option("--tau", r.tau, "tau");
  common(consts);

  auto* mh = app.add_subcommand("mehler-heine", "compare P_{n,n} at scaled z with (-1)^n C_n Q");
  weights(mh, false);
  mh->add_option("--tau", r.tau, "tau");
  mh->add_option("--z", r.z, "point, e.g. 1+0.5i");
  mh->add_option("--ladder", r.ladder, "comma separated n values")->required();
  common(mh);

  auto* sc = app.add_subcommand("scaling-check", "l1 + l2 against the double-scaling prediction");
  sc->add_option("--tau", r.tau, "tau");
  sc->add_option("--ladder", r.ladder, "comma separated n values")->required();
  common(sc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), kExitOk);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  cfg.subcommand = app.get_subcommands().front()->get_name();
  auto* sub = app.get_subcommands().front();
  if (r.digits < 0) r.digits = static_cast<int>(default_digits_from_env(kDefaultDigits));
  if (r.digits < 30) throw UsageError("--digits must be >= 30");
  cfg.digits = static_cast<unsigned>(r.digits);
  cfg.out = r.out;
  try {
    cfg.format = parse_format(r.format);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  cfg.n = r.n;
  cfg.n2 = r.n2 ? r.n2 : r.n;
  cfg.points = r.points;
  cfg.radius = r.radius;
  cfg.method = r.method;
  if (cfg.method != "contour" && cfg.method != "series" && cfg.method != "both")
    throw UsageError("--method must be contour, series or both");
  cfg.tau = rat(r.tau, "--tau");
  cfg.beta_model = rat(r.beta_model, "--beta");
  if ((cfg.subcommand == "model-check" || cfg.subcommand == "q-eval") && !(cfg.beta_model > -1))
    throw UsageError("--beta must exceed -1");
  cfg.z = r.z;
  parse_complex(cfg.z);
  if (!r.ladder.empty()) cfg.ladder = parse_ladder(r.ladder);

  cfg.weights_given = !r.a.empty();
  WeightParams p;
  p.a = r.a.empty() ? Rational(-1) : rat(r.a, "--a");
  if (!(p.a < 0)) throw UsageError("a must be < 0");
  if (sub->get_option_no_throw("--alpha")) {
    p.alpha = rat(r.alpha, "--alpha");
    p.beta = rat(r.beta, "--beta");
    p.gamma = rat(r.gamma, "--gamma");
    if (r.jacobi || cfg.subcommand == "classical") {
      p = WeightParams::jacobi_angelesco(p.a, p.alpha, p.beta, p.gamma);
    } else {
      try {
        if (!r.h1.empty()) p.h1 = factor_from_json(nlohmann::json::parse(r.h1));
        if (!r.h2.empty()) p.h2 = factor_from_json(nlohmann::json::parse(r.h2));
      } catch (const std::exception& e) {
        throw UsageError(std::string("invalid analytic factor: ") + e.what());
      }
    }
    try {
      validate(p);
    } catch (const ValidationError& e) {
      throw UsageError(e.what());
    }
  }
  cfg.params = p;
  return cfg;
}

namespace {

std::string dec(const Real& x, unsigned d) { return to_decimal(x, d); }

nlohmann::json cjson(const Complex& z, unsigned d) { return {{"re", dec(z.real(), d)}, {"im", dec(z.imag(), d)}}; }

Report cmd_mop(const RunConfig& c) {
  Report rep;
  rep.kind = "mop";
  const Polynomial P = solve_mop({c.n, c.n2}, c.params, c.digits);
  PrecisionGuard g(P.digits);
  rep.data = to_json(P, c.digits);
  rep.data["params"] = to_json(c.params);
  rep.data["accurate_digits"] = P.accurate_digits;
  rep.data["orthogonality_residual"] = P.orthogonality_residual;
  rep.data["exact"] = P.exact.has_value();
  rep.data["value_at_zero"] = dec(P.coeffs.front(), c.digits);
  rep.columns = {"k", "coefficient"};
  if (P.exact) rep.columns.push_back("exact");
  for (std::size_t k = 0; k < P.coeffs.size(); ++k) {
    std::vector<std::string> row{std::to_string(k), dec(P.coeffs[k], c.digits)};
    if (P.exact) row.push_back(rational_to_string((*P.exact)[k]));
    rep.rows.push_back(row);
  }
  return rep;
}

Report cmd_classical(const RunConfig& c) {
  Report rep;
  rep.kind = "classical";
  PrecisionGuard g(c.digits);
  const auto& p = c.params;
  const auto co = classical_pnn_coeffs(c.n, p.alpha, p.beta, p.gamma, p.a);
  rep.data["params"] = to_json(p);
  rep.data["n"] = c.n;
  const Complex z = parse_complex(c.z);
  const Complex v = classical_pnn(c.n, to_real(p.alpha), to_real(p.beta), to_real(p.gamma), to_real(p.a), z, c.digits);
  rep.data["z"] = cjson(z, c.digits);
  rep.data["value"] = cjson(v, c.digits);
  rep.data["value_at_zero_exact"] = rational_to_string(classical_pnn_at_zero(c.n, p.alpha, p.beta, p.gamma, p.a));
  rep.columns = {"k", "coefficient", "exact"};
  for (std::size_t k = 0; k < co.size(); ++k)
    rep.rows.push_back({std::to_string(k), to_decimal(co[k], c.digits), rational_to_string(co[k])});
  return rep;
}

Report cmd_zeros(const RunConfig& c) {
  Report rep;
  rep.kind = "zeros";
  const Polynomial P = solve_mop({c.n, c.n2}, c.params, c.digits);
  PrecisionGuard g(P.digits);
  rep.data["params"] = to_json(c.params);
  rep.data["index"] = {c.n, c.n2};
  rep.columns = {"interval", "index", "x"};
  try {
    const ZeroSet z = poly_zeros(P, c.params);
    for (std::size_t k = 0; k < z.left.size(); ++k) rep.rows.push_back({"1", std::to_string(k), dec(z.left[k], c.digits)});
    for (std::size_t k = 0; k < z.right.size(); ++k)
      rep.rows.push_back({"2", std::to_string(k), dec(z.right[k], c.digits)});
    rep.data["count_left"] = z.left.size();
    rep.data["count_right"] = z.right.size();
  } catch (const InvariantError& e) {
    rep.pass = false;
    rep.data["error"] = e.what();
  }
  return rep;
}

Report cmd_curve(const RunConfig& c) {
  Report rep;
  rep.kind = "curve";
  PrecisionGuard g(c.digits);
  const Real a = to_real(c.params.a);
  const CurveData cd = curve_constants(a, c.digits);
  auto resid = [&](const std::array<Real, 4>& k, const Real& x) {
    const Real v = ((k[0] * x + k[1]) * x + k[2]) * x + k[3];
    const Real s = abs(k[0] * x * x * x) + abs(k[1] * x * x) + abs(k[2] * x) + abs(k[3]);
    return s == 0 ? Real(0) : Real(abs(v) / s);
  };
  const Real rz = resid(zstar_cubic(a), cd.zstar), rx = resid(x0_cubic(a), cd.x0);
  rep.data = {{"a", rational_to_string(c.params.a)},
              {"zstar", dec(cd.zstar, c.digits)},
              {"x0", dec(cd.x0, c.digits)},
              {"b", dec(cd.b, c.digits)},
              {"c0", dec(cd.c0, c.digits)},
              {"c1", dec(cd.c1, c.digits)},
              {"zstar_residual", dec(rz, 6)},
              {"x0_residual", dec(rx, 6)}};
  rep.pass = rz <= Real(1e-20) && rx <= Real(1e-20);
  rep.columns = {"name", "value"};
  for (const char* k : {"zstar", "x0", "b", "c0", "c1"}) rep.rows.push_back({k, rep.data[k].get<std::string>()});
  return rep;
}

Report cmd_equilibrium(const RunConfig& c) {
  Report rep;
  rep.kind = "equilibrium";
  PrecisionGuard g(c.digits);
  const CurveData cd = curve_constants(to_real(c.params.a), c.digits);
  PotentialData pd;
  try {
    pd = potentials_and_constants(cd, c.points, Real(1e-10));
  } catch (const InvariantError& e) {
    rep.pass = false;
    rep.data["error"] = e.what();
    return rep;
  }
  rep.data = {{"a", rational_to_string(c.params.a)},
              {"mass1", dec(pd.mass1, c.digits)},
              {"mass2", dec(pd.mass2, c.digits)},
              {"l1", dec(pd.l1, c.digits)},
              {"l2", dec(pd.l2, c.digits)},
              {"l1_deviation", dec(pd.l1_deviation, 6)},
              {"l2_deviation", dec(pd.l2_deviation, 6)},
              {"l1_g", dec(pd.l1_g, c.digits)},
              {"l2_g", dec(pd.l2_g, c.digits)}};
  rep.pass = abs(pd.mass1 - Real(0.5)) <= Real(1e-10) && abs(pd.mass2 - Real(0.5)) <= Real(1e-10);
  rep.columns = {"interval", "x", "condition_value"};
  for (std::size_t k = 0; k < pd.points1.size(); ++k)
    rep.rows.push_back({"1", dec(pd.points1[k], c.digits), dec(pd.values1[k], c.digits)});
  for (std::size_t k = 0; k < pd.points2.size(); ++k)
    rep.rows.push_back({"2", dec(pd.points2[k], c.digits), dec(pd.values2[k], c.digits)});
  return rep;
}

Report cmd_density(const RunConfig& c) {
  Report rep;
  rep.kind = "density";
  PrecisionGuard g(c.digits);
  const Real a = to_real(c.params.a);
  const DensityModel m(curve_constants(a, c.digits));
  const Real tol = pow(Real(10), -static_cast<int>(c.digits) + 10);
  rep.data = {{"a", rational_to_string(c.params.a)},
              {"mass1", dec(m.mass(1, tol), c.digits)},
              {"mass2", dec(m.mass(2, tol), c.digits)},
              {"x0", dec(m.curve().x0, c.digits)}};
  rep.columns = {"interval", "x", "density"};
  for (int j : {1, 2}) {
    const Real lo = j == 1 ? a : Real(0), hi = j == 1 ? Real(0) : Real(1);
    for (unsigned k = 0; k < c.points; ++k) {
      const Real t = (Real(k) + Real(0.5)) / c.points;
      const Real x = lo + (hi - lo) * t;
      rep.rows.push_back({std::to_string(j), dec(x, c.digits), dec(m.at(j, x), c.digits)});
    }
  }
  return rep;
}

Report cmd_phase(const RunConfig& c) {
  Report rep;
  rep.kind = "phase";
  PrecisionGuard g(c.digits);
  const PhaseMaps pm = phase_maps(curve_constants(to_real(c.params.a), c.digits), Real(c.radius));
  rep.data = {{"a", rational_to_string(c.params.a)},
              {"c0", dec(pm.c0, c.digits)},
              {"c1", dec(pm.c1, c.digits)},
              {"lambda1_0", cjson(pm.lambda1_0, c.digits)},
              {"lambda2_0", cjson(pm.lambda2_0, c.digits)},
              {"fprime0", dec(pm.fprime0, c.digits)},
              {"tau0", dec(pm.tau0, c.digits)},
              {"radius", dec(pm.radius, 6)},
              {"min_re_lambda2", dec(pm.min_re_lambda2, c.digits)},
              {"continuity_residual", dec(pm.continuity_residual, 6)},
              {"f_imag_on_reals", dec(pm.f_imag_on_reals, 6)}};
  rep.pass = pm.min_re_lambda2 > 0 && pm.continuity_residual <= Real(1e-10);
  rep.columns = {"name", "value"};
  for (const char* k : {"c0", "c1", "fprime0", "tau0"}) rep.rows.push_back({k, rep.data[k].get<std::string>()});
  return rep;
}

Report cmd_model(const RunConfig& c) {
  Report rep;
  rep.kind = "model-check";
  PrecisionGuard g(c.digits);
  const auto res = model_check_suite(to_real(c.beta_model), to_real(c.tau), c.digits);
  rep.data["beta"] = rational_to_string(c.beta_model);
  rep.data["tau"] = rational_to_string(c.tau);
  rep.columns = {"check", "points", "max_residual", "tolerance", "pass"};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& e : res) {
    rep.rows.push_back({e.check, std::to_string(e.points), dec(e.max_residual, 6), dec(Real(e.tolerance), 3),
                        e.pass ? "true" : "false"});
    checks.push_back({{"check", e.check}, {"max_residual", dec(e.max_residual, 6)}, {"pass", e.pass}});
    rep.pass = rep.pass && e.pass;
  }
  rep.data["checks"] = checks;
  return rep;
}

Report cmd_qeval(const RunConfig& c) {
  Report rep;
  rep.kind = "q-eval";
  PrecisionGuard g(c.digits);
  const Complex z = parse_complex(c.z);
  const Real tau = to_real(c.tau), beta = to_real(c.beta_model);
  rep.data = {{"z", cjson(z, c.digits)}, {"tau", rational_to_string(c.tau)}, {"beta", rational_to_string(c.beta_model)}};
  rep.columns = {"method", "re", "im"};
  Complex vc, vs;
  if (c.method != "series") {
    const auto d = Q_derivs(z, tau, beta, {}, c.digits);
    vc = d[0];
    rep.data["contour"] = cjson(vc, c.digits);
    rep.data["derivatives"] = {cjson(d[1], c.digits), cjson(d[2], c.digits), cjson(d[3], c.digits)};
    rep.rows.push_back({"contour", dec(vc.real(), c.digits), dec(vc.imag(), c.digits)});
  }
  if (c.method != "contour") {
    if (c.tau != 0) throw ValidationError("the series is only available at tau = 0");
    vs = Q_series_tau0(z, beta, 2000, c.digits).value;
    rep.data["series"] = cjson(vs, c.digits);
    rep.rows.push_back({"series", dec(vs.real(), c.digits), dec(vs.imag(), c.digits)});
  }
  if (c.method == "both") {
    const Real d = abs(vc - vs) / abs(vs);
    rep.data["relative_difference"] = dec(d, 6);
    rep.pass = d <= Real(1e-10);
  }
  return rep;
}

Report cmd_constants(const RunConfig& c) {
  Report rep;
  rep.kind = "constants";
  PrecisionGuard g(c.digits);
  const auto k = asymptotic_constants(c.n, to_real(c.tau), c.params, c.digits);
  rep.data = to_json(k, c.digits);
  rep.data["tau"] = rational_to_string(c.tau);
  if (is_jacobi_angelesco(c.params)) {
    const auto& p = c.params;
    const Real z0 = pnn_zero_asymptotic(c.n, to_real(c.tau), to_real(p.alpha), to_real(p.beta), to_real(p.gamma));
    rep.data["pnn_zero_asymptotic"] = dec(z0, c.digits);
  }
  rep.columns = {"name", "value"};
  for (const char* key : {"c1", "c2", "Cn"}) rep.rows.push_back({key, rep.data[key].get<std::string>()});
  return rep;
}

Report cmd_mh(const RunConfig& c) {
  Report rep;
  rep.kind = "mehler-heine";
  PrecisionGuard g(c.digits);
  WeightParams p = c.params;
  p.a = Rational(-1);
  if (is_jacobi_angelesco(c.params)) p = WeightParams::jacobi_angelesco(Rational(-1), p.alpha, p.beta, p.gamma);
  const auto r = mh_compare(parse_complex(c.z), c.tau, c.ladder, p, c.digits);
  rep.data = to_json(r, c.digits);
  rep.columns = {"n", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "ratio_minus_1", "ratio_minus_1_sqrt_n"};
  for (const auto& row : r.rows)
    rep.rows.push_back({std::to_string(row.n), dec(row.lhs.real(), c.digits), dec(row.lhs.imag(), c.digits),
                        dec(row.rhs.real(), c.digits), dec(row.rhs.imag(), c.digits), dec(row.ratio_minus_1, c.digits),
                        dec(row.ratio_minus_1 * sqrt(Real(row.n)), c.digits)});
  return rep;
}

Report cmd_scaling(const RunConfig& c) {
  Report rep;
  rep.kind = "scaling-check";
  PrecisionGuard g(c.digits);
  const auto r = lagrange_scaling_check(c.tau, c.ladder, c.digits);
  rep.data = to_json(r, c.digits);
  rep.columns = {"n", "a", "l1", "l2", "deviation"};
  for (const auto& row : r.rows)
    rep.rows.push_back({std::to_string(row.n), dec(row.a, c.digits), dec(row.l1, c.digits), dec(row.l2, c.digits),
                        dec(row.deviation, c.digits)});
  return rep;
}

}  // namespace

Report run_command(const RunConfig& c) {
  Report rep;
  const std::string& s = c.subcommand;
  if (s == "mop") rep = cmd_mop(c);
  else if (s == "classical") rep = cmd_classical(c);
  else if (s == "zeros") rep = cmd_zeros(c);
  else if (s == "curve") rep = cmd_curve(c);
  else if (s == "equilibrium") rep = cmd_equilibrium(c);
  else if (s == "density") rep = cmd_density(c);
  else if (s == "phase") rep = cmd_phase(c);
  else if (s == "model-check") rep = cmd_model(c);
  else if (s == "q-eval") rep = cmd_qeval(c);
  else if (s == "constants") rep = cmd_constants(c);
  else if (s == "mehler-heine") rep = cmd_mh(c);
  else if (s == "scaling-check") rep = cmd_scaling(c);
  else throw UsageError("unknown subcommand " + s);
  rep.data["digits"] = c.digits;
  return rep;
}

int run_cli(int argc, const char* const* argv) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const UsageError& e) {
    (e.code() == kExitOk ? std::cout : std::cerr) << e.what() << "\n";
    return e.code();
  }
  Report rep;
  try {
    rep = run_command(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  try {
    emit_report(rep, cfg.format, cfg.out);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return rep.pass ? kExitOk : kExitVerification;
}

}  // namespace angelesco::cli
