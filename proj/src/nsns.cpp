#include "spintor/nsns.hpp"

#include <cmath>

namespace spintor {

namespace {

FormField gradient(const Expr& f, const Chart& chart) {
  FormField df(1, chart);
  for (int i = 0; i < 3; ++i)
    df.comp[1u << i] = differentiate(f, chart.coords[i]);
  return df;
}

// Minimum |f_b| scale over the points; throws if f_b vanishes at a sample.
void require_flux(const Expr& f_b, const std::vector<Env>& pts, double tol) {
  for (const Env& p : pts) {
    EvalScale es = evaluate_with_scale(f_b, p);
    if (std::fabs(es.value) <= tol * (1 + es.scale))
      throw ContractError("flux mode requires f_b nowhere zero on the box");
  }
}

}  // namespace

FormField susy_kappa(const SusyData& sd) {
  const Coframe3& c = sd.config.coframe;
  MetricField g = metric_from_coframe(c);
  auto us = sharp(g, c.u);
  auto vs = sharp(g, c.v);
  auto ns = sharp(g, c.n);

  Expr f_b = sd.config.f_b;
  FormField dfb = gradient(f_b, c.chart);
  Expr cv = pair_form_vector(dfb, vs) / f_b;  // c_b^v = dlog(f_b)(v#)
  Expr u_cv = directional(cv, us, c.chart);
  Expr n_cv = directional(cv, ns, c.chart);
  Expr two_fb = Expr::number(2) * f_b;

  Expr coeff_u = sd.kappa_v_free;
  Expr coeff_v = u_cv / two_fb - f_b;
  Expr coeff_n = n_cv / two_fb;

  FormField kappa(1, c.chart);
  for (int i = 0; i < 3; ++i) {
    BladeMask m = 1u << i;
    kappa.comp[m] = coeff_u * c.u.comp[m] + coeff_v * c.v.comp[m] +
                    coeff_n * c.n.comp[m];
  }
  return kappa;
}

Report nsns_residuals(const NSNSConfig& cfg, const CheckOptions& opt) {
  Report rep;
  rep.command = "nsns_residuals";
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  auto pts = cfg.chart().sample_points(opt.n_points, rng);

  MetricField g = metric_from_coframe(cfg.coframe);
  LeviCivita lc = christoffel_symbols(g);
  auto [ric, scal] = christoffel_curvature(g);
  (void)scal;

  Expr f2 = cfg.f_b * cfg.f_b;
  FormField dphi = gradient(cfg.phi, cfg.chart());

  // Einstein: Ric + Hess(phi) + 2 f_b^2 g
  BilinearField hess = hessian(lc, cfg.phi);
  double einstein = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Expr e = ric.t[i][j] + hess.t[i][j] + Expr::number(2) * f2 * g.g[i][j];
      einstein = std::max(einstein, max_residual(e, pts));
    }
  rep.add("einstein", einstein <= opt.tol, einstein, opt.n_points);

  // Maxwell: d f_b - f_b dphi (max norm over the 1-form components)
  FormField maxwell = gradient(cfg.f_b, cfg.chart()) - scale(cfg.f_b, dphi);
  double mx = form_max_residual(maxwell, pts);
  rep.add("maxwell", mx <= opt.tol, mx, opt.n_points);

  // Dilaton: codiff(dphi) + |dphi|^2 + 4 f_b^2
  Expr dil = codifferential(lc, dphi) + norm_squared(g, dphi) +
             Expr::number(4) * f2;
  double dl = max_residual(dil, pts);
  rep.add("dilaton", dl <= opt.tol, dl, opt.n_points);

  // Flux invariant: when f_b is not identically zero it must be c e^phi,
  // i.e. d(f_b e^{-phi}) = 0.
  double fmax = 0;
  for (const Env& p : pts) fmax = std::max(fmax, std::fabs(evaluate(cfg.f_b, p)));
  if (fmax > opt.tol) {
    Expr ratio = cfg.f_b * Expr::call("exp", -cfg.phi);
    FormField dratio = gradient(ratio, cfg.chart());
    double fr = form_max_residual(dratio, pts);
    rep.add("flux_exponential", fr <= opt.tol, fr, opt.n_points,
            "f_b = c e^phi up to chart-level differential");
  } else {
    rep.add_skipped("flux_exponential", "flux-less configuration");
  }
  return rep;
}

Report susy_config_residuals(const NSNSConfig& cfg, const CheckOptions& opt) {
  Report rep;
  rep.command = "susy_config";
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  auto pts = cfg.chart().sample_points(opt.n_points, rng);

  const Coframe3& c = cfg.coframe;
  MetricField g = metric_from_coframe(c);
  int orient = coframe_orientation(c, pts);

  // Skew-torsion condition nabla u = f_b *u via the Christoffel oracle:
  // theta = 0, chi = f_b g.
  BilinearField chi(cfg.chart());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) chi.t[i][j] = cfg.f_b * g.g[i][j];
  FormField theta = FormField::zero(1, cfg.chart());
  rep.merge(differential_spinor_check(g, c.u, theta, chi, orient, opt),
            "torsion");

  // dphi = c u + 2 f_b n with c = dphi(v#).
  auto vs = sharp(g, c.v);
  FormField dphi = gradient(cfg.phi, cfg.chart());
  Expr cc = pair_form_vector(dphi, vs);
  FormField target = scale(cc, c.u) + scale(Expr::number(2) * cfg.f_b, c.n);
  double m = form_max_residual(dphi - target, pts);
  rep.add("dilaton_one_form", m <= opt.tol, m, opt.n_points);
  return rep;
}

Report susy_solution_residuals(const SusyData& sd, const CheckOptions& opt) {
  Report rep;
  rep.command = "susy_solution";
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  const NSNSConfig& cfg = sd.config;
  auto pts = cfg.chart().sample_points(opt.n_points, rng);
  require_flux(cfg.f_b, pts, opt.tol);

  const Coframe3& c = cfg.coframe;
  MetricField g = metric_from_coframe(c);
  auto us = sharp(g, c.u);
  auto vs = sharp(g, c.v);
  auto ns = sharp(g, c.n);

  Expr f_b = cfg.f_b;
  Expr two_fb = Expr::number(2) * f_b;
  Expr four_fb2 = Expr::number(4) * f_b * f_b;
  FormField dfb = gradient(f_b, cfg.chart());
  Expr cv = pair_form_vector(dfb, vs) / f_b;
  Expr u_cv = directional(cv, us, cfg.chart());
  Expr n_cv = directional(cv, ns, cfg.chart());
  Expr v_cv = directional(cv, vs, cfg.chart());

  // du = 2 f_b n^u
  FormField r1 = exterior_d(c.u) - scale(two_fb, wedge(c.n, c.u));
  double m1 = form_max_residual(r1, pts);
  rep.add("du_equation", m1 <= opt.tol, m1, opt.n_points);

  // 2 f_b dv = (K u + u(c_b^v) v)^n
  FormField r2 = scale(two_fb, exterior_d(c.v)) -
                 wedge(scale(sd.K, c.u) + scale(u_cv, c.v), c.n);
  double m2 = form_max_residual(r2, pts);
  rep.add("dv_equation", m2 <= opt.tol, m2, opt.n_points);

  // 2 f_b dn = u^(u(c_b^v) v + n(c_b^v) n)
  FormField r3 = scale(two_fb, exterior_d(c.n)) -
                 wedge(c.u, scale(u_cv, c.v) + scale(n_cv, c.n));
  double m3 = form_max_residual(r3, pts);
  rep.add("dn_equation", m3 <= opt.tol, m3, opt.n_points);

  // n(K)/(2 f_b) = u(c)K/(4 f_b^2) + v(n(c)/(2 f_b)) + n(c)^2/(4 f_b^2) - v(c)
  Expr lhs = directional(sd.K, ns, cfg.chart()) / two_fb;
  Expr rhs = u_cv * sd.K / four_fb2 +
             directional(n_cv / two_fb, vs, cfg.chart()) +
             n_cv * n_cv / four_fb2 - v_cv;
  double m4 = max_residual(lhs - rhs, pts);
  rep.add("K_equation", m4 <= opt.tol, m4, opt.n_points);

  // d f_b(n) = 2 f_b^2
  Expr r5 = pair_form_vector(dfb, ns) - two_fb * f_b;
  double m5 = max_residual(r5, pts);
  rep.add("dfb_n_equation", m5 <= opt.tol, m5, opt.n_points);

  // closedness of c_b^v u + 2 f_b n (global exactness assumed at chart level)
  FormField one_form = scale(cv, c.u) + scale(two_fb, c.n);
  FormField r6 = exterior_d(one_form);
  double m6 = form_max_residual(r6, pts);
  rep.add("dilaton_closedness", m6 <= opt.tol, m6, opt.n_points,
          "global exactness assumed at chart level");
  return rep;
}

GeneratedSolution generate_local_solution(const Expr& a, const Expr& l,
                                          const Chart& chart,
                                          const CheckOptions& opt) {
  if (chart.dim() != 3)
    throw StructuralError("local solution needs a three-dimensional chart");
  const std::string& xu = chart.coords[0];
  const std::string& z = chart.coords[2];

  Expr denom = Expr::number(2) * Expr::var(z) + a;
  Expr da = differentiate(a, xu);

  std::mt19937_64 rng(opt.seed);
  auto pts = chart.sample_points(opt.n_points, rng);
  for (const Env& p : pts) {
    if (evaluate(denom, p) <= 0)
      throw DomainError("2 z + a(x_u) must be positive on the box");
    if (evaluate(da, p) <= 0)
      throw DomainError("a(x_u) must be strictly increasing on the box");
  }

  Expr f_b = -(Expr::number(1) / denom);
  Expr H = l / denom;

  FormField u = FormField::one_form(chart, da / denom, Expr::number(0),
                                    Expr::number(0));
  FormField v = FormField::one_form(chart, denom * H / (Expr::number(2) * da),
                                    Expr::number(1), Expr::number(0));
  FormField n = FormField::one_form(chart, Expr::number(0), Expr::number(0),
                                    Expr::number(1));

  GeneratedSolution out;
  out.data.config.coframe = Coframe3(u, v, n);
  out.data.config.f_b = f_b;
  out.data.config.phi = -Expr::call("log", denom);
  // K from (d_xu a)^2 K = d_z(H (2z + a)); zero on the solution family.
  out.data.K = differentiate(H * denom, z) / (da * da);
  out.data.kappa_v_free = out.data.K / (Expr::number(2) * f_b);

  // Chart potential for the flux: b = -2/(2z+a) dx_v^dz, with d b = H_b.
  out.b_field = FormField(2, chart);
  out.b_field.comp[0b110] = -(Expr::number(2) / denom);

  Report rep;
  rep.command = "generate_local_solution";
  rep.seed = opt.seed;
  MetricField g = metric_from_coframe(out.data.config.coframe);
  int orient = coframe_orientation(out.data.config.coframe, pts);
  FormField nu_g = hodge3(g, FormField::scalar(chart, Expr::number(1)), orient);
  FormField db_residual =
      exterior_d(out.b_field) + scale(Expr::number(2) * f_b, nu_g);
  double mdb = form_max_residual(db_residual, pts);
  rep.add("b_field_curvature", mdb <= opt.tol, mdb, opt.n_points,
          "d b = -2 f_b nu_g");
  bool hzero = max_residual(H, pts) <= opt.tol;
  if (hzero)
    rep.add("H_degenerate", true, 0.0, opt.n_points,
            "l identically zero: degenerate H accepted and flagged");
  out.report = std::move(rep);
  return out;
}

Report ddf_check(const SusyData& sd, const CheckOptions& opt) {
  Report rep;
  rep.command = "ddf_check";
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  const NSNSConfig& cfg = sd.config;
  auto pts = cfg.chart().sample_points(opt.n_points, rng);
  require_flux(cfg.f_b, pts, opt.tol);

  const Coframe3& c = cfg.coframe;
  MetricField g = metric_from_coframe(c);
  auto vs = sharp(g, c.v);
  auto ns = sharp(g, c.n);

  FormField dfb = gradient(cfg.f_b, cfg.chart());
  FormField dphi = gradient(cfg.phi, cfg.chart());
  Expr cc = pair_form_vector(dphi, vs);  // dilaton u-component

  // c agrees with c_b^v = dlog(f_b)(v#)
  Expr cv = pair_form_vector(dfb, vs) / cfg.f_b;
  double mc = max_residual(cc - cv, pts);
  rep.add("c_equals_cbv", mc <= opt.tol, mc, opt.n_points);

  // d f_b(v) = c f_b
  Expr r1 = pair_form_vector(dfb, vs) - cc * cfg.f_b;
  double m1 = max_residual(r1, pts);
  rep.add("dfb_v", m1 <= opt.tol, m1, opt.n_points);

  // d f_b(n) = 2 f_b^2
  Expr r2 = pair_form_vector(dfb, ns) - Expr::number(2) * cfg.f_b * cfg.f_b;
  double m2 = max_residual(r2, pts);
  rep.add("dfb_n", m2 <= opt.tol, m2, opt.n_points);

  // d c(v) = l + f_b kappa(v)
  FormField kappa = susy_kappa(sd);
  Expr l_coef = dkappa_l(c, cfg.f_b, kappa);
  Expr dcv = directional(cc, vs, cfg.chart());
  Expr r3 = dcv - (l_coef + cfg.f_b * sd.kappa_v_free);
  double m3 = max_residual(r3, pts);
  rep.add("dc_v", m3 <= opt.tol, m3, opt.n_points);
  return rep;
}

Report flux_dichotomy_check(const NSNSConfig& cfg, const CheckOptions& opt) {
  Report rep;
  rep.command = "flux_dichotomy";
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  auto pts = cfg.chart().sample_points(opt.n_points, rng);

  double max_abs = 0, min_abs = 0;
  bool has_pos = false, has_neg = false, first = true;
  for (const Env& p : pts) {
    double v = evaluate(cfg.f_b, p);
    double av = std::fabs(v);
    max_abs = std::max(max_abs, av);
    if (first) {
      min_abs = av;
      first = false;
    } else {
      min_abs = std::min(min_abs, av);
    }
    if (v > 0) has_pos = true;
    if (v < 0) has_neg = true;
  }

  if (max_abs <= opt.tol) {
    rep.add("dichotomy", true, max_abs, opt.n_points, "flux-less branch");
    return rep;
  }
  bool sign_change = has_pos && has_neg;
  bool near_zero = min_abs <= 1e-3 * max_abs;
  bool violated = sign_change || near_zero;
  rep.add("dichotomy", !violated, violated ? min_abs : 0.0, opt.n_points,
          violated ? "f_b vanishes somewhere but not everywhere"
                   : "flux branch: f_b nowhere zero");
  return rep;
}

}  // namespace spintor
