#include "spintor/lorentz_systems.hpp"

namespace spintor {

namespace {

Report fresh_report(const CheckOptions& opt, const std::string& cmd) {
  Report r;
  r.command = cmd;
  r.seed = opt.seed;
  return r;
}

FormField one_form_from_coeffs(const Coframe3& c, const Expr& a, const Expr& b,
                               const Expr& d) {
  // a u + b v + d n as a coordinate one-form
  FormField r(1, c.chart);
  for (int i = 0; i < 3; ++i) {
    BladeMask m = 1u << i;
    r.comp[m] = a * c.u.comp[m] + b * c.v.comp[m] + d * c.n.comp[m];
  }
  return r;
}

}  // namespace

TwoFormCoframe expand_two_form(const FormField& w, const Coframe3& c,
                               const MetricField& g) {
  if (w.degree != 2) throw StructuralError("expected a 2-form");
  auto us = sharp(g, c.u);
  auto vs = sharp(g, c.v);
  auto ns = sharp(g, c.n);
  auto eval2 = [&](const std::array<Expr, 3>& x, const std::array<Expr, 3>& y) {
    Expr r = Expr::number(0);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Expr cij = w.comp[(1u << i) | (1u << j)];
        r = r + cij * (x[i] * y[j] - x[j] * y[i]);
      }
    return r;
  };
  // w = A u^v + B u^n + C v^n with  A = -w(u#,v#), B = w(v#,n#), C = w(u#,n#).
  TwoFormCoframe out;
  out.A = -eval2(us, vs);
  out.B = eval2(vs, ns);
  out.C = eval2(us, ns);
  return out;
}

Report check_exterior_system(const Coframe3& c, const Expr& f,
                             const FormField& kappa, const CheckOptions& opt) {
  Report rep = fresh_report(opt, "exterior_system");
  std::mt19937_64 rng(opt.seed);
  auto pts = c.chart.sample_points(opt.n_points, rng);

  MetricField g = metric_from_coframe(c);
  int orient = coframe_orientation(c, pts);

  double norm = coframe_normalization_residual(c, pts);
  rep.add("coframe_normalization", norm <= opt.tol, norm, opt.n_points);

  FormField fv_k = scale(f, c.v) + kappa;

  FormField r1 = scale(Expr::number(0.5), exterior_d(c.u)) -
                 scale(f, hodge3(g, c.u, orient));
  FormField r2 = exterior_d(c.v) - wedge(fv_k, c.n);
  FormField r3 = exterior_d(c.n) - wedge(c.u, fv_k);

  double m1 = form_max_residual(r1, pts);
  double m2 = form_max_residual(r2, pts);
  double m3 = form_max_residual(r3, pts);
  rep.add("du_torsion", m1 <= opt.tol, m1, opt.n_points);
  rep.add("dv_connection", m2 <= opt.tol, m2, opt.n_points);
  rep.add("dn_connection", m3 <= opt.tol, m3, opt.n_points);
  return rep;
}

KappaSolve solve_kappa(const Coframe3& c, const Expr& f,
                       const CheckOptions& opt,
                       const std::optional<Expr>& free_v) {
  std::mt19937_64 rng(opt.seed);
  auto pts = c.chart.sample_points(opt.n_points, rng);
  MetricField g = metric_from_coframe(c);
  int orient = coframe_orientation(c, pts);

  Report rep = fresh_report(opt, "solve_kappa");

  // Precondition: du/2 = f *u must already hold.
  FormField r1 = scale(Expr::number(0.5), exterior_d(c.u)) -
                 scale(f, hodge3(g, c.u, orient));
  double m1 = form_max_residual(r1, pts);
  if (m1 > opt.tol)
    throw ContractError("solve_kappa: du/2 - f *u does not vanish");
  rep.add("du_torsion", true, m1, opt.n_points);

  // dn = (f + b) u^v + cn u^n, with no v^n part allowed.
  TwoFormCoframe dn = expand_two_form(exterior_d(c.n), c, g);
  double vn = max_residual(dn.C, pts);
  if (vn > opt.tol)
    throw InconsistencyError(
        "solve_kappa: dn has a v^n component, system is inconsistent");
  Expr coeff_v = dn.A - f;
  Expr coeff_n = dn.B;

  // dv = a u^n + (f + b) v^n fixes the u-coefficient unless supplied.
  TwoFormCoframe dv = expand_two_form(exterior_d(c.v), c, g);
  Expr coeff_u = free_v ? *free_v : dv.B;

  KappaSolve out;
  out.coeff_u = coeff_u;
  out.coeff_v = coeff_v;
  out.coeff_n = coeff_n;
  out.kappa = one_form_from_coeffs(c, coeff_u, coeff_v, coeff_n);

  // Consistency: the assembled kappa must satisfy the whole system.
  rep.merge(check_exterior_system(c, f, out.kappa, opt));
  out.consistency = std::move(rep);
  return out;
}

Report integrability_check(const Coframe3& c, const Expr& f,
                           const FormField& kappa, const CheckOptions& opt) {
  Report rep = fresh_report(opt, "integrability");
  std::mt19937_64 rng(opt.seed);
  auto pts = c.chart.sample_points(opt.n_points, rng);
  MetricField g = metric_from_coframe(c);

  FormField df(1, c.chart);
  for (int i = 0; i < 3; ++i)
    df.comp[1u << i] = differentiate(f, c.chart.coords[i]);
  FormField dk = exterior_d(kappa);

  // df ^ u ^ n = 0
  FormField i1 = wedge(df, wedge(c.u, c.n));
  // n ^ (df ^ v + dkappa) = 0
  FormField i2 = wedge(c.n, wedge(df, c.v) + dk);
  // u ^ dkappa = (df(n) + f^2 + kappa(u) f) u^v^n
  auto ns = sharp(g, c.n);
  auto us = sharp(g, c.u);
  Expr dfn = pair_form_vector(df, ns);
  Expr ku = pair_form_vector(kappa, us);
  FormField i3 = wedge(c.u, dk) -
                 scale(dfn + f * f + ku * f, wedge(wedge(c.u, c.v), c.n));

  double m1 = form_max_residual(i1, pts);
  double m2 = form_max_residual(i2, pts);
  double m3 = form_max_residual(i3, pts);
  rep.add("df_wedge_u_n", m1 <= opt.tol, m1, opt.n_points);
  rep.add("n_wedge_df_v_dkappa", m2 <= opt.tol, m2, opt.n_points);
  rep.add("u_wedge_dkappa", m3 <= opt.tol, m3, opt.n_points);
  return rep;
}

Expr dkappa_l(const Coframe3& c, const Expr& f, const FormField& kappa) {
  (void)f;
  MetricField g = metric_from_coframe(c);
  return expand_two_form(exterior_d(kappa), c, g).B;
}

BilinearField ricci_from_formula(const Coframe3& c, const Expr& f,
                                 const FormField& kappa) {
  MetricField g = metric_from_coframe(c);
  auto vs = sharp(g, c.v);
  auto ns = sharp(g, c.n);

  FormField df(1, c.chart);
  for (int i = 0; i < 3; ++i)
    df.comp[1u << i] = differentiate(f, c.chart.coords[i]);
  Expr dfv = pair_form_vector(df, vs);
  Expr dfn = pair_form_vector(df, ns);
  Expr kv = pair_form_vector(kappa, vs);
  Expr l = dkappa_l(c, f, kappa);

  // Ric = -df(v) u(.)n - (2f^2 + df(n)) g - df(n) n(x)n + (f kappa(v) - l) u(x)u
  BilinearField ric(c.chart);
  Expr trace_coef = Expr::number(2) * f * f + dfn;
  Expr uu_coef = f * kv - l;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Expr ui = c.u.comp[1u << i], uj = c.u.comp[1u << j];
      Expr ni = c.n.comp[1u << i], nj = c.n.comp[1u << j];
      ric.t[i][j] = -(dfv * (ui * nj + uj * ni)) - trace_coef * g.g[i][j] -
                    dfn * (ni * nj) + uu_coef * (ui * uj);
    }
  return ric;
}

Expr scalar_curvature_formula(const Coframe3& c, const Expr& f) {
  MetricField g = metric_from_coframe(c);
  auto ns = sharp(g, c.n);
  FormField df(1, c.chart);
  for (int i = 0; i < 3; ++i)
    df.comp[1u << i] = differentiate(f, c.chart.coords[i]);
  Expr dfn = pair_form_vector(df, ns);
  return -(Expr::number(6) * f * f + Expr::number(4) * dfn);
}

TorsorResult torsor_act(const Expr& F, const Coframe3& c, const Expr& f,
                        const FormField& kappa) {
  Expr half_f2 = Expr::number(0.5) * F * F;
  FormField v2 = c.v - scale(half_f2, c.u) + scale(F, c.n);
  FormField n2 = c.n - scale(F, c.u);

  FormField dF(1, c.chart);
  for (int i = 0; i < 3; ++i)
    dF.comp[1u << i] = differentiate(F, c.chart.coords[i]);

  // kappa' = kappa + dF + f F n - f F^2 / 2 u   (with the original n)
  FormField kappa2 =
      kappa + dF + scale(f * F, c.n) - scale(f * half_f2, c.u);

  TorsorResult out;
  out.coframe = Coframe3(c.u, v2, n2);
  out.kappa = kappa2;
  return out;
}

Report differential_spinor_check(const MetricField& g, const FormField& u,
                                 const FormField& theta,
                                 const BilinearField& chi, int orientation,
                                 const CheckOptions& opt) {
  Report rep = fresh_report(opt, "differential_spinor");
  std::mt19937_64 rng(opt.seed);
  auto pts = g.chart.sample_points(opt.n_points, rng);

  // Precondition: u isotropic.
  Expr u2 = norm_squared(g, u);
  double iso = max_residual(u2, pts);
  if (iso > opt.tol)
    throw ContractError("differential spinor check: u is not isotropic");
  rep.add("u_isotropic", true, iso, opt.n_points);

  LeviCivita lc = christoffel_symbols(g);
  BilinearField nabla_u = covariant_derivative_one_form(lc, u);

  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    // chi_w for w = d/dx^i, then *(u ^ chi_i)
    FormField chi_i(1, g.chart);
    for (int j = 0; j < 3; ++j) chi_i.comp[1u << j] = chi.t[i][j];
    FormField star = hodge3(g, wedge(u, chi_i), orientation);
    for (int j = 0; j < 3; ++j) {
      Expr residual = nabla_u.t[i][j] - theta.comp[1u << i] * u.comp[1u << j] -
                      star.comp[1u << j];
      worst = std::max(worst, max_residual(residual, pts));
    }
  }
  rep.add("nabla_u_equation", worst <= opt.tol, worst, opt.n_points);
  return rep;
}

FormField godbillon_vey_rep(const Coframe3& c, const Expr& f,
                            const FormField& kappa) {
  (void)kappa;
  FormField fn = scale(f, c.n);
  return scale(Expr::number(4), wedge(fn, exterior_d(fn)));
}

Expr equicontinuity_residual(const Coframe3& c, const Expr& f,
                             const FormField& kappa, const Expr& F) {
  MetricField g = metric_from_coframe(c);
  auto us = sharp(g, c.u);
  FormField dF(1, c.chart);
  for (int i = 0; i < 3; ++i)
    dF.comp[1u << i] = differentiate(F, c.chart.coords[i]);
  return pair_form_vector(kappa, us) + pair_form_vector(dF, us) + f;
}

Expr leaf_curvature_coeff(const Coframe3& c, const Expr& f) {
  MetricField g = metric_from_coframe(c);
  auto ns = sharp(g, c.n);
  FormField df(1, c.chart);
  for (int i = 0; i < 3; ++i)
    df.comp[1u << i] = differentiate(f, c.chart.coords[i]);
  return pair_form_vector(df, ns) + f * f;
}

}  // namespace spintor
