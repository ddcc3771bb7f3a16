#include "spintor/christoffel.hpp"

namespace spintor {

LeviCivita christoffel_symbols(const MetricField& g) {
  LeviCivita lc;
  lc.chart = g.chart;
  lc.inv = metric_inverse(g);
  const auto& coords = g.chart.coords;

  // d_g[k][i][j] = d_k g_ij
  std::array<std::array<std::array<Expr, 3>, 3>, 3> dg;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        dg[k][i][j] = differentiate(g.g[i][j], coords[k]);

  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Expr sum = Expr::number(0);
        for (int l = 0; l < 3; ++l)
          sum = sum + lc.inv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        lc.gamma[k][i][j] = Expr::number(0.5) * sum;
      }
  return lc;
}

std::pair<BilinearField, Expr> christoffel_curvature(const MetricField& g) {
  LeviCivita lc = christoffel_symbols(g);
  const auto& coords = g.chart.coords;

  // dGamma[m][k][i][j] = d_m Gamma^k_ij
  std::array<std::array<std::array<std::array<Expr, 3>, 3>, 3>, 3> dgamma;
  for (int m = 0; m < 3; ++m)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          dgamma[m][k][i][j] = differentiate(lc.gamma[k][i][j], coords[m]);

  // Ric_{kj} = R^i_{kij} with
  // R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
  //           + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}
  BilinearField ric(g.chart);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      Expr sum = Expr::number(0);
      for (int i = 0; i < 3; ++i) {
        sum = sum + dgamma[i][i][j][k] - dgamma[j][i][i][k];
        for (int m = 0; m < 3; ++m)
          sum = sum + lc.gamma[i][i][m] * lc.gamma[m][j][k] -
                lc.gamma[i][j][m] * lc.gamma[m][i][k];
      }
      ric.t[k][j] = sum;
    }

  Expr scalar = Expr::number(0);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j)
      scalar = scalar + lc.inv[k][j] * ric.t[k][j];
  return {ric, scalar};
}

BilinearField covariant_derivative_one_form(const LeviCivita& lc,
                                            const FormField& w) {
  if (w.degree != 1)
    throw StructuralError("covariant derivative expects a one-form");
  BilinearField r(lc.chart);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Expr sum = differentiate(w.comp[1u << j], lc.chart.coords[i]);
      for (int k = 0; k < 3; ++k)
        sum = sum - lc.gamma[k][i][j] * w.comp[1u << k];
      r.t[i][j] = sum;
    }
  return r;
}

BilinearField hessian(const LeviCivita& lc, const Expr& f) {
  FormField df(1, lc.chart);
  for (int i = 0; i < 3; ++i)
    df.comp[1u << i] = differentiate(f, lc.chart.coords[i]);
  return covariant_derivative_one_form(lc, df);
}

Expr codifferential(const LeviCivita& lc, const FormField& w) {
  BilinearField cov = covariant_derivative_one_form(lc, w);
  Expr sum = Expr::number(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      sum = sum + lc.inv[i][j] * cov.t[i][j];
  return -sum;
}

Expr norm_squared(const MetricField& g, const FormField& w) {
  auto inv = metric_inverse(g);
  Expr sum = Expr::number(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      sum = sum + inv[i][j] * w.comp[1u << i] * w.comp[1u << j];
  return sum;
}

}  // namespace spintor
