#include "spintor/coframe.hpp"

#include <cmath>

namespace spintor {

namespace {

// Levi-Civita symbol on three indices.
int eps3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  if ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) ||
      (a == 2 && b == 0 && c == 1))
    return 1;
  return -1;
}

Expr one_form_comp(const FormField& w, int i) {
  return w.comp[1u << i];
}

}  // namespace

double bilinear_max_residual(const BilinearField& b,
                             const std::vector<Env>& pts) {
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, max_residual(b.t[i][j], pts));
  return worst;
}

Coframe3::Coframe3(FormField u_, FormField v_, FormField n_)
    : u(std::move(u_)), v(std::move(v_)), n(std::move(n_)), chart(u.chart) {
  if (u.degree != 1 || v.degree != 1 || n.degree != 1)
    throw StructuralError("null coframe needs three one-forms");
}

MetricField metric_from_coframe(const Coframe3& c) {
  MetricField g(c.chart);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Expr ui = one_form_comp(c.u, i), uj = one_form_comp(c.u, j);
      Expr vi = one_form_comp(c.v, i), vj = one_form_comp(c.v, j);
      Expr ni = one_form_comp(c.n, i), nj = one_form_comp(c.n, j);
      g.g[i][j] = ui * vj + uj * vi + ni * nj;
    }
  return g;
}

Expr metric_det(const MetricField& g) {
  const auto& m = g.g;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<std::array<Expr, 3>, 3> metric_inverse(const MetricField& g) {
  const auto& m = g.g;
  Expr det = metric_det(g);
  std::array<std::array<Expr, 3>, 3> inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // cofactor transpose; symmetric input keeps this symmetric
      inv[j][i] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / det;
    }
  return inv;
}

std::array<Expr, 3> sharp(const MetricField& g, const FormField& w) {
  if (w.degree != 1) throw StructuralError("sharp expects a one-form");
  auto inv = metric_inverse(g);
  std::array<Expr, 3> x;
  for (int i = 0; i < 3; ++i) {
    x[i] = Expr::number(0);
    for (int j = 0; j < 3; ++j) x[i] = x[i] + inv[i][j] * one_form_comp(w, j);
  }
  return x;
}

Expr pair_form_vector(const FormField& w, const std::array<Expr, 3>& x) {
  if (w.degree != 1) throw StructuralError("pairing expects a one-form");
  Expr r = Expr::number(0);
  for (int i = 0; i < 3; ++i) r = r + one_form_comp(w, i) * x[i];
  return r;
}

Expr directional(const Expr& f, const std::array<Expr, 3>& x,
                 const Chart& chart) {
  Expr r = Expr::number(0);
  for (int i = 0; i < 3; ++i)
    r = r + differentiate(f, chart.coords[i]) * x[i];
  return r;
}

FormField hodge3(const MetricField& g, const FormField& w, int orientation) {
  auto inv = metric_inverse(g);
  Expr det = metric_det(g);
  Expr sqrtg = Expr::call("sqrt", -det);  // Lorentzian: det < 0
  Expr s = Expr::number(orientation);

  switch (w.degree) {
    case 0: {
      FormField r(3, w.chart);
      r.comp[0b111] = s * sqrtg * w.comp[0];
      return r;
    }
    case 1: {
      // raise the index
      std::array<Expr, 3> up = sharp(g, w);
      FormField r(2, w.chart);
      for (int mu = 0; mu < 3; ++mu)
        for (int nu = mu + 1; nu < 3; ++nu) {
          Expr c = Expr::number(0);
          for (int a = 0; a < 3; ++a) {
            int e = eps3(a, mu, nu);
            if (e == 0) continue;
            c = c + Expr::number(e) * up[a];
          }
          r.comp[(1u << mu) | (1u << nu)] = s * sqrtg * c;
        }
      return r;
    }
    case 2: {
      // full antisymmetric component array, both indices raised
      std::array<std::array<Expr, 3>, 3> low;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) low[i][j] = Expr::number(0);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          Expr c = w.comp[(1u << i) | (1u << j)];
          low[i][j] = c;
          low[j][i] = -c;
        }
      std::array<std::array<Expr, 3>, 3> up;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          up[a][b] = Expr::number(0);
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d)
              up[a][b] = up[a][b] + inv[a][c] * inv[b][d] * low[c][d];
        }
      FormField r(1, w.chart);
      for (int mu = 0; mu < 3; ++mu) {
        Expr c = Expr::number(0);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            int e = eps3(a, b, mu);
            if (e == 0) continue;
            c = c + Expr::number(e) * up[a][b];
          }
        r.comp[1u << mu] = s * sqrtg * (Expr::number(0.5) * c);
      }
      return r;
    }
    case 3: {
      // *(w dx0^dx1^dx2) = s * w * sqrt|g| / det g = -s * w / sqrt|g|
      FormField r(0, w.chart);
      r.comp[0] = -(s * w.comp[0b111]) / sqrtg;
      return r;
    }
    default:
      throw StructuralError("hodge3 degree out of range");
  }
}

int coframe_orientation(const Coframe3& c, const std::vector<Env>& pts) {
  FormField vol = wedge(wedge(c.u, c.v), c.n);
  Expr coeff = vol.comp[0b111];
  int sign = 0;
  for (const Env& p : pts) {
    double val = evaluate(coeff, p);
    if (std::fabs(val) < 1e-12)
      throw DomainError("degenerate coframe volume at a sample point");
    int s = val > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (sign != s)
      throw DomainError("coframe orientation flips inside the box");
  }
  return sign == 0 ? +1 : sign;
}

double coframe_normalization_residual(const Coframe3& c,
                                      const std::vector<Env>& pts) {
  MetricField g = metric_from_coframe(c);
  auto us = sharp(g, c.u);
  auto vs = sharp(g, c.v);
  auto ns = sharp(g, c.n);
  Expr uu = pair_form_vector(c.u, us);
  Expr vv = pair_form_vector(c.v, vs);
  Expr uv = pair_form_vector(c.u, vs) - Expr::number(1);
  Expr nn = pair_form_vector(c.n, ns) - Expr::number(1);
  Expr un = pair_form_vector(c.u, ns);
  Expr vn = pair_form_vector(c.v, ns);
  double worst = 0;
  for (const Expr& e : {uu, vv, uv, nn, un, vn})
    worst = std::max(worst, max_residual(e, pts));
  return worst;
}

}  // namespace spintor
