#pragma once

#include "spintor/form_field.hpp"

namespace spintor {

// Symmetric metric components g_ij over a chart.
struct MetricField {
  std::array<std::array<Expr, 3>, 3> g;
  Chart chart;

  MetricField() = default;
  explicit MetricField(Chart c) : chart(std::move(c)) {
    for (auto& row : g)
      for (auto& e : row) e = Expr::number(0);
  }
};

// General (not necessarily symmetric) bilinear components over a chart.
struct BilinearField {
  std::array<std::array<Expr, 3>, 3> t;
  Chart chart;

  BilinearField() = default;
  explicit BilinearField(Chart c) : chart(std::move(c)) {
    for (auto& row : t)
      for (auto& e : row) e = Expr::number(0);
  }

  BilinearField operator-(const BilinearField& o) const {
    BilinearField r(chart);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.t[i][j] = t[i][j] - o.t[i][j];
    return r;
  }
  BilinearField operator+(const BilinearField& o) const {
    BilinearField r(chart);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.t[i][j] = t[i][j] + o.t[i][j];
    return r;
  }
};

double bilinear_max_residual(const BilinearField& b,
                             const std::vector<Env>& pts);

// Null coframe (u, v, n): u, v isotropic with g(u#, v#) = 1, n unit
// spacelike, g = u (.) v + n (x) n.
struct Coframe3 {
  FormField u, v, n;
  Chart chart;

  Coframe3() = default;
  Coframe3(FormField u_, FormField v_, FormField n_);
};

MetricField metric_from_coframe(const Coframe3& c);

Expr metric_det(const MetricField& g);
std::array<std::array<Expr, 3>, 3> metric_inverse(const MetricField& g);

// Metric dual vector components of a one-form: X^i = g^{ij} w_j.
std::array<Expr, 3> sharp(const MetricField& g, const FormField& w);

// Pairing of a one-form with vector components.
Expr pair_form_vector(const FormField& w, const std::array<Expr, 3>& x);

// Directional derivative df(X) of a scalar along vector components.
Expr directional(const Expr& f, const std::array<Expr, 3>& x,
                 const Chart& chart);

// Lorentzian Hodge star on the chart. orientation = +1 when the coordinate
// order is positively oriented (volume form  +sqrt(-det g) dx0^dx1^dx2).
FormField hodge3(const MetricField& g, const FormField& w,
                 int orientation = +1);

// Orientation sign of the coordinate system relative to a positively
// oriented coframe (u, v, n): sign of the u^v^n coefficient. Must be
// constant over the sample points.
int coframe_orientation(const Coframe3& c, const std::vector<Env>& pts);

// Numerical sanity check of the null-coframe normalizations
// g(u#,u#) = g(v#,v#) = 0, g(u#,v#) = g(n#,n#) = 1 at the sample points.
double coframe_normalization_residual(const Coframe3& c,
                                      const std::vector<Env>& pts);

}  // namespace spintor
