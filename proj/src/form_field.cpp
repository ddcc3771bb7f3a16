#include "spintor/form_field.hpp"

namespace spintor {

FormField FormField::operator+(const FormField& o) const {
  if (degree != o.degree)
    throw StructuralError("adding forms of different degree");
  FormField r(degree, chart);
  for (int m = 0; m < 8; ++m) r.comp[m] = comp[m] + o.comp[m];
  return r;
}

FormField FormField::operator-(const FormField& o) const {
  if (degree != o.degree)
    throw StructuralError("subtracting forms of different degree");
  FormField r(degree, chart);
  for (int m = 0; m < 8; ++m) r.comp[m] = comp[m] - o.comp[m];
  return r;
}

FormField FormField::operator-() const {
  FormField r(degree, chart);
  for (int m = 0; m < 8; ++m) r.comp[m] = -comp[m];
  return r;
}

FormField scale(const Expr& f, const FormField& w) {
  FormField r(w.degree, w.chart);
  for (int m = 0; m < 8; ++m) r.comp[m] = f * w.comp[m];
  return r;
}

FormField wedge(const FormField& a, const FormField& b) {
  int k = a.degree + b.degree;
  if (k > 3) return FormField::zero(3, a.chart);  // identically zero
  FormField r(k, a.chart);
  for (int ma = 0; ma < 8; ++ma) {
    if (std::popcount(unsigned(ma)) != a.degree || a.comp[ma].is_zero_literal())
      continue;
    for (int mb = 0; mb < 8; ++mb) {
      if (std::popcount(unsigned(mb)) != b.degree ||
          b.comp[mb].is_zero_literal())
        continue;
      if (ma & mb) continue;
      Expr term = a.comp[ma] * b.comp[mb];
      if (reorder_sign(BladeMask(ma), BladeMask(mb)) < 0) term = -term;
      r.comp[ma | mb] = r.comp[ma | mb] + term;
    }
  }
  return r;
}

FormField exterior_d(const FormField& w) {
  if (w.degree == 3) return FormField::zero(3, w.chart);
  FormField r(w.degree + 1, w.chart);
  for (int m = 0; m < 8; ++m) {
    if (std::popcount(unsigned(m)) != w.degree || w.comp[m].is_zero_literal())
      continue;
    for (int i = 0; i < 3; ++i) {
      BladeMask di = BladeMask(1) << i;
      if (m & di) continue;
      Expr deriv = differentiate(w.comp[m], w.chart.coords[i]);
      if (deriv.is_zero_literal()) continue;
      if (reorder_sign(di, BladeMask(m)) < 0) deriv = -deriv;
      r.comp[di | m] = r.comp[di | m] + deriv;
    }
  }
  return r;
}

double form_max_residual(const FormField& w, const std::vector<Env>& pts) {
  double worst = 0;
  for (int m = 0; m < 8; ++m) {
    if (std::popcount(unsigned(m)) != w.degree) continue;
    worst = std::max(worst, max_residual(w.comp[m], pts));
  }
  return worst;
}

bool form_is_zero(const FormField& w, int n_points, std::mt19937_64& rng,
                  double tol) {
  auto pts = w.chart.sample_points(n_points, rng);
  return form_max_residual(w, pts) <= tol;
}

}  // namespace spintor
