#pragma once

#include "spintor/coframe.hpp"

namespace spintor {

// Coordinate Levi-Civita data computed symbolically from the metric;
// independent oracle against the coframe curvature formulas.
struct LeviCivita {
  // gamma[k][i][j] = Gamma^k_{ij}
  std::array<std::array<std::array<Expr, 3>, 3>, 3> gamma;
  std::array<std::array<Expr, 3>, 3> inv;
  Chart chart;
};

LeviCivita christoffel_symbols(const MetricField& g);

// Ricci tensor and scalar curvature by the standard coordinate formulas.
std::pair<BilinearField, Expr> christoffel_curvature(const MetricField& g);

// Covariant derivative of a one-form: (nabla w)_{ij} = d_i w_j - Gamma^k_ij w_k.
BilinearField covariant_derivative_one_form(const LeviCivita& lc,
                                            const FormField& w);

// Covariant Hessian of a scalar.
BilinearField hessian(const LeviCivita& lc, const Expr& f);

// Metric codifferential of a one-form: -g^{ij} (nabla_i w)_j.
Expr codifferential(const LeviCivita& lc, const FormField& w);

// |w|^2_g for a one-form.
Expr norm_squared(const MetricField& g, const FormField& w);

}  // namespace spintor
