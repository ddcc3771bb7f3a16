#pragma once

#include "spintor/lorentz_systems.hpp"

namespace spintor {

// Chart-level NS-NS data: metric through a null coframe, flux function f_b
// (H_b = -2 f_b nu_g), and dilaton phi.
struct NSNSConfig {
  Coframe3 coframe;
  Expr f_b;
  Expr phi;

  const Chart& chart() const { return coframe.chart; }
};

// Supersymmetric-solution data: configuration plus the function K and the
// free kappa(v#) component (K = 2 f_b kappa(v#)).
struct SusyData {
  NSNSConfig config;
  Expr K;
  Expr kappa_v_free;
};

// Residuals of the three-dimensional NS-NS system:
//   Ric + Hess(phi) + 2 f_b^2 g = 0 ,  d f_b = f_b dphi ,
//   codiff(dphi) + |dphi|^2 + 4 f_b^2 = 0.
Report nsns_residuals(const NSNSConfig& cfg, const CheckOptions& opt);

// Supersymmetric-configuration conditions: nabla u = f_b *u and
// dphi = c u + 2 f_b n with c extracted by pairing dphi with v#.
Report susy_config_residuals(const NSNSConfig& cfg, const CheckOptions& opt);

// Full supersymmetric-solution system: the three exterior equations, the
// K equation, d f_b(n) = 2 f_b^2, and chart-level closedness of
// c_b^v u + 2 f_b n. Requires flux mode (f_b nowhere zero on the box).
Report susy_solution_residuals(const SusyData& sd, const CheckOptions& opt);

// The closed-form local solution family generated by (a(x_u), l(x_u)).
struct GeneratedSolution {
  SusyData data;
  FormField b_field;  // chart potential with d b = H_b = -2 f_b nu_g
  Report report;
};
GeneratedSolution generate_local_solution(const Expr& a, const Expr& l,
                                          const Chart& chart,
                                          const CheckOptions& opt);

// Scalar consequences of the Einstein equation on susy configurations:
//   d f_b(v) = c f_b ,  d f_b(n) = 2 f_b^2 ,  d c(v) = l + f_b kappa(v).
Report ddf_check(const SusyData& sd, const CheckOptions& opt);

// Flux dichotomy: f_b either vanishes identically or nowhere.
Report flux_dichotomy_check(const NSNSConfig& cfg, const CheckOptions& opt);

// kappa assembled from susy data:
//   kappa = K/(2 f_b) u + (u(c_b^v)/(2 f_b) - f_b) v + n(c_b^v)/(2 f_b) n.
FormField susy_kappa(const SusyData& sd);

}  // namespace spintor
