#pragma once

#include "spintor/christoffel.hpp"
#include "spintor/report.hpp"

namespace spintor {

// Shared tolerances for chart-level residual checks.
struct CheckOptions {
  int n_points = 100;
  double tol = 1e-8;
  std::uint64_t seed = 1;
};

// Expansion of a 2-form in the coframe basis: w = A u^v + B u^n + C v^n.
struct TwoFormCoframe {
  Expr A, B, C;
};
TwoFormCoframe expand_two_form(const FormField& w, const Coframe3& c,
                               const MetricField& g);

// Exterior skew-torsion system:
//   du/2 = f *u ,  dv = (f v + kappa)^n ,  dn = u^(f v + kappa).
Report check_exterior_system(const Coframe3& c, const Expr& f,
                             const FormField& kappa, const CheckOptions& opt);

// Connection one-form solved from the exterior system: v- and n-coframe
// components from dn, u-component (= kappa(v#)) from dv unless supplied.
struct KappaSolve {
  FormField kappa;
  Expr coeff_u;  // coefficient of u, equals kappa(v#)
  Expr coeff_v;  // coefficient of v, equals kappa(u#)
  Expr coeff_n;  // coefficient of n, equals kappa(n#)
  Report consistency;
};
KappaSolve solve_kappa(const Coframe3& c, const Expr& f,
                       const CheckOptions& opt,
                       const std::optional<Expr>& free_v = std::nullopt);

// Integrability conditions obtained from d of the exterior system.
Report integrability_check(const Coframe3& c, const Expr& f,
                           const FormField& kappa, const CheckOptions& opt);

// u^n coefficient of d(kappa) in the coframe basis.
Expr dkappa_l(const Coframe3& c, const Expr& f, const FormField& kappa);

// Ricci tensor of a skew-torsion coframe from the closed-form expression;
// valid when the exterior system holds.
BilinearField ricci_from_formula(const Coframe3& c, const Expr& f,
                                 const FormField& kappa);
Expr scalar_curvature_formula(const Coframe3& c, const Expr& f);

// Coframe gauge action F.(u,v,n) and the induced kappa transformation.
struct TorsorResult {
  Coframe3 coframe;
  FormField kappa;
};
TorsorResult torsor_act(const Expr& F, const Coframe3& c, const Expr& f,
                        const FormField& kappa);

// Residual of  nabla^g u = theta (x) u + *_g (u ^ chi_w)  via the
// Christoffel oracle. Covers parallel / Killing / recurrent / skew cases.
Report differential_spinor_check(const MetricField& g, const FormField& u,
                                 const FormField& theta,
                                 const BilinearField& chi, int orientation,
                                 const CheckOptions& opt);

// Godbillon-Vey representative 4 f n ^ d(f n).
FormField godbillon_vey_rep(const Coframe3& c, const Expr& f,
                            const FormField& kappa);

// kappa(u#) + dF(u#) + f; zero iff the flow of u preserves the gauged coframe.
Expr equicontinuity_residual(const Coframe3& c, const Expr& f,
                             const FormField& kappa, const Expr& F);

// df(n#) + f^2; zero iff the leaves of ker u carry the induced affine
// structure.
Expr leaf_curvature_coeff(const Coframe3& c, const Expr& f);

}  // namespace spintor
