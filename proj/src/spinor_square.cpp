#include "spintor/spinor_square.hpp"

#include <cmath>

namespace spintor {

namespace {

// Monomial basis masks of the truncated algebra, grade <= (d-1)/2.
std::vector<BladeMask> truncated_basis(const Signature& sig) {
  std::vector<BladeMask> basis;
  int cut = sig.half_grade();
  for (BladeMask m = 0; m < (BladeMask(1) << sig.dim()); ++m)
    if (std::popcount(m) <= cut) basis.push_back(m);
  return basis;
}

// Product gamma(e^{i_k})^{-1} ... gamma(e^{i_1})^{-1} for i_1 < ... < i_k.
Mat blade_inverse_product(BladeMask m, const GammaRep& rep) {
  Mat r = Mat::identity(rep.dim_spinor());
  for (int i = rep.sig.dim() - 1; i >= 0; --i)
    if (m & (BladeMask(1) << i)) r = r * rep.gamma_inv(i);
  return r;
}

double polyform_distance(const PolyformD& a, const PolyformD& b) {
  return (a - b).inf_norm();
}

}  // namespace

Mat psi_less(const PolyformD& a, const PairedModule& m) {
  if (!a.truncated())
    throw StructuralError("psi_less requires a truncated polyform");
  int n = m.dim_spinor();
  Mat r(n);
  for (auto& [mask, c] : a.coeffs()) r = r + c * m.rep.blade_matrix(mask);
  return r;
}

Mat clifford_action(const PolyformD& a, const PairedModule& m) {
  PolyformD lower = truncate(a);
  PolyformD upper = a - lower;
  PolyformD reduced = lower;
  if (!upper.is_zero()) {
    PolyformD dual = hodge_star(tau_antiaut(upper));
    reduced = lower + (m.rep.l < 0 ? -dual : dual);
  }
  return psi_less(reduced, m);
}

PolyformD psi_less_inv(const Mat& e, const PairedModule& m) {
  const Signature& sig = m.rep.sig;
  double n = double(m.dim_spinor());
  PolyformD r(sig);
  for (BladeMask mask : truncated_basis(sig)) {
    double c = (blade_inverse_product(mask, m.rep) * e).trace() / n;
    if (c != 0.0) r.set(mask, c);
  }
  return r;
}

PolyformD square_spinor(const Spinor& xi, int mu, const PairedModule& m) {
  int n = m.dim_spinor();
  if (int(xi.size()) != n)
    throw StructuralError("spinor has wrong dimension");

  // Matrix route: E = mu xi (B xi)^T, then pull back through Psi^<.
  std::vector<double> bxi = m.B.apply(xi);
  Mat e(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e(i, j) = mu * xi[i] * bxi[j];
  PolyformD alpha = psi_less_inv(e, m);

  // Expansion route: coefficients mu B(gamma_{i_k}^{-1}...gamma_{i_1}^{-1} xi, xi) / N.
  PolyformD expansion(m.rep.sig);
  for (BladeMask mask : truncated_basis(m.rep.sig)) {
    std::vector<double> w = blade_inverse_product(mask, m.rep).apply(xi);
    double c = 0;
    for (int i = 0; i < n; ++i) c += w[i] * bxi[i];
    c *= double(mu) / n;
    if (c != 0.0) expansion.set(mask, c);
  }

  double scale = std::max(1.0, alpha.inf_norm());
  if (polyform_distance(alpha, expansion) > 1e-10 * scale)
    throw ContractError("spinor square: matrix and expansion routes disagree");
  return alpha;
}

bool check_square_conditions(const PolyformD& alpha, const PairedModule& m,
                             SquareMode mode,
                             const std::optional<PolyformD>& beta, double tol) {
  if (!alpha.truncated())
    throw StructuralError("square conditions require a truncated polyform");
  SignLabel l(m.rep.l);
  double scale = std::max(1.0, alpha.inf_norm());
  double bound = tol * scale;

  // Symmetry constraint (pi^{(1-sigma)/2} o tau)(alpha) = s alpha.
  PolyformD t = transpose_pf(alpha, m.sigma);
  PolyformD target = m.s < 0 ? -alpha : alpha;
  if (polyform_distance(t, target) > bound) return false;

  auto rank_one_against = [&](const PolyformD& b) {
    PolyformD ab = vee_product(alpha, b, l);
    PolyformD lhs = vee_product(ab, alpha, l);
    PolyformD rhs = trace_S(ab) * alpha;
    double sc = std::max({1.0, lhs.inf_norm(), rhs.inf_norm()});
    return polyform_distance(lhs, rhs) <= tol * sc;
  };

  if (mode == SquareMode::FixedBeta) {
    if (!beta)
      throw ContractError("fixed_beta mode requires a beta polyform");
    PolyformD ab = vee_product(alpha, *beta, l);
    if (std::fabs(trace_S(ab)) <= bound)
      throw ContractError("beta must satisfy S(alpha v beta) != 0");
    PolyformD sq = vee_product(alpha, alpha, l);
    PolyformD rhs = trace_S(alpha) * alpha;
    double sc = std::max({1.0, sq.inf_norm(), rhs.inf_norm()});
    if (polyform_distance(sq, rhs) > tol * sc) return false;
    return rank_one_against(*beta);
  }

  for (BladeMask mask : truncated_basis(m.rep.sig)) {
    PolyformD b = PolyformD::blade(m.rep.sig, mask, 1.0);
    if (!rank_one_against(b)) return false;
  }
  return true;
}

std::pair<Spinor, int> reconstruct_spinor(const PolyformD& alpha,
                                          const PairedModule& m) {
  int n = m.dim_spinor();
  if (alpha.is_zero()) return {Spinor(n, 0.0), +1};
  if (!check_square_conditions(alpha, m, SquareMode::AllBeta))
    throw ContractError("polyform fails the square conditions");

  Mat e = psi_less(alpha, m);

  // E = mu xi (B xi)^T is rank one: its largest column is proportional to xi.
  int best = 0;
  double bestnorm = -1;
  for (int j = 0; j < n; ++j) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += e(i, j) * e(i, j);
    if (s > bestnorm) {
      bestnorm = s;
      best = j;
    }
  }
  Spinor dir(n);
  double len = std::sqrt(bestnorm);
  if (len < 1e-300) throw ContractError("degenerate square matrix");
  for (int i = 0; i < n; ++i) dir[i] = e(i, best) / len;

  // E = (mu t^2) dir (B dir)^T. The largest entry fixes mu and the scale t.
  std::vector<double> bdir = m.B.apply(dir);
  double num = 0, den = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double mij = dir[i] * bdir[j];
      if (std::fabs(mij) > std::fabs(den)) {
        den = mij;
        num = e(i, j);
      }
    }
  double ratio = num / den;
  int mu = ratio >= 0 ? +1 : -1;
  double t = std::sqrt(std::fabs(ratio));
  Spinor xi(n);
  for (int i = 0; i < n; ++i) xi[i] = t * dir[i];

  // Canonical sign: first nonzero component positive.
  for (int i = 0; i < n; ++i) {
    if (std::fabs(xi[i]) > 1e-14 * (1 + t)) {
      if (xi[i] < 0)
        for (auto& v : xi) v = -v;
      break;
    }
  }

  PolyformD back = square_spinor(xi, mu, m);
  double scale = std::max(1.0, alpha.inf_norm());
  if ((back - alpha).inf_norm() > 1e-8 * scale)
    throw ContractError("reconstruction round trip failed");
  return {xi, mu};
}

bool spin_invariance_check(const PairedModule& m, int trials,
                           std::mt19937_64& rng, double tol) {
  const Signature& sig = m.rep.sig;
  int n = m.dim_spinor();
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  auto random_unit_pair = [&](int offset, int count, Mat& g1, Mat& g2) {
    // Orthonormal pair inside the +definite or -definite subspace.
    std::vector<double> x(count), y(count);
    double nx = 0;
    do {
      nx = 0;
      for (int i = 0; i < count; ++i) {
        x[i] = unit(rng);
        nx += x[i] * x[i];
      }
    } while (nx < 1e-4);
    nx = std::sqrt(nx);
    for (auto& v : x) v /= nx;
    double dot, ny;
    do {
      dot = 0;
      for (int i = 0; i < count; ++i) {
        y[i] = unit(rng);
        dot += x[i] * y[i];
      }
      ny = 0;
      for (int i = 0; i < count; ++i) {
        y[i] -= dot * x[i];
        ny += y[i] * y[i];
      }
    } while (ny < 1e-4);
    ny = std::sqrt(ny);
    for (auto& v : y) v /= ny;
    g1 = Mat(n);
    g2 = Mat(n);
    for (int i = 0; i < count; ++i) {
      g1 = g1 + x[i] * m.rep.gamma[offset + i];
      g2 = g2 + y[i] * m.rep.gamma[offset + i];
    }
  };

  for (int t = 0; t < trials; ++t) {
    bool use_neg = sig.q >= 2 && (sig.p < 2 || (t & 1));
    Mat g1(n), g2(n);
    if (use_neg)
      random_unit_pair(sig.p, sig.q, g1, g2);
    else if (sig.p >= 2)
      random_unit_pair(0, sig.p, g1, g2);
    else
      return true;  // no equal-type pair available (d = 1)

    Mat gen = g1 * g2;
    if ((gen.transposed() * m.B + m.B * gen).inf_norm() > tol * 10) return false;
    for (double s : {0.1, 0.5, 1.0}) {
      Mat r = expm(s * gen);
      if ((r.transposed() * m.B * r - m.B).inf_norm() > tol) return false;
    }
  }
  return true;
}

}  // namespace spintor
