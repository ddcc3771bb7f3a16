#include "spintor/clifford_module.hpp"

#include <algorithm>
#include <cmath>

namespace spintor {

namespace {

// Tensor helpers on the three real 2x2 seeds: s1 = [[0,1],[1,0]],
// s3 = [[1,0],[0,-1]], is2 = [[0,1],[-1,0]].
Mat kron2(const double k[2][2], const Mat& m) {
  int n = m.n();
  Mat r(2 * n);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      if (k[bi][bj] == 0.0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          r(bi * n + i, bj * n + j) = k[bi][bj] * m(i, j);
    }
  return r;
}

const double S1[2][2] = {{0, 1}, {1, 0}};
const double S3[2][2] = {{1, 0}, {0, -1}};
const double IS2[2][2] = {{0, 1}, {-1, 0}};

// Octonion multiplication table for the imaginary units (Fano plane):
// e_i e_j = eps * e_k over the cycles below, e_i^2 = -1.
// Yields the 8x8 left-multiplication matrices realizing Cl(0,7).
std::vector<Mat> octonion_left_mults() {
  static const int cyc[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  // mult[i][j] = (sign, k) for e_i * e_j, indices 1..7.
  int sign[8][8] = {};
  int idx[8][8] = {};
  for (auto& c : cyc) {
    int a = c[0], b = c[1], cc = c[2];
    sign[a][b] = +1; idx[a][b] = cc;
    sign[b][cc] = +1; idx[b][cc] = a;
    sign[cc][a] = +1; idx[cc][a] = b;
    sign[b][a] = -1; idx[b][a] = cc;
    sign[cc][b] = -1; idx[cc][b] = a;
    sign[a][cc] = -1; idx[a][cc] = b;
  }
  std::vector<Mat> L;
  for (int i = 1; i <= 7; ++i) {
    Mat m(8);
    // e_i * 1 = e_i ; e_i * e_i = -1 ; e_i * e_j per the table.
    m(i, 0) = 1.0;
    m(0, i) = -1.0;
    for (int j = 1; j <= 7; ++j) {
      if (j == i) continue;
      m(idx[i][j], j) = double(sign[i][j]);
    }
    L.push_back(m);
  }
  return L;
}

void check_relations(const GammaRep& rep) {
  int d = rep.sig.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat anti = rep.gamma[i] * rep.gamma[j] + rep.gamma[j] * rep.gamma[i];
      double target = (i == j) ? 2.0 * rep.sig.metric(i) : 0.0;
      Mat expect = target * Mat::identity(rep.dim_spinor());
      if ((anti - expect).inf_norm() > 1e-12)
        throw StructuralError("gamma construction violates Clifford relations");
    }
}

int volume_sign(const std::vector<Mat>& gamma) {
  Mat v = gamma[0];
  for (size_t i = 1; i < gamma.size(); ++i) v = v * gamma[i];
  int n = v.n();
  if ((v - Mat::identity(n)).inf_norm() < 1e-12) return +1;
  if ((v + Mat::identity(n)).inf_norm() < 1e-12) return -1;
  throw StructuralError("volume image is not +-Id");
}

}  // namespace

Mat GammaRep::blade_matrix(BladeMask m) const {
  Mat r = Mat::identity(dim_spinor());
  for (int i = 0; i < sig.dim(); ++i)
    if (m & (BladeMask(1) << i)) r = r * gamma[i];
  return r;
}

GammaRep GammaRep::opposite() const {
  GammaRep r = *this;
  for (auto& g : r.gamma) g = -1.0 * g;
  r.l = -l;
  return r;
}

GammaRep build_gamma(Signature sig) {
  std::vector<Mat> gamma;       // in doubling order
  std::vector<int> metric;      // +-1 per generator, same order

  if (sig.p == sig.q + 1) {
    // (1,0) -> (2,1) -> ... -> (5,4): append sigma_3 (+) and i sigma_2 (-).
    gamma = {Mat::identity(1)};
    metric = {+1};
    int steps = sig.q;
    for (int s = 0; s < steps; ++s) {
      int n = gamma[0].n();
      std::vector<Mat> next;
      for (auto& g : gamma) next.push_back(kron2(S1, g));
      next.push_back(kron2(S3, Mat::identity(n)));
      next.push_back(kron2(IS2, Mat::identity(n)));
      std::vector<int> nm = metric;
      nm.push_back(+1);
      nm.push_back(-1);
      gamma = std::move(next);
      metric = std::move(nm);
    }
  } else if (sig.p == 0 && sig.q == 7) {
    gamma = octonion_left_mults();
    metric.assign(7, -1);
  } else if (sig.p == 9 && sig.q == 0) {
    // Cl(9,0) from Cl(0,7): two plus-generators and i sigma_2 x delta_j,
    // which squares to -delta_j^2 = +1.
    std::vector<Mat> delta = octonion_left_mults();
    gamma.push_back(kron2(S1, Mat::identity(8)));
    gamma.push_back(kron2(S3, Mat::identity(8)));
    for (auto& dmat : delta) gamma.push_back(kron2(IS2, dmat));
    metric.assign(9, +1);
  } else {
    throw StructuralError("unsupported signature " + sig.str() +
                          " for gamma construction");
  }

  // Reorder so that positive generators come first (basis convention).
  std::vector<Mat> ordered;
  for (size_t i = 0; i < gamma.size(); ++i)
    if (metric[i] > 0) ordered.push_back(gamma[i]);
  for (size_t i = 0; i < gamma.size(); ++i)
    if (metric[i] < 0) ordered.push_back(gamma[i]);

  GammaRep rep;
  rep.sig = sig;
  rep.gamma = std::move(ordered);
  check_relations(rep);
  rep.l = volume_sign(rep.gamma);
  return rep;
}

PairedModule build_pairing(const GammaRep& rep) {
  int d = rep.sig.dim();
  int n = rep.dim_spinor();

  // Average the standard inner product over the group generated by +-gamma_i.
  // The +- pair contributes the same Gram term, so summing over blade
  // subsets suffices.
  Mat P(n);
  int count = 0;
  for (BladeMask m = 0; m < (BladeMask(1) << d); ++m) {
    Mat a = rep.blade_matrix(m);
    P = P + a.transposed() * a;
    ++count;
  }
  P = (1.0 / count) * P;

  // Degenerate average cannot occur for a valid rep; guard anyway.
  for (int i = 0; i < n; ++i)
    if (P(i, i) <= 0) throw StructuralError("degenerate averaged product");

  // nu_+ = product of the positive generators; for q = 0 this is the volume.
  Mat nu_plus = Mat::identity(n);
  for (int i = 0; i < rep.sig.p; ++i) nu_plus = nu_plus * rep.gamma[i];

  PairedModule pm;
  pm.rep = rep;
  pm.B = nu_plus.transposed() * P;

  // Empirical symmetry type.
  double sym = (pm.B.transposed() - pm.B).inf_norm();
  double skew = (pm.B.transposed() + pm.B).inf_norm();
  if (sym < 1e-12)
    pm.s = +1;
  else if (skew < 1e-12)
    pm.s = -1;
  else
    throw StructuralError("pairing is neither symmetric nor skew");

  // Empirical adjoint type from gamma_i^T B = +- B gamma_i.
  double pos = 0, neg = 0;
  for (int i = 0; i < d; ++i) {
    Mat lhs = rep.gamma[i].transposed() * pm.B;
    Mat r = pm.B * rep.gamma[i];
    pos = std::max(pos, (lhs - r).inf_norm());
    neg = std::max(neg, (lhs + r).inf_norm());
  }
  if (pos < 1e-12)
    pm.sigma = +1;
  else if (neg < 1e-12)
    pm.sigma = -1;
  else
    throw StructuralError("pairing has no definite adjoint type");

  auto [ts, tsigma] = pairing_table(d);
  if (ts != pm.s || tsigma != pm.sigma)
    throw StructuralError("pairing types disagree with the d mod 8 table");
  return pm;
}

}  // namespace spintor
