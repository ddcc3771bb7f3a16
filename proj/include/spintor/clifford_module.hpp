#pragma once

#include <vector>

#include "spintor/polyform.hpp"
#include "spintor/smallmat.hpp"

namespace spintor {

// Concrete real irreducible Clifford module: d gamma matrices of size
// N = 2^{(d-1)/2} with gamma_i gamma_j + gamma_j gamma_i = 2 h*(e^i,e^j) Id
// and gamma_1 ... gamma_d = l Id.
struct GammaRep {
  Signature sig;
  std::vector<Mat> gamma;
  int l = +1;

  int dim_spinor() const { return gamma.empty() ? 1 : gamma[0].n(); }

  // gamma_i^{-1} = h_ii gamma_i for orthonormal generators.
  Mat gamma_inv(int i) const {
    return sig.metric(i) > 0 ? gamma[i] : -1.0 * gamma[i];
  }

  // Image of a basis blade: ordered product of generator matrices.
  Mat blade_matrix(BladeMask m) const;

  // The module with the opposite volume sign: every generator negated.
  GammaRep opposite() const;
};

// Builds the doubling-chain representation (verified post hoc). Supports all
// signatures with (p-q) = 1 mod 8 and d <= 9 except (1,8).
GammaRep build_gamma(Signature sig);

// Irreducible paired Clifford module: rep + admissible pairing B with
// symmetry type s (B^t = sB) and adjoint type sigma.
struct PairedModule {
  GammaRep rep;
  Mat B;
  int s = +1;
  int sigma = +1;

  int dim_spinor() const { return rep.dim_spinor(); }
};

// Group-averaged construction of the admissible pairing: average the Gram
// matrix over the finite group generated by +-gamma_i, then compose with
// gamma(nu_+). The empirical (s, sigma) is verified against the k mod 4 table.
PairedModule build_pairing(const GammaRep& rep);

// Expected (symmetry, adjoint) types for k = (d-1)/2 mod 4.
inline std::pair<int, int> pairing_table(int d) {
  switch (((d - 1) / 2) % 4) {
    case 0: return {+1, +1};
    case 1: return {-1, -1};
    case 2: return {-1, +1};
    default: return {+1, -1};
  }
}

}  // namespace spintor
