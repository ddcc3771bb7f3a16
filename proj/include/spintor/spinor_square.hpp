#pragma once

#include <optional>
#include <random>
#include <vector>

#include "spintor/clifford_module.hpp"

namespace spintor {

using Spinor = std::vector<double>;

// Psi^< : truncated polyforms -> End(Sigma). Blades map to ordered products
// of generator matrices; unital algebra morphism onto End(Sigma).
Mat psi_less(const PolyformD& a, const PairedModule& m);

// Full Clifford action of a general polyform via a^< + l *tau(a^>).
Mat clifford_action(const PolyformD& a, const PairedModule& m);

// Inverse of Psi^< by the trace-coefficient formula.
PolyformD psi_less_inv(const Mat& e, const PairedModule& m);

// Square of a spinor: (Psi^<)^{-1}(mu xi (x) xi^*), xi^* = B(-, xi).
// Computed both as a matrix factorization and via the explicit
// pairing-coefficient expansion; the two are compared internally.
PolyformD square_spinor(const Spinor& xi, int mu, const PairedModule& m);

enum class SquareMode { FixedBeta, AllBeta };

// Semi-algebraic square conditions. In FixedBeta mode a beta with
// S(alpha v beta) != 0 must be supplied; AllBeta ranges over the monomial
// basis of the truncated algebra.
bool check_square_conditions(const PolyformD& alpha, const PairedModule& m,
                             SquareMode mode,
                             const std::optional<PolyformD>& beta = std::nullopt,
                             double tol = 1e-10);

// Recovers (xi, mu) with square_spinor(xi, mu) = alpha; xi is unique up to
// sign. alpha must pass the square conditions.
std::pair<Spinor, int> reconstruct_spinor(const PolyformD& alpha,
                                          const PairedModule& m);

// Spin_0 invariance of B: antisymmetry of bivector generators plus
// one-parameter exponential checks.
bool spin_invariance_check(const PairedModule& m, int trials,
                           std::mt19937_64& rng, double tol = 1e-12);

}  // namespace spintor
