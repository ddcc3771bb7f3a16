#pragma once

#include <string>

#include "spintor/errors.hpp"

namespace spintor {

// Signature (p, q) of a nondegenerate quadratic space with (p - q) = 1 mod 8.
// Generators e^1..e^p square to +1, e^{p+1}..e^d to -1, d = p + q odd.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0)
      throw StructuralError("signature counts must be non-negative");
    int diff = p - q;
    if (((diff % 8) + 8) % 8 != 1)
      throw StructuralError("signature (" + std::to_string(p) + "," +
                            std::to_string(q) + ") has (p-q) != 1 mod 8");
    if (dim() < 1 || dim() % 2 == 0)
      throw StructuralError("dimension must be odd and >= 1");
  }

  int dim() const { return p + q; }
  // k = (d-1)/2; 2^k is the spinor dimension and the truncation cutoff.
  int half_grade() const { return (dim() - 1) / 2; }

  // Metric square h*(e^i, e^i) of the i-th generator, i in [0, d).
  int metric(int i) const { return i < p ? 1 : -1; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const Signature& a, const Signature& b) {
    return !(a == b);
  }

  std::string str() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

}  // namespace spintor
