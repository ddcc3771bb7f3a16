#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "spintor/rational.hpp"
#include "spintor/signature.hpp"

namespace spintor {

using BladeMask = std::uint32_t;

// Sign label l distinguishing the two halves Cl_+ / Cl_- of the algebra.
struct SignLabel {
  int l = +1;
  explicit SignLabel(int v) : l(v) {
    if (v != 1 && v != -1) throw StructuralError("sign label must be +1 or -1");
  }
};

// Reordering sign from multiplying basis blades a and b: counts transpositions
// needed to merge the two ascending index lists (parity of inversions).
inline int reorder_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// Metric contraction factor over the shared generators of a and b.
inline int metric_sign(BladeMask shared, const Signature& sig) {
  int s = 1;
  while (shared != 0) {
    int i = std::countr_zero(shared);
    s *= sig.metric(i);
    shared &= shared - 1;
  }
  return s;
}

// Element of the exterior algebra over a signed orthonormal basis, stored
// as sparse blade-mask -> coefficient. Bit i of a mask selects e^{i+1}.
// Instantiated with Rat (exact) and double (numeric).
template <class S>
class PolyformT {
 public:
  using Coeffs = std::map<BladeMask, S>;

  PolyformT() = default;
  explicit PolyformT(Signature sig) : sig_(sig) {}

  static PolyformT scalar(Signature sig, const S& c) {
    PolyformT r(sig);
    r.set(0, c);
    return r;
  }
  static PolyformT blade(Signature sig, BladeMask m, const S& c) {
    PolyformT r(sig);
    if (m >= (BladeMask(1) << sig.dim()))
      throw StructuralError("blade mask outside basis");
    r.set(m, c);
    return r;
  }
  static PolyformT generator(Signature sig, int i) {
    if (i < 1 || i > sig.dim())
      throw StructuralError("generator index out of range");
    return blade(sig, BladeMask(1) << (i - 1), S(1));
  }
  static PolyformT volume(Signature sig) {
    return blade(sig, (BladeMask(1) << sig.dim()) - 1, S(1));
  }

  const Signature& signature() const { return sig_; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  S coeff(BladeMask m) const {
    auto it = c_.find(m);
    return it == c_.end() ? S(0) : it->second;
  }
  void set(BladeMask m, const S& v) {
    if (ScalarOps<S>::is_zero(v))
      c_.erase(m);
    else
      c_[m] = v;
  }
  void add(BladeMask m, const S& v) {
    auto it = c_.find(m);
    if (it == c_.end()) {
      if (!ScalarOps<S>::is_zero(v)) c_[m] = v;
    } else {
      it->second += v;
      if (ScalarOps<S>::is_zero(it->second)) c_.erase(it);
    }
  }

  int max_grade() const {
    int g = 0;
    for (auto& [m, v] : c_) g = std::max(g, std::popcount(m));
    return g;
  }
  bool truncated() const { return max_grade() <= sig_.half_grade(); }

  PolyformT grade(int k) const {
    PolyformT r(sig_);
    for (auto& [m, v] : c_)
      if (std::popcount(m) == k) r.set(m, v);
    return r;
  }

  friend PolyformT operator+(const PolyformT& a, const PolyformT& b) {
    a.require_same(b);
    PolyformT r = a;
    for (auto& [m, v] : b.c_) r.add(m, v);
    return r;
  }
  friend PolyformT operator-(const PolyformT& a, const PolyformT& b) {
    a.require_same(b);
    PolyformT r = a;
    for (auto& [m, v] : b.c_) r.add(m, -v);
    return r;
  }
  PolyformT operator-() const {
    PolyformT r(sig_);
    for (auto& [m, v] : c_) r.set(m, -v);
    return r;
  }
  friend PolyformT operator*(const S& s, const PolyformT& a) {
    PolyformT r(a.sig_);
    for (auto& [m, v] : a.c_) r.set(m, s * v);
    return r;
  }

  friend bool operator==(const PolyformT& a, const PolyformT& b) {
    return a.sig_ == b.sig_ && a.c_ == b.c_;
  }

  void require_same(const PolyformT& o) const {
    if (sig_ != o.sig_)
      throw StructuralError("polyforms over different signatures");
  }

  double inf_norm() const {
    double m = 0;
    for (auto& [k, v] : c_) {
      double a = ScalarOps<S>::to_double(v);
      m = std::max(m, a < 0 ? -a : a);
    }
    return m;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, v] : c_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << ScalarOps<S>::to_double(v) << ")";
      BladeMask mm = m;
      while (mm != 0) {
        int i = std::countr_zero(mm);
        os << " e" << (i + 1);
        mm &= mm - 1;
      }
    }
    return os.str();
  }

 private:
  Signature sig_;
  Coeffs c_;
};

// --- geometric product and friends ------------------------------------

template <class S>
PolyformT<S> geometric_product(const PolyformT<S>& a, const PolyformT<S>& b) {
  a.require_same(b);
  PolyformT<S> r(a.signature());
  for (auto& [ma, va] : a.coeffs()) {
    for (auto& [mb, vb] : b.coeffs()) {
      int sign = reorder_sign(ma, mb) * metric_sign(ma & mb, a.signature());
      S c = va * vb;
      if (sign < 0) c = -c;
      r.add(ma ^ mb, c);
    }
  }
  return r;
}

template <class S>
PolyformT<S> wedge(const PolyformT<S>& a, const PolyformT<S>& b) {
  a.require_same(b);
  PolyformT<S> r(a.signature());
  for (auto& [ma, va] : a.coeffs()) {
    for (auto& [mb, vb] : b.coeffs()) {
      if ((ma & mb) != 0) continue;
      S c = va * vb;
      if (reorder_sign(ma, mb) < 0) c = -c;
      r.add(ma | mb, c);
    }
  }
  return r;
}

// Grade automorphism: -1 on each generator, (-1)^k on grade k.
template <class S>
PolyformT<S> pi_aut(const PolyformT<S>& a) {
  PolyformT<S> r(a.signature());
  for (auto& [m, v] : a.coeffs())
    r.set(m, (std::popcount(m) & 1) ? -v : v);
  return r;
}

// Reversal anti-automorphism: (-1)^{k(k-1)/2} on grade k.
template <class S>
PolyformT<S> tau_antiaut(const PolyformT<S>& a) {
  PolyformT<S> r(a.signature());
  for (auto& [m, v] : a.coeffs()) {
    int k = std::popcount(m);
    r.set(m, ((k * (k - 1) / 2) & 1) ? -v : v);
  }
  return r;
}

// Hodge dual, pinned by the identity  a <> nu = *tau(a)  (so *a = tau(a) <> nu).
template <class S>
PolyformT<S> hodge_star(const PolyformT<S>& a) {
  return geometric_product(tau_antiaut(a), PolyformT<S>::volume(a.signature()));
}

// e_l = (1 + l nu)/2, the unit of the half-algebra.
template <class S>
PolyformT<S> half_unit(Signature sig, SignLabel l) {
  PolyformT<S> r = PolyformT<S>::scalar(sig, ScalarOps<S>::half());
  S c = ScalarOps<S>::half();
  if (l.l < 0) c = -c;
  r.add((BladeMask(1) << sig.dim()) - 1, c);
  return r;
}

// P_l(a) = e_l <> a. Idempotent; P_+ + P_- = id; image satisfies nu <> x = l x.
template <class S>
PolyformT<S> project_half(SignLabel l, const PolyformT<S>& a) {
  return geometric_product(half_unit<S>(a.signature(), l), a);
}

// P_<: keep grades 0..(d-1)/2.
template <class S>
PolyformT<S> truncate(const PolyformT<S>& a) {
  PolyformT<S> r(a.signature());
  int cut = a.signature().half_grade();
  for (auto& [m, v] : a.coeffs())
    if (std::popcount(m) <= cut) r.set(m, v);
  return r;
}

// Truncated product  a v b = 2 P_<(P_l(a <> b))  on grades <= (d-1)/2.
template <class S>
PolyformT<S> vee_product(const PolyformT<S>& a, const PolyformT<S>& b,
                         SignLabel l = SignLabel(+1)) {
  if (!a.truncated() || !b.truncated())
    throw StructuralError("vee product requires truncated polyforms");
  PolyformT<S> p = truncate(project_half(l, geometric_product(a, b)));
  return (S(2)) * p;
}

// Truncated Kahler-Atiyah trace S_l(a) = 2^{(d-1)/2} a^(0).
template <class S>
S trace_S(const PolyformT<S>& a) {
  if (!a.truncated())
    throw StructuralError("trace requires a truncated polyform");
  S r = a.coeff(0);
  for (int i = 0; i < a.signature().half_grade(); ++i) r = S(2) * r;
  return r;
}

// B-transpose transported to polyforms: tau, then pi iff sigma = -1.
template <class S>
PolyformT<S> transpose_pf(const PolyformT<S>& a, int sigma) {
  if (sigma != 1 && sigma != -1)
    throw StructuralError("adjoint type must be +1 or -1");
  PolyformT<S> r = tau_antiaut(a);
  if (sigma == -1) r = pi_aut(r);
  return r;
}

// h*(alpha, beta) for grade-1 polyforms.
template <class S>
S metric_pairing(const PolyformT<S>& a, const PolyformT<S>& b) {
  a.require_same(b);
  S r(0);
  for (int i = 0; i < a.signature().dim(); ++i) {
    BladeMask m = BladeMask(1) << i;
    S c = a.coeff(m) * b.coeff(m);
    if (a.signature().metric(i) < 0) c = -c;
    r += c;
  }
  return r;
}

using Polyform = PolyformT<Rat>;
using PolyformD = PolyformT<double>;

}  // namespace spintor
