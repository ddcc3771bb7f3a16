#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "spintor/errors.hpp"

namespace spintor {

// Exact rational scalar on int64 with overflow-checked arithmetic.
// Every value is kept normalized: den > 0, gcd(num, den) == 1.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
               checked(i128(a.den_) * b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
               checked(i128(a.den_) * b.den_));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return Rat(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  double to_double() const { return double(num_) / double(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  static std::int64_t checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw DomainError("rational overflow (int64)");
    return std::int64_t(v);
  }

  void normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

// Scalar traits shared by the exact (Rat) and numeric (double) instantiations
// of the polyform algebra.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
  static bool is_zero(const Rat& x) { return x.is_zero(); }
  static Rat half() { return Rat(1, 2); }
  static double to_double(const Rat& x) { return x.to_double(); }
};

template <>
struct ScalarOps<double> {
  static bool is_zero(double x) { return x == 0.0; }
  static double half() { return 0.5; }
  static double to_double(double x) { return x; }
};

}  // namespace spintor
