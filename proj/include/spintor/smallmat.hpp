#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "spintor/errors.hpp"

namespace spintor {

// Dense square matrix of doubles, row-major. Sized for spinor modules
// (N <= 16), so everything here is straightforward O(N^3).
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(size_t(n) * n, 0.0) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int n() const { return n_; }
  double& operator()(int i, int j) { return a_[size_t(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        double v = x(i, k);
        if (v == 0.0) continue;
        for (int j = 0; j < x.n_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.n_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.n_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend Mat operator*(double s, const Mat& x) {
    Mat r(x.n_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
    return r;
  }

  Mat transposed() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  double trace() const {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double inf_norm() const {
    double m = 0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
  }

  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> r(n_, 0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * x[j];
    return r;
  }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

// Gauss-Jordan inverse with partial pivoting.
inline Mat inverse(const Mat& m) {
  int n = m.n();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
    if (std::fabs(a(piv, col)) < 1e-14)
      throw DomainError("singular matrix in inverse");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    double d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Matrix exponential by scaling-and-squaring on a Taylor series.
inline Mat expm(const Mat& m) {
  int n = m.n();
  double norm = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += std::fabs(m(i, j));
    norm = std::max(norm, row);
  }
  int s = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++s;
  }
  Mat x = std::ldexp(1.0, -s) * m;
  Mat term = Mat::identity(n);
  Mat sum = term;
  for (int k = 1; k <= 20; ++k) {
    term = (1.0 / k) * (term * x);
    sum = sum + term;
    if (term.inf_norm() < 1e-18) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(const Mat& m) {
  int n = m.n();
  Mat a = m;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-18) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  return ev;
}

}  // namespace spintor
