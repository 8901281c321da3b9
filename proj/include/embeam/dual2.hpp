#pragma once

#include <array>
#include <cmath>

#include "embeam/types.hpp"

namespace embeam {

/// Second-order forward-mode dual number over N independent variables:
/// carries value, gradient, and Hessian through ordinary arithmetic. Used to
/// obtain exact element forces and tangents from scalar energy expressions.
template <int N>
struct Dual2 {
  using Grad = Eigen::Matrix<double, N, 1>;
  using Hess = Eigen::Matrix<double, N, N>;

  double val = 0.0;
  Grad grad = Grad::Zero();
  Hess hess = Hess::Zero();

  Dual2() = default;
  explicit Dual2(double v) : val(v) {}

  static Dual2 variable(double v, int index) {
    Dual2 d(v);
    d.grad(index) = 1.0;
    return d;
  }

  Dual2 operator-() const {
    Dual2 r(-val);
    r.grad = -grad;
    r.hess = -hess;
    return r;
  }

  Dual2& operator+=(const Dual2& o) {
    val += o.val;
    grad += o.grad;
    hess += o.hess;
    return *this;
  }
  Dual2& operator-=(const Dual2& o) {
    val -= o.val;
    grad -= o.grad;
    hess -= o.hess;
    return *this;
  }

  friend Dual2 operator+(Dual2 a, const Dual2& b) { return a += b; }
  friend Dual2 operator-(Dual2 a, const Dual2& b) { return a -= b; }

  friend Dual2 operator*(const Dual2& a, const Dual2& b) {
    Dual2 r(a.val * b.val);
    r.grad = a.grad * b.val + b.grad * a.val;
    r.hess = a.hess * b.val + b.hess * a.val + a.grad * b.grad.transpose() +
             b.grad * a.grad.transpose();
    return r;
  }

  friend Dual2 operator*(double c, Dual2 a) {
    a.val *= c;
    a.grad *= c;
    a.hess *= c;
    return a;
  }
  friend Dual2 operator*(const Dual2& a, double c) { return c * a; }

  friend Dual2 operator/(const Dual2& a, const Dual2& b) { return a * inverse(b); }
  friend Dual2 operator/(const Dual2& a, double c) { return (1.0 / c) * a; }

  friend Dual2 inverse(const Dual2& a) {
    const double iv = 1.0 / a.val;
    Dual2 r(iv);
    r.grad = -iv * iv * a.grad;
    r.hess = -iv * iv * a.hess + 2.0 * iv * iv * iv * a.grad * a.grad.transpose();
    return r;
  }

  friend Dual2 sqrt(const Dual2& a) {
    const double v = std::sqrt(a.val);
    Dual2 r(v);
    r.grad = a.grad / (2.0 * v);
    r.hess = a.hess / (2.0 * v) - a.grad * a.grad.transpose() / (4.0 * v * v * v);
    return r;
  }
};

/// 3-vector of dual numbers with the few operations the beam energy needs.
template <int N>
struct DualVec3 {
  std::array<Dual2<N>, 3> c;

  Dual2<N>& operator[](int i) { return c[i]; }
  const Dual2<N>& operator[](int i) const { return c[i]; }

  friend DualVec3 operator+(const DualVec3& a, const DualVec3& b) {
    DualVec3 r;
    for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }

  friend DualVec3 operator*(double s, const DualVec3& a) {
    DualVec3 r;
    for (int i = 0; i < 3; ++i) r.c[i] = s * a.c[i];
    return r;
  }

  friend Dual2<N> dot(const DualVec3& a, const DualVec3& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
  }

  friend DualVec3 cross(const DualVec3& a, const DualVec3& b) {
    DualVec3 r;
    r.c[0] = a.c[1] * b.c[2] - a.c[2] * b.c[1];
    r.c[1] = a.c[2] * b.c[0] - a.c[0] * b.c[2];
    r.c[2] = a.c[0] * b.c[1] - a.c[1] * b.c[0];
    return r;
  }
};

}  // namespace embeam
