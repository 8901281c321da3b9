#include "embeam/shape_functions.hpp"

#include "embeam/errors.hpp"

namespace embeam {

const std::array<Vec3, 8>& hex8_corners() {
  static const std::array<Vec3, 8> corners = {
      Vec3(-1, -1, -1), Vec3(1, -1, -1), Vec3(1, 1, -1), Vec3(-1, 1, -1),
      Vec3(-1, -1, 1),  Vec3(1, -1, 1),  Vec3(1, 1, 1),  Vec3(-1, 1, 1)};
  return corners;
}

Hex8Shape hex8_shape(const Vec3& xi) {
  Hex8Shape shape;
  const auto& corners = hex8_corners();
  for (int a = 0; a < 8; ++a) {
    const Vec3& c = corners[a];
    const double fx = 1.0 + c.x() * xi.x();
    const double fy = 1.0 + c.y() * xi.y();
    const double fz = 1.0 + c.z() * xi.z();
    shape.value[a] = 0.125 * fx * fy * fz;
    shape.grad_xi[a] = 0.125 * Vec3(c.x() * fy * fz, fx * c.y() * fz, fx * fy * c.z());
  }
  return shape;
}

HermiteBasis hermite_basis(double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  HermiteBasis b;
  b.value = {1.0 - 3.0 * t2 + 2.0 * t3, t - 2.0 * t2 + t3, 3.0 * t2 - 2.0 * t3, -t2 + t3};
  b.d_dt = {-6.0 * t + 6.0 * t2, 1.0 - 4.0 * t + 3.0 * t2, 6.0 * t - 6.0 * t2, -2.0 * t + 3.0 * t2};
  b.d2_dt2 = {-6.0 + 12.0 * t, -4.0 + 6.0 * t, 6.0 - 12.0 * t, -2.0 + 6.0 * t};
  return b;
}

CenterlineSample hermite_eval(const std::array<Vec3, 4>& dofs, double L0, double t) {
  if (!(L0 > 0.0)) throw UsageError("hermite_eval: reference length must be positive");
  const HermiteBasis b = hermite_basis(t);
  // Tangent dofs enter scaled by L0; the parameterization assumes ds/dt = L0.
  const std::array<double, 4> scale = {1.0, L0, 1.0, L0};
  CenterlineSample s;
  s.r.setZero();
  s.dr_ds.setZero();
  s.d2r_ds2.setZero();
  for (int i = 0; i < 4; ++i) {
    s.r += scale[i] * b.value[i] * dofs[i];
    s.dr_ds += scale[i] * b.d_dt[i] / L0 * dofs[i];
    s.d2r_ds2 += scale[i] * b.d2_dt2[i] / (L0 * L0) * dofs[i];
  }
  return s;
}

}  // namespace embeam
