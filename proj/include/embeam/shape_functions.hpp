#pragma once

#include <array>

#include "embeam/types.hpp"

namespace embeam {

/// Trilinear hexahedron shape functions and their reference-space gradients.
struct Hex8Shape {
  std::array<double, 8> value;
  std::array<Vec3, 8> grad_xi;
};

/// Corner coordinates of the reference hexahedron, standard VTK node order.
const std::array<Vec3, 8>& hex8_corners();

/// Evaluate the trilinear basis at xi in [-1,1]^3 (components may overshoot
/// the cube by up to 1e-8; the formulas are polynomial either way).
Hex8Shape hex8_shape(const Vec3& xi);

/// Cubic Hermite basis on t in [0,1] with unit tangent scaling:
///   r(t) = h0 pos_a + h1 (L0 tan_a) + h2 pos_b + h3 (L0 tan_b).
struct HermiteBasis {
  std::array<double, 4> value;
  std::array<double, 4> d_dt;
  std::array<double, 4> d2_dt2;
};

HermiteBasis hermite_basis(double t);

/// Centerline position and arc-length derivatives at parameter t.
struct CenterlineSample {
  Vec3 r;
  Vec3 dr_ds;    // s = L0 * t
  Vec3 d2r_ds2;
};

/// dofs = (pos_a, tan_a, pos_b, tan_b); tangents are dr/ds values, scaled
/// internally by the reference length L0.
CenterlineSample hermite_eval(const std::array<Vec3, 4>& dofs, double L0, double t);

/// Linear Lagrange multiplier shapes on t in [0,1].
inline std::array<double, 2> multiplier_shape(double t) { return {1.0 - t, t}; }

}  // namespace embeam
