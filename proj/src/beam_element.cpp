#include "embeam/beam_element.hpp"

#include <cmath>

#include "embeam/dual2.hpp"
#include "embeam/errors.hpp"
#include "embeam/gauss.hpp"
#include "embeam/shape_functions.hpp"

namespace embeam {

namespace {

constexpr int kBeamQuadrature = 6;
constexpr double kTangentTol = 1e-10;

struct Derivatives {
  Vec3 r_p;   // dr/ds
  Vec3 r_pp;  // d2r/ds2
};

Derivatives centerline_derivatives(const std::array<Vec3, 4>& q, double L0, double t) {
  const CenterlineSample s = hermite_eval(q, L0, t);
  return {s.dr_ds, s.d2r_ds2};
}

}  // namespace

double axial_strain(const std::array<Vec3, 4>& q, double L0, double t) {
  const Derivatives d = centerline_derivatives(q, L0, t);
  const double m = d.r_p.norm();
  if (m < kTangentTol) throw KinematicsError("beam element: degenerate centerline tangent");
  return m - 1.0;
}

double curvature(const std::array<Vec3, 4>& q, double L0, double t) {
  const Derivatives d = centerline_derivatives(q, L0, t);
  const double m = d.r_p.norm();
  if (m < kTangentTol) throw KinematicsError("beam element: degenerate centerline tangent");
  return d.r_p.cross(d.r_pp).norm() / (m * m * m);
}

BeamElementResult beam_element_force_stiffness(const std::array<Vec3, 4>& q,
                                               const BeamMaterial& mat, double L0) {
  using D = Dual2<12>;
  using DV = DualVec3<12>;

  // Seed the 12 element dofs as independent variables.
  std::array<DV, 4> qd;
  for (int n = 0; n < 4; ++n)
    for (int i = 0; i < 3; ++i) qd[n][i] = D::variable(q[n](i), 3 * n + i);

  const GaussRule1D rule = gauss_legendre_01(kBeamQuadrature);
  const double EA = mat.youngs_modulus * mat.area;
  const double EI = mat.youngs_modulus * mat.moment_of_inertia;

  D energy;
  for (std::size_t g = 0; g < rule.points.size(); ++g) {
    const double t = rule.points[g];
    const HermiteBasis b = hermite_basis(t);
    const std::array<double, 4> scale = {1.0, L0, 1.0, L0};

    DV r_p, r_pp;
    for (int n = 0; n < 4; ++n) {
      r_p = r_p + (scale[n] * b.d_dt[n] / L0) * qd[n];
      r_pp = r_pp + (scale[n] * b.d2_dt2[n] / (L0 * L0)) * qd[n];
    }

    const D m2 = dot(r_p, r_p);
    if (m2.val < kTangentTol * kTangentTol)
      throw KinematicsError("beam element: degenerate centerline tangent at quadrature point");
    const D m = sqrt(m2);
    const D eps = m - D(1.0);

    // kappa^2 written as |r' x r''|^2 / |r'|^6 keeps the integrand smooth
    // through straight configurations.
    const DV c = cross(r_p, r_pp);
    const D kappa2 = dot(c, c) / (m2 * m2 * m2);

    const double w = rule.weights[g] * L0;
    energy += (0.5 * w) * (EA * (eps * eps) + EI * kappa2);
  }

  BeamElementResult out;
  out.energy = energy.val;
  out.f_int = energy.grad;
  out.K = energy.hess;
  return out;
}

}  // namespace embeam
