#pragma once

#include <array>

#include "embeam/types.hpp"

namespace embeam {

/// Torsion-free beam section: Young's modulus, area, and the (isotropic,
/// circular cross-section) bending moment of inertia.
struct BeamMaterial {
  double youngs_modulus = 0.0;  // Pa
  double area = 0.0;            // m^2
  double moment_of_inertia = 0.0;  // m^4

  bool valid() const { return youngs_modulus > 0.0 && area > 0.0 && moment_of_inertia > 0.0; }
};

/// Axial strain eps = |r'| - 1 at parameter t; q holds the current element
/// dofs (pos_a, tan_a, pos_b, tan_b). Throws KinematicsError on a degenerate
/// tangent.
double axial_strain(const std::array<Vec3, 4>& q, double L0, double t);

/// Space-curve curvature kappa = |r' x r''| / |r'|^3 at parameter t.
double curvature(const std::array<Vec3, 4>& q, double L0, double t);

struct BeamElementResult {
  Eigen::Matrix<double, 12, 1> f_int;
  Eigen::Matrix<double, 12, 12> K;
  double energy = 0.0;
};

/// Internal force, tangent, and energy of one Hermite centerline element:
///   Pi = 1/2 int_0^L0 (EA eps^2 + EI kappa^2) ds
/// with 6-point Gauss quadrature. Derivatives are exact (forward-mode AD on
/// the energy integrand).
BeamElementResult beam_element_force_stiffness(const std::array<Vec3, 4>& q,
                                               const BeamMaterial& mat, double L0);

}  // namespace embeam
