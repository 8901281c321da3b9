#pragma once

#include <array>

#include "embeam/types.hpp"

namespace embeam {

/// Isotropic St. Venant-Kirchhoff material.
struct SolidMaterial {
  double youngs_modulus = 0.0;  // Pa
  double poissons_ratio = 0.0;

  double lame_lambda() const {
    return youngs_modulus * poissons_ratio /
           ((1.0 + poissons_ratio) * (1.0 - 2.0 * poissons_ratio));
  }
  double lame_mu() const { return youngs_modulus / (2.0 * (1.0 + poissons_ratio)); }
  bool valid() const {
    return youngs_modulus > 0.0 && poissons_ratio > -1.0 && poissons_ratio < 0.5;
  }
};

/// F = I + sum_a u_a (grad_X N_a)^T at local coordinate xi.
/// Throws GeometryError if the reference Jacobian is singular.
Mat3 deformation_gradient(const std::array<Vec3, 8>& X, const std::array<Vec3, 8>& u,
                          const Vec3& xi);

/// E = (F^T F - I) / 2.
Mat3 green_lagrange(const Mat3& F);

/// S = lambda tr(E) I + 2 mu E.
Mat3 pk2_stvk(const Mat3& E, const SolidMaterial& mat);

/// Psi = lambda tr(E)^2 / 2 + mu E:E.
double strain_energy_density(const Mat3& E, const SolidMaterial& mat);

struct SolidElementResult {
  Eigen::Matrix<double, 24, 1> f_int;   // N
  Eigen::Matrix<double, 24, 24> K;      // N/m, material + geometric parts
  double energy = 0.0;                  // J
};

/// Internal force, consistent tangent, and stored energy of one hex8 element,
/// integrated with 2x2x2 Gauss quadrature in the reference configuration.
SolidElementResult solid_element_force_stiffness(const std::array<Vec3, 8>& X,
                                                 const std::array<Vec3, 8>& u,
                                                 const SolidMaterial& mat);

}  // namespace embeam
