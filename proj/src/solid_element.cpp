#include "embeam/solid_element.hpp"

#include <cmath>

#include "embeam/errors.hpp"
#include "embeam/gauss.hpp"
#include "embeam/shape_functions.hpp"

namespace embeam {

namespace {

// Reference Jacobian J(i,j) = dX_i/dxi_j and nodal gradients w.r.t. X.
struct IsoGradients {
  std::array<Vec3, 8> grad_X;
  double det_J;
};

IsoGradients material_gradients(const std::array<Vec3, 8>& X, const Hex8Shape& shape) {
  Mat3 J = Mat3::Zero();
  for (int a = 0; a < 8; ++a) J += X[a] * shape.grad_xi[a].transpose();
  const double det = J.determinant();
  if (!(det > 0.0) || !std::isfinite(det))
    throw GeometryError("solid element: singular or inverted reference Jacobian");
  const Mat3 J_inv_T = J.inverse().transpose();
  IsoGradients g;
  g.det_J = det;
  for (int a = 0; a < 8; ++a) g.grad_X[a] = J_inv_T * shape.grad_xi[a];
  return g;
}

// Voigt order [11, 22, 33, 12, 23, 13] with engineering shear strains.
using Voigt = Eigen::Matrix<double, 6, 1>;
using VoigtMat = Eigen::Matrix<double, 6, 6>;

Voigt to_voigt_stress(const Mat3& S) {
  Voigt v;
  v << S(0, 0), S(1, 1), S(2, 2), S(0, 1), S(1, 2), S(0, 2);
  return v;
}

VoigtMat stvk_tangent(const SolidMaterial& mat) {
  const double la = mat.lame_lambda();
  const double mu = mat.lame_mu();
  VoigtMat D = VoigtMat::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) D(i, j) = la;
    D(i, i) += 2.0 * mu;
    D(3 + i, 3 + i) = mu;
  }
  return D;
}

// Strain-displacement matrix of node a: delta E (Voigt) = B_a delta u_a.
Eigen::Matrix<double, 6, 3> b_matrix(const Mat3& F, const Vec3& g) {
  Eigen::Matrix<double, 6, 3> B;
  for (int i = 0; i < 3; ++i) {
    B(0, i) = F(i, 0) * g(0);
    B(1, i) = F(i, 1) * g(1);
    B(2, i) = F(i, 2) * g(2);
    B(3, i) = F(i, 0) * g(1) + F(i, 1) * g(0);
    B(4, i) = F(i, 1) * g(2) + F(i, 2) * g(1);
    B(5, i) = F(i, 0) * g(2) + F(i, 2) * g(0);
  }
  return B;
}

}  // namespace

Mat3 deformation_gradient(const std::array<Vec3, 8>& X, const std::array<Vec3, 8>& u,
                          const Vec3& xi) {
  const IsoGradients g = material_gradients(X, hex8_shape(xi));
  Mat3 F = Mat3::Identity();
  for (int a = 0; a < 8; ++a) F += u[a] * g.grad_X[a].transpose();
  return F;
}

Mat3 green_lagrange(const Mat3& F) { return 0.5 * (F.transpose() * F - Mat3::Identity()); }

Mat3 pk2_stvk(const Mat3& E, const SolidMaterial& mat) {
  return mat.lame_lambda() * E.trace() * Mat3::Identity() + 2.0 * mat.lame_mu() * E;
}

double strain_energy_density(const Mat3& E, const SolidMaterial& mat) {
  const double tr = E.trace();
  return 0.5 * mat.lame_lambda() * tr * tr + mat.lame_mu() * E.squaredNorm();
}

SolidElementResult solid_element_force_stiffness(const std::array<Vec3, 8>& X,
                                                 const std::array<Vec3, 8>& u,
                                                 const SolidMaterial& mat) {
  SolidElementResult out;
  out.f_int.setZero();
  out.K.setZero();
  const VoigtMat D = stvk_tangent(mat);

  for (const GaussPoint3D& gp : hex_gauss_rule(2)) {
    const Hex8Shape shape = hex8_shape(gp.xi);
    const IsoGradients g = material_gradients(X, shape);
    const double dV = gp.weight * g.det_J;

    Mat3 F = Mat3::Identity();
    for (int a = 0; a < 8; ++a) F += u[a] * g.grad_X[a].transpose();
    const Mat3 E = green_lagrange(F);
    const Mat3 S = pk2_stvk(E, mat);
    const Voigt s = to_voigt_stress(S);

    out.energy += strain_energy_density(E, mat) * dV;

    std::array<Eigen::Matrix<double, 6, 3>, 8> B;
    for (int a = 0; a < 8; ++a) B[a] = b_matrix(F, g.grad_X[a]);

    for (int a = 0; a < 8; ++a) {
      out.f_int.segment<3>(3 * a) += dV * (B[a].transpose() * s);
      for (int b = 0; b < 8; ++b) {
        // Material part plus geometric part (g_a . S g_b on the diagonal).
        Mat3 K_ab = B[a].transpose() * D * B[b];
        const double geo = g.grad_X[a].dot(S * g.grad_X[b]);
        K_ab += geo * Mat3::Identity();
        out.K.block<3, 3>(3 * a, 3 * b) += dV * K_ab;
      }
    }
  }
  return out;
}

}  // namespace embeam
