#include "embeam/mortar.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "embeam/errors.hpp"
#include "embeam/gauss.hpp"
#include "embeam/shape_functions.hpp"

namespace embeam {

std::vector<CouplingPoint> generate_coupling_points(const BeamMesh& beam,
                                                    const SolidMesh& solid, int n_gauss) {
  if (n_gauss < 1) throw UsageError("generate_coupling_points: n_gauss must be >= 1");
  const GaussRule1D rule = gauss_legendre_01(n_gauss);
  const ElementBoxIndex index(solid);

  std::vector<CouplingPoint> points;
  points.reserve(beam.elements.size() * static_cast<std::size_t>(n_gauss));
  for (std::size_t e = 0; e < beam.elements.size(); ++e) {
    const auto dofs = beam.element_dofs(static_cast<int>(e));
    const double L0 = beam.elements[e].length;
    for (int g = 0; g < n_gauss; ++g) {
      const double t = rule.points[g];
      const Vec3 x = hermite_eval(dofs, L0, t).r;
      ProjectionResult proj;
      try {
        proj = project_point_to_solid(x, solid, index);
      } catch (const EmbeddingError& err) {
        std::ostringstream msg;
        msg << "beam element " << e << ", t = " << t << ": " << err.what();
        throw EmbeddingError(msg.str());
      }
      points.push_back({static_cast<int>(e), t, rule.weights[g], L0, proj.element, proj.xi});
    }
  }
  return points;
}

MortarSystem assemble_mortar(const std::vector<CouplingPoint>& points, const BeamMesh& beam,
                             const SolidMesh& solid, const DofMap& dofs, double kappa) {
  if (!(kappa > 0.0)) throw UsageError("assemble_mortar: kappa must be positive");
  const int n_lambda = 3 * static_cast<int>(beam.nodes.size());

  MortarSystem ms;
  ms.kappa = kappa;
  ms.V = VecX::Zero(n_lambda);

  std::vector<Triplet> d_trip;
  std::vector<Triplet> m_trip;
  std::vector<bool> touched(n_lambda, false);

  for (const CouplingPoint& cp : points) {
    const BeamElement& el = beam.elements[cp.beam_elem];
    const double w = cp.gauss_weight * cp.jacobian;
    const auto phi = multiplier_shape(cp.t);
    const HermiteBasis h = hermite_basis(cp.t);
    // Hermite displacement shapes per local dof (pos_a, tan_a, pos_b, tan_b).
    const std::array<double, 4> H = {h.value[0], cp.jacobian * h.value[1], h.value[2],
                                     cp.jacobian * h.value[3]};
    const std::array<int, 2> lambda_nodes = {el.node_a, el.node_b};
    const std::array<int, 4> beam_nodes = {el.node_a, el.node_a, el.node_b, el.node_b};
    const std::array<int, 4> comp_base = {0, 3, 0, 3};  // position vs tangent block

    const Hex8Shape solid_shape = hex8_shape(cp.xi);
    const auto& conn = solid.elements[cp.solid_elem];

    for (int r = 0; r < 2; ++r) {
      const double wphi = w * phi[r];
      for (int i = 0; i < 3; ++i) {
        const int row = 3 * lambda_nodes[r] + i;
        touched[row] = true;
        for (int j = 0; j < 4; ++j)
          d_trip.emplace_back(row, 6 * beam_nodes[j] + comp_base[j] + i, wphi * H[j]);
        for (int a = 0; a < 8; ++a)
          m_trip.emplace_back(row, 3 * conn[a] + i, wphi * solid_shape.value[a]);
      }
      ms.V(3 * lambda_nodes[r] + 0) += wphi;
      ms.V(3 * lambda_nodes[r] + 1) += wphi;
      ms.V(3 * lambda_nodes[r] + 2) += wphi;
    }
  }

  ms.D.resize(n_lambda, dofs.beam_size());
  ms.M.resize(n_lambda, dofs.solid_size());
  ms.D.setFromTriplets(d_trip.begin(), d_trip.end());
  ms.M.setFromTriplets(m_trip.begin(), m_trip.end());

  for (int r = 0; r < n_lambda; ++r)
    if (touched[r] && !(ms.V(r) > 0.0))
      throw AssemblyError("mortar row " + std::to_string(r) +
                          " is active but has zero integrated multiplier weight");
  return ms;
}

VecX constraint_gap(const MortarSystem& ms, const VecX& d_beam, const VecX& d_solid) {
  if (d_beam.size() != ms.D.cols() || d_solid.size() != ms.M.cols())
    throw UsageError("constraint_gap: dof vector sizes do not match the mortar system");
  return ms.D * d_beam - ms.M * d_solid;
}

CondensedCoupling penalty_condense(const MortarSystem& ms, const VecX& d_beam,
                                   const VecX& d_solid, const VecX* gap_offset) {
  VecX g = constraint_gap(ms, d_beam, d_solid);
  if (gap_offset) {
    if (gap_offset->size() != g.size())
      throw UsageError("penalty_condense: gap offset size mismatch");
    g -= *gap_offset;
  }

  const int n_lambda = ms.lambda_size();
  VecX lambda = VecX::Zero(n_lambda);
  for (int r = 0; r < n_lambda; ++r) {
    if (ms.V(r) > 0.0) {
      lambda(r) = ms.kappa * g(r) / ms.V(r);
    } else if (g(r) != 0.0) {
      throw AssemblyError("mortar row " + std::to_string(r) +
                          " carries a gap but has zero weighting");
    }
  }

  CondensedCoupling out;
  out.lambda.values.resize(n_lambda / 3);
  for (int n = 0; n < n_lambda / 3; ++n)
    out.lambda.values[n] = Vec3(lambda(3 * n), lambda(3 * n + 1), lambda(3 * n + 2));
  out.f_beam = ms.D.transpose() * lambda;
  out.f_solid = -(ms.M.transpose() * lambda);
  return out;
}

PenaltyStiffness penalty_stiffness(const MortarSystem& ms) {
  VecX v_inv = VecX::Zero(ms.lambda_size());
  for (int r = 0; r < ms.lambda_size(); ++r)
    if (ms.V(r) > 0.0) v_inv(r) = 1.0 / ms.V(r);

  const SparseMat Dt = ms.D.transpose();
  const SparseMat Mt = ms.M.transpose();

  PenaltyStiffness ps;
  ps.K_bb = ms.kappa * (Dt * v_inv.asDiagonal() * ms.D);
  ps.K_bs = -ms.kappa * (Dt * v_inv.asDiagonal() * ms.M);
  ps.K_sb = -ms.kappa * (Mt * v_inv.asDiagonal() * ms.D);
  ps.K_ss = ms.kappa * (Mt * v_inv.asDiagonal() * ms.M);
  return ps;
}

}  // namespace embeam
