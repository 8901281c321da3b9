#pragma once

#include <vector>

#include "embeam/dof_map.hpp"
#include "embeam/mesh.hpp"
#include "embeam/point_projection.hpp"
#include "embeam/types.hpp"

namespace embeam {

/// One beam-centerline Gauss point paired with its host solid element.
struct CouplingPoint {
  int beam_elem = -1;
  double t = 0.0;           // local beam coordinate in [0,1]
  double gauss_weight = 0.0;
  double jacobian = 0.0;    // ds/dt = L0
  int solid_elem = -1;
  Vec3 xi = Vec3::Zero();   // local solid coordinates
};

/// Project n_gauss Gauss points per beam element into the solid mesh.
/// Throws EmbeddingError if any point lies outside the solid.
std::vector<CouplingPoint> generate_coupling_points(const BeamMesh& beam,
                                                    const SolidMesh& solid, int n_gauss);

/// Mortar coupling matrices. Rows are multiplier dofs: one Vec3 per beam
/// node (3 * n_beam_nodes rows, component-major per node). D couples the
/// beam (slave) displacement shapes, M the solid (master) shapes; V is the
/// diagonal of integrated multiplier shapes used by the weighted penalty
/// regularization.
struct MortarSystem {
  SparseMat D;    // lambda-dofs x beam-dofs, units m
  SparseMat M;    // lambda-dofs x solid-dofs, units m
  VecX V;         // lambda-dofs, units m
  double kappa = 0.0;  // penalty parameter, N/m^2

  int lambda_size() const { return static_cast<int>(V.size()); }
};

MortarSystem assemble_mortar(const std::vector<CouplingPoint>& points, const BeamMesh& beam,
                             const SolidMesh& solid, const DofMap& dofs, double kappa);

/// g = D d_beam - M d_solid. Throws UsageError on size mismatch.
VecX constraint_gap(const MortarSystem& ms, const VecX& d_beam, const VecX& d_solid);

/// Recovered Lagrange multiplier: a line-load Vec3 per beam node.
struct MultiplierField {
  std::vector<Vec3> values;
};

struct CondensedCoupling {
  MultiplierField lambda;  // kappa V^-1 (g - g0)
  VecX f_beam;             // D^T lambda
  VecX f_solid;            // -M^T lambda
};

/// Penalty elimination of the multiplier. gap_offset (g0) defaults to zero;
/// a nonzero offset expresses coupling established in a pre-deformed state.
/// Throws AssemblyError if an active row of V vanishes.
CondensedCoupling penalty_condense(const MortarSystem& ms, const VecX& d_beam,
                                   const VecX& d_solid, const VecX* gap_offset = nullptr);

/// Constant stiffness blocks of the regularized coupling, in field-local
/// dof numbering (the assembler shifts beam columns behind the solid block):
///   K_bb = kappa D^T V^-1 D,  K_bs = -kappa D^T V^-1 M,
///   K_sb = K_bs^T,            K_ss = kappa M^T V^-1 M.
struct PenaltyStiffness {
  SparseMat K_ss;
  SparseMat K_sb;
  SparseMat K_bs;
  SparseMat K_bb;
};

PenaltyStiffness penalty_stiffness(const MortarSystem& ms);

}  // namespace embeam
