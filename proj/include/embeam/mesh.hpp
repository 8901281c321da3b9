#pragma once

#include <array>
#include <vector>

#include "embeam/types.hpp"

namespace embeam {

/// One Dirichlet or Neumann entry: a nodal dof plus its value per unit load
/// factor (prescribed displacement for Dirichlet, force for Neumann).
struct Constraint {
  int node = 0;
  int comp = 0;  // solid: 0-2; beam: 0-2 position, 3-5 tangent
  double value = 0.0;
};

/// Reference geometry and connectivity of the 3D solid field.
struct SolidMesh {
  std::vector<Vec3> nodes;                       // reference positions
  std::vector<std::array<int, 8>> elements;      // trilinear hexahedra
  std::vector<Constraint> dirichlet;
  std::vector<Constraint> neumann;

  std::array<Vec3, 8> element_nodes(int e) const;
};

/// Hermite centerline node: reference position plus reference tangent dr/ds.
struct BeamNode {
  Vec3 position;
  Vec3 tangent;
};

struct BeamElement {
  int node_a = 0;
  int node_b = 0;
  double length = 0.0;  // reference arc length L0
};

/// Reference geometry of the embedded fibers.
struct BeamMesh {
  std::vector<BeamNode> nodes;
  std::vector<BeamElement> elements;
  std::vector<Constraint> dirichlet;
  std::vector<Constraint> neumann;

  /// Reference centerline dofs (pos_a, tan_a, pos_b, tan_b) of element e.
  std::array<Vec3, 4> element_dofs(int e) const;
};

/// Check all SolidMesh invariants; throws GeometryError naming the offender.
/// Positivity of the reference Jacobian is checked at the 2x2x2 Gauss points.
void validate(const SolidMesh& mesh);

/// Check BeamMesh invariants: L0 > 0 and L0 consistent with the quadrature
/// arc length of the reference Hermite curve to 1e-6 relative.
void validate(const BeamMesh& mesh);

}  // namespace embeam
