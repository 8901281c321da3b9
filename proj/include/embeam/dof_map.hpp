#pragma once

#include <vector>

#include "embeam/mesh.hpp"
#include "embeam/types.hpp"

namespace embeam {

/// Global equation numbering: solid displacement dofs first (3 per node),
/// then beam dofs (6 per node: position then tangent components). Dirichlet
/// entries of the meshes define the constrained partition; each constrained
/// dof carries its prescribed value per unit load factor.
class DofMap {
 public:
  DofMap(const SolidMesh& solid, const BeamMesh& beam);

  int solid_dof(int node, int comp) const { return 3 * node + comp; }
  int beam_dof(int node, int comp) const { return n_solid_ + 6 * node + comp; }

  struct DofKey {
    Field field;
    int node;
    int comp;
  };
  DofKey decode(int global) const;

  int size() const { return n_solid_ + n_beam_; }
  int solid_size() const { return n_solid_; }
  int beam_size() const { return n_beam_; }

  bool is_constrained(int global) const { return constrained_mask_[global]; }
  const std::vector<int>& free_dofs() const { return free_; }
  const std::vector<int>& constrained_dofs() const { return constrained_; }
  /// Prescribed value per unit load factor, parallel to constrained_dofs().
  const std::vector<double>& prescribed_values() const { return prescribed_; }

 private:
  int n_solid_ = 0;
  int n_beam_ = 0;
  std::vector<bool> constrained_mask_;
  std::vector<int> free_;
  std::vector<int> constrained_;
  std::vector<double> prescribed_;
};

}  // namespace embeam
