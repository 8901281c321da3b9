#include "embeam/dof_map.hpp"

#include <string>

#include "embeam/errors.hpp"

namespace embeam {

DofMap::DofMap(const SolidMesh& solid, const BeamMesh& beam)
    : n_solid_(3 * static_cast<int>(solid.nodes.size())),
      n_beam_(6 * static_cast<int>(beam.nodes.size())) {
  const int n = size();
  constrained_mask_.assign(n, false);
  std::vector<double> values(n, 0.0);

  for (const Constraint& c : solid.dirichlet) {
    const int g = solid_dof(c.node, c.comp);
    if (constrained_mask_[g])
      throw UsageError("duplicate dirichlet entry on solid node " + std::to_string(c.node) +
                       " component " + std::to_string(c.comp));
    constrained_mask_[g] = true;
    values[g] = c.value;
  }
  for (const Constraint& c : beam.dirichlet) {
    const int g = beam_dof(c.node, c.comp);
    if (constrained_mask_[g])
      throw UsageError("duplicate dirichlet entry on beam node " + std::to_string(c.node) +
                       " component " + std::to_string(c.comp));
    constrained_mask_[g] = true;
    values[g] = c.value;
  }

  for (int g = 0; g < n; ++g) {
    if (constrained_mask_[g]) {
      constrained_.push_back(g);
      prescribed_.push_back(values[g]);
    } else {
      free_.push_back(g);
    }
  }
}

DofMap::DofKey DofMap::decode(int global) const {
  if (global < 0 || global >= size()) throw UsageError("dof index out of range");
  if (global < n_solid_) return {Field::solid, global / 3, global % 3};
  const int local = global - n_solid_;
  return {Field::beam, local / 6, local % 6};
}

}  // namespace embeam
