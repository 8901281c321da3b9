#pragma once

#include "embeam/beam_element.hpp"
#include "embeam/dof_map.hpp"
#include "embeam/mesh.hpp"
#include "embeam/mortar.hpp"
#include "embeam/solid_element.hpp"
#include "embeam/types.hpp"

namespace embeam {

/// Everything needed to evaluate the regularized equilibrium problem.
/// External load at load factor l is f_base + l * f_neumann; the default
/// f_base = 0 and gap_offset = 0 reproduce the plain quasi-static ramp.
struct Problem {
  const SolidMesh* solid = nullptr;
  const BeamMesh* beam = nullptr;
  const DofMap* dofs = nullptr;
  SolidMaterial solid_material;
  BeamMaterial beam_material;
  MortarSystem mortar;
  VecX f_neumann;    // load-factor-scaled external load pattern
  VecX f_base;       // constant external load
  VecX gap_offset;   // g0 for coupling established in a pre-deformed state
};

/// Build a Problem with the Neumann pattern assembled from both meshes.
Problem make_problem(const SolidMesh& solid, const BeamMesh& beam, const DofMap& dofs,
                     const SolidMaterial& solid_mat, const BeamMaterial& beam_mat,
                     MortarSystem mortar);

/// Assembled residual and tangent of the condensed (penalty) system on the
/// full dof vector; Dirichlet handling happens at solve time.
struct GlobalSystem {
  SparseMat tangent;
  VecX residual;   // f_int + f_coupling - (f_base + l f_neumann)
  double energy = 0.0;  // total potential, external work included
};

GlobalSystem assemble_global(const Problem& problem, const VecX& d, double load_factor);

/// Total potential energy: solid + beam internal energy, penalty energy
/// kappa/2 (g-g0)^T V^-1 (g-g0), minus external work.
double total_energy(const Problem& problem, const VecX& d, double load_factor);

/// Split views of the full dof vector (solid block first).
inline VecX solid_part(const Problem& p, const VecX& d) { return d.head(p.dofs->solid_size()); }
inline VecX beam_part(const Problem& p, const VecX& d) { return d.tail(p.dofs->beam_size()); }

/// Overwrite constrained entries with load_factor * prescribed values.
void apply_dirichlet(const Problem& problem, double load_factor, VecX& d);

/// Recovered multiplier field at the current state.
MultiplierField recover_multiplier(const Problem& problem, const VecX& d);

}  // namespace embeam
