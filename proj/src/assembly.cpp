#include "embeam/assembly.hpp"

#include <vector>

#include "embeam/errors.hpp"

namespace embeam {

namespace {

void check_problem(const Problem& p) {
  if (!p.solid || !p.beam || !p.dofs) throw UsageError("problem is missing mesh or dof map");
  if (!p.solid_material.valid()) throw UsageError("invalid solid material parameters");
  if (!p.beam_material.valid()) throw UsageError("invalid beam material parameters");
}

}  // namespace

Problem make_problem(const SolidMesh& solid, const BeamMesh& beam, const DofMap& dofs,
                     const SolidMaterial& solid_mat, const BeamMaterial& beam_mat,
                     MortarSystem mortar) {
  Problem p;
  p.solid = &solid;
  p.beam = &beam;
  p.dofs = &dofs;
  p.solid_material = solid_mat;
  p.beam_material = beam_mat;
  p.mortar = std::move(mortar);

  p.f_neumann = VecX::Zero(dofs.size());
  for (const Constraint& c : solid.neumann) p.f_neumann(dofs.solid_dof(c.node, c.comp)) += c.value;
  for (const Constraint& c : beam.neumann) p.f_neumann(dofs.beam_dof(c.node, c.comp)) += c.value;
  p.f_base = VecX::Zero(dofs.size());
  p.gap_offset = VecX::Zero(p.mortar.lambda_size());
  check_problem(p);
  return p;
}

GlobalSystem assemble_global(const Problem& p, const VecX& d, double load_factor) {
  check_problem(p);
  const DofMap& dofs = *p.dofs;
  if (d.size() != dofs.size()) throw UsageError("assemble_global: state size mismatch");

  GlobalSystem sys;
  sys.residual = VecX::Zero(dofs.size());
  std::vector<Triplet> triplets;

  // Solid elements.
  for (std::size_t e = 0; e < p.solid->elements.size(); ++e) {
    const auto X = p.solid->element_nodes(static_cast<int>(e));
    const auto& conn = p.solid->elements[e];
    std::array<Vec3, 8> u;
    for (int a = 0; a < 8; ++a)
      u[a] = Vec3(d(dofs.solid_dof(conn[a], 0)), d(dofs.solid_dof(conn[a], 1)),
                  d(dofs.solid_dof(conn[a], 2)));
    const SolidElementResult res = solid_element_force_stiffness(X, u, p.solid_material);
    sys.energy += res.energy;
    for (int a = 0; a < 8; ++a) {
      for (int i = 0; i < 3; ++i) {
        const int ga = dofs.solid_dof(conn[a], i);
        sys.residual(ga) += res.f_int(3 * a + i);
        for (int b = 0; b < 8; ++b)
          for (int j = 0; j < 3; ++j)
            triplets.emplace_back(ga, dofs.solid_dof(conn[b], j), res.K(3 * a + i, 3 * b + j));
      }
    }
  }

  // Beam elements: current dofs = reference values + displacement dofs.
  for (std::size_t e = 0; e < p.beam->elements.size(); ++e) {
    const BeamElement& el = p.beam->elements[e];
    const auto ref = p.beam->element_dofs(static_cast<int>(e));
    std::array<int, 12> gdof;
    for (int i = 0; i < 6; ++i) {
      gdof[i] = dofs.beam_dof(el.node_a, i);
      gdof[6 + i] = dofs.beam_dof(el.node_b, i);
    }
    std::array<Vec3, 4> q = ref;
    for (int n = 0; n < 4; ++n)
      for (int i = 0; i < 3; ++i) q[n](i) += d(gdof[3 * n + i]);
    const BeamElementResult res = beam_element_force_stiffness(q, p.beam_material, el.length);
    sys.energy += res.energy;
    for (int i = 0; i < 12; ++i) {
      sys.residual(gdof[i]) += res.f_int(i);
      for (int j = 0; j < 12; ++j) triplets.emplace_back(gdof[i], gdof[j], res.K(i, j));
    }
  }

  // Penalty coupling: forces and constant stiffness blocks.
  const VecX d_solid = d.head(dofs.solid_size());
  const VecX d_beam = d.tail(dofs.beam_size());
  const CondensedCoupling coupling =
      penalty_condense(p.mortar, d_beam, d_solid, &p.gap_offset);
  sys.residual.head(dofs.solid_size()) += coupling.f_solid;
  sys.residual.tail(dofs.beam_size()) += coupling.f_beam;

  const VecX g = constraint_gap(p.mortar, d_beam, d_solid) - p.gap_offset;
  for (int r = 0; r < p.mortar.lambda_size(); ++r)
    if (p.mortar.V(r) > 0.0) sys.energy += 0.5 * p.mortar.kappa * g(r) * g(r) / p.mortar.V(r);

  const PenaltyStiffness ps = penalty_stiffness(p.mortar);
  const int off = dofs.solid_size();
  auto scatter = [&triplets](const SparseMat& block, int row_off, int col_off) {
    for (int k = 0; k < block.outerSize(); ++k)
      for (SparseMat::InnerIterator it(block, k); it; ++it)
        triplets.emplace_back(row_off + static_cast<int>(it.row()),
                              col_off + static_cast<int>(it.col()), it.value());
  };
  scatter(ps.K_ss, 0, 0);
  scatter(ps.K_sb, 0, off);
  scatter(ps.K_bs, off, 0);
  scatter(ps.K_bb, off, off);

  // External load.
  const VecX f_ext = p.f_base + load_factor * p.f_neumann;
  sys.residual -= f_ext;
  sys.energy -= f_ext.dot(d);

  sys.tangent.resize(dofs.size(), dofs.size());
  sys.tangent.setFromTriplets(triplets.begin(), triplets.end());
  return sys;
}

double total_energy(const Problem& p, const VecX& d, double load_factor) {
  return assemble_global(p, d, load_factor).energy;
}

void apply_dirichlet(const Problem& p, double load_factor, VecX& d) {
  const auto& constrained = p.dofs->constrained_dofs();
  const auto& values = p.dofs->prescribed_values();
  for (std::size_t i = 0; i < constrained.size(); ++i)
    d(constrained[i]) = load_factor * values[i];
}

MultiplierField recover_multiplier(const Problem& p, const VecX& d) {
  return penalty_condense(p.mortar, d.tail(p.dofs->beam_size()), d.head(p.dofs->solid_size()),
                          &p.gap_offset)
      .lambda;
}

}  // namespace embeam
