#include "embeam/mesh.hpp"

#include <cmath>
#include <set>
#include <string>

#include "embeam/errors.hpp"
#include "embeam/gauss.hpp"
#include "embeam/shape_functions.hpp"

namespace embeam {

std::array<Vec3, 8> SolidMesh::element_nodes(int e) const {
  std::array<Vec3, 8> out;
  for (int a = 0; a < 8; ++a) out[a] = nodes[elements[e][a]];
  return out;
}

std::array<Vec3, 4> BeamMesh::element_dofs(int e) const {
  const BeamElement& el = elements[e];
  return {nodes[el.node_a].position, nodes[el.node_a].tangent,
          nodes[el.node_b].position, nodes[el.node_b].tangent};
}

namespace {

void check_bc_range(const std::vector<Constraint>& entries, int n_nodes, int n_comp,
                    const char* what) {
  for (const Constraint& c : entries) {
    if (c.node < 0 || c.node >= n_nodes)
      throw GeometryError(std::string(what) + ": node index " + std::to_string(c.node) +
                          " out of range");
    if (c.comp < 0 || c.comp >= n_comp)
      throw GeometryError(std::string(what) + ": component " + std::to_string(c.comp) +
                          " out of range");
    if (!std::isfinite(c.value))
      throw GeometryError(std::string(what) + ": non-finite value");
  }
}

}  // namespace

void validate(const SolidMesh& mesh) {
  const int n_nodes = static_cast<int>(mesh.nodes.size());
  for (const Vec3& x : mesh.nodes)
    if (!x.allFinite()) throw GeometryError("solid mesh: non-finite node coordinate");

  const auto quadrature = hex_gauss_rule(2);
  for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
    const auto& conn = mesh.elements[e];
    std::set<int> seen;
    for (int a = 0; a < 8; ++a) {
      if (conn[a] < 0 || conn[a] >= n_nodes)
        throw GeometryError("solid element " + std::to_string(e) + ": node index " +
                            std::to_string(conn[a]) + " out of range");
      if (!seen.insert(conn[a]).second)
        throw GeometryError("solid element " + std::to_string(e) + ": repeated node " +
                            std::to_string(conn[a]));
    }
    const auto X = mesh.element_nodes(static_cast<int>(e));
    for (const GaussPoint3D& gp : quadrature) {
      const Hex8Shape shape = hex8_shape(gp.xi);
      Mat3 J = Mat3::Zero();  // J(i,j) = dX_i/dxi_j
      for (int a = 0; a < 8; ++a) J += X[a] * shape.grad_xi[a].transpose();
      if (!(J.determinant() > 0.0))
        throw GeometryError("solid element " + std::to_string(e) +
                            ": non-positive Jacobian at a quadrature point");
    }
  }
  check_bc_range(mesh.dirichlet, n_nodes, 3, "solid dirichlet");
  check_bc_range(mesh.neumann, n_nodes, 3, "solid neumann");
}

void validate(const BeamMesh& mesh) {
  const int n_nodes = static_cast<int>(mesh.nodes.size());
  for (const BeamNode& n : mesh.nodes)
    if (!n.position.allFinite() || !n.tangent.allFinite())
      throw GeometryError("beam mesh: non-finite node data");

  const GaussRule1D rule = gauss_legendre_01(10);
  for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
    const BeamElement& el = mesh.elements[e];
    if (el.node_a < 0 || el.node_a >= n_nodes || el.node_b < 0 || el.node_b >= n_nodes)
      throw GeometryError("beam element " + std::to_string(e) + ": node index out of range");
    if (el.node_a == el.node_b)
      throw GeometryError("beam element " + std::to_string(e) + ": repeated node");
    if (!(el.length > 0.0))
      throw GeometryError("beam element " + std::to_string(e) + ": non-positive length");

    const auto dofs = mesh.element_dofs(static_cast<int>(e));
    double arc = 0.0;
    for (std::size_t g = 0; g < rule.points.size(); ++g) {
      const CenterlineSample s = hermite_eval(dofs, el.length, rule.points[g]);
      arc += rule.weights[g] * el.length * s.dr_ds.norm();
    }
    if (std::abs(arc - el.length) > 1e-6 * el.length)
      throw GeometryError("beam element " + std::to_string(e) +
                          ": reference length inconsistent with Hermite arc length (" +
                          std::to_string(arc) + " vs " + std::to_string(el.length) + ")");
  }
  check_bc_range(mesh.dirichlet, n_nodes, 6, "beam dirichlet");
  check_bc_range(mesh.neumann, n_nodes, 6, "beam neumann");
}

}  // namespace embeam
