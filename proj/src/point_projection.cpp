#include "embeam/point_projection.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "embeam/errors.hpp"
#include "embeam/shape_functions.hpp"

namespace embeam {

namespace {

constexpr double kXiBand = 1.0 + 1e-8;
constexpr int kMaxNewton = 40;

double element_diameter(const std::array<Vec3, 8>& X) {
  double d2 = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) d2 = std::max(d2, (X[a] - X[b]).squaredNorm());
  return std::sqrt(d2);
}

}  // namespace

Vec3 hex_map(const std::array<Vec3, 8>& X, const Vec3& xi) {
  const Hex8Shape shape = hex8_shape(xi);
  Vec3 x = Vec3::Zero();
  for (int a = 0; a < 8; ++a) x += shape.value[a] * X[a];
  return x;
}

std::optional<Vec3> invert_hex_map(const std::array<Vec3, 8>& X, const Vec3& x) {
  const double tol = 1e-10 * element_diameter(X);
  Vec3 xi = Vec3::Zero();
  for (int it = 0; it < kMaxNewton; ++it) {
    const Hex8Shape shape = hex8_shape(xi);
    Vec3 map = Vec3::Zero();
    Mat3 J = Mat3::Zero();
    for (int a = 0; a < 8; ++a) {
      map += shape.value[a] * X[a];
      J += X[a] * shape.grad_xi[a].transpose();
    }
    const Vec3 res = x - map;
    if (res.norm() <= tol) return xi;
    const double det = J.determinant();
    if (!std::isfinite(det) || std::abs(det) < 1e-300) return std::nullopt;
    xi += J.inverse() * res;
    // Diverging iterates cannot lead to an in-band hit.
    if (xi.cwiseAbs().maxCoeff() > 10.0) return std::nullopt;
  }
  return std::nullopt;
}

ElementBoxIndex::ElementBoxIndex(const SolidMesh& mesh) {
  const int n = static_cast<int>(mesh.elements.size());
  lo_.resize(n);
  hi_.resize(n);
  for (int e = 0; e < n; ++e) {
    const auto X = mesh.element_nodes(e);
    Vec3 lo = X[0], hi = X[0];
    for (int a = 1; a < 8; ++a) {
      lo = lo.cwiseMin(X[a]);
      hi = hi.cwiseMax(X[a]);
    }
    const double pad = 0.1 * element_diameter(X);
    lo_[e] = lo - Vec3::Constant(pad);
    hi_[e] = hi + Vec3::Constant(pad);
  }
}

std::vector<int> ElementBoxIndex::candidates(const Vec3& x) const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(lo_.size()); ++e)
    if ((x.array() >= lo_[e].array()).all() && (x.array() <= hi_[e].array()).all())
      out.push_back(e);
  return out;
}

ProjectionResult project_point_to_solid(const Vec3& x, const SolidMesh& mesh,
                                        const ElementBoxIndex& index) {
  ProjectionResult best;
  double best_max_xi = std::numeric_limits<double>::infinity();

  for (int e : index.candidates(x)) {
    const auto X = mesh.element_nodes(e);
    const std::optional<Vec3> xi = invert_hex_map(X, x);
    if (!xi) continue;
    const double max_xi = xi->cwiseAbs().maxCoeff();
    if (max_xi > kXiBand) continue;
    if (max_xi < 1.0 - 1e-8) return {e, *xi};  // strictly interior: unambiguous
    if (max_xi < best_max_xi) {
      best = {e, *xi};
      best_max_xi = max_xi;
    }
  }
  if (best.element < 0) {
    std::ostringstream msg;
    msg << "point (" << x.x() << ", " << x.y() << ", " << x.z()
        << ") lies outside the solid mesh; embedded fibers must be fully contained";
    throw EmbeddingError(msg.str());
  }
  return best;
}

ProjectionResult project_point_to_solid(const Vec3& x, const SolidMesh& mesh) {
  return project_point_to_solid(x, mesh, ElementBoxIndex(mesh));
}

}  // namespace embeam
