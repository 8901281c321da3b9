#pragma once

#include <array>
#include <optional>
#include <vector>

#include "embeam/mesh.hpp"
#include "embeam/types.hpp"

namespace embeam {

/// Forward trilinear map X(xi) of one hexahedron.
Vec3 hex_map(const std::array<Vec3, 8>& X, const Vec3& xi);

/// Invert the trilinear map by Newton iteration, starting from the element
/// center. Returns the local coordinate if the residual drops below
/// 1e-10 * diameter; nullopt if the iteration fails to converge.
std::optional<Vec3> invert_hex_map(const std::array<Vec3, 8>& X, const Vec3& x);

/// Axis-aligned bounding boxes of all elements, inflated by 10% of each
/// element's diameter, for candidate search.
class ElementBoxIndex {
 public:
  explicit ElementBoxIndex(const SolidMesh& mesh);
  std::vector<int> candidates(const Vec3& x) const;

 private:
  std::vector<Vec3> lo_;
  std::vector<Vec3> hi_;
};

struct ProjectionResult {
  int element = -1;
  Vec3 xi = Vec3::Zero();
};

/// Locate the solid element containing x and its local coordinates. Among
/// converged candidates within the tolerance band |xi_i| <= 1 + 1e-8, a
/// strictly interior hit wins immediately; boundary ties resolve to the
/// smallest max |xi_i|. Throws EmbeddingError when no element contains x.
ProjectionResult project_point_to_solid(const Vec3& x, const SolidMesh& mesh,
                                        const ElementBoxIndex& index);

/// Convenience overload building the box index on the fly.
ProjectionResult project_point_to_solid(const Vec3& x, const SolidMesh& mesh);

}  // namespace embeam
