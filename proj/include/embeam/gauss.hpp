#pragma once

#include <vector>

#include "embeam/types.hpp"

namespace embeam {

/// 1D Gauss-Legendre rule: n points on the given interval.
struct GaussRule1D {
  std::vector<double> points;
  std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
/// the Legendre recurrence. Accurate to machine precision for n up to several
/// hundred (the dense mortar oracle uses n = 200).
GaussRule1D gauss_legendre(int n);

/// Same rule mapped to [0, 1] (beam element parameter domain).
GaussRule1D gauss_legendre_01(int n);

struct GaussPoint3D {
  Vec3 xi;
  double weight;
};

/// Tensor-product rule on the reference hexahedron [-1,1]^3.
std::vector<GaussPoint3D> hex_gauss_rule(int n_per_axis);

}  // namespace embeam
