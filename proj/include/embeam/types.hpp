#pragma once

#include <Eigen/Core>
#include <Eigen/Sparse>

namespace embeam {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using SparseMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// Which physical field a dof or boundary entry belongs to.
enum class Field { solid, beam };

}  // namespace embeam
