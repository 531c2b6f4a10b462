#ifndef SNN_LINALG_HPP
#define SNN_LINALG_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace snn {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

/// Boolean mask aligned with a cochain vector (true = known entry).
using Mask = Eigen::Array<bool, Eigen::Dynamic, 1>;

}  // namespace snn

#endif
