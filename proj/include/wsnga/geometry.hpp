#pragma once

#include <Eigen/Core>

namespace wsnga {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

/// Column-per-node coordinate block.
template <typename Scalar>
using Positions2 = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

using Point2d = Point2<double>;
using Positions2d = Positions2<double>;

/// Euclidean distance between two planar points.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance(const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b) {
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 2)
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 2)
    return (a - b).norm();
}

/// Distance from every column of `points` to `target`.
template <typename Derived, typename DerivedT>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> distances_to(
    const Eigen::MatrixBase<Derived>& points, const Eigen::MatrixBase<DerivedT>& target) {
    return (points.colwise() - target).colwise().norm().transpose();
}

/// Symmetric matrix of all pairwise column distances.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> pairwise_distances(
    const Eigen::MatrixBase<Derived>& points) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = points.cols();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out(j, j) = Scalar(0);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const Scalar d = (points.col(i) - points.col(j)).norm();
            out(i, j) = d;
            out(j, i) = d;
        }
    }
    return out;
}

}  // namespace wsnga
