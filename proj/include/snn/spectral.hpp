/**
 * Coboundary matrices, Hodge Laplacians and the spectral toolbox built on
 * them: eigendecomposition, simplicial Fourier transform, spectral
 * convolution and Betti numbers.
 *
 * Sign convention: the i-th face of a simplex omits the i-th vertex of its
 * sorted vertex sequence and carries sign (-1)^i. All operators are indexed
 * by the lexicographic per-dimension ordering of the complex.
 *
 * The eigendecomposition is a diagnostic oracle; the training path only ever
 * multiplies by the sparse Laplacian.
 */
#ifndef SNN_SPECTRAL_HPP
#define SNN_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "snn/complex.hpp"
#include "snn/errors.hpp"
#include "snn/linalg.hpp"

namespace snn {

/// Cochain: a real-valued function on the p-simplices of a complex, stored
/// densely in the dimension-p index order of that complex.
template <typename Scalar>
struct Cochain {
    int dimension = 0;
    Vector<Scalar> values;
};

/// Coboundary matrix B_p of shape |K_{p+1}| x |K_p|: entry (tau, sigma) is
/// (-1)^i when sigma is the i-th face of tau, 0 otherwise. For p at or above
/// the top dimension the result is an empty operator of the correct shape.
template <typename Scalar = double>
SparseMatrix<Scalar> coboundary_matrix(const SimplicialComplex& complex, int p) {
    if (p < 0) throw std::invalid_argument("coboundary_matrix: negative dimension");
    const Index rows = complex.count(p + 1);
    const Index cols = complex.count(p);
    SparseMatrix<Scalar> B(rows, cols);
    if (rows == 0 || cols == 0) return B;

    std::vector<Eigen::Triplet<Scalar>> triplets;
    triplets.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(p + 2));
    const auto& level = complex.simplices(p + 1);
    for (Index r = 0; r < rows; ++r) {
        const auto faces = level[static_cast<std::size_t>(r)].faces();
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const auto col = complex.position(faces[i]);
            if (!col)
                throw std::logic_error("coboundary_matrix: complex not closed under faces");
            triplets.emplace_back(r, *col, (i % 2 == 0) ? Scalar(1) : Scalar(-1));
        }
    }
    B.setFromTriplets(triplets.begin(), triplets.end());
    B.makeCompressed();
    return B;
}

/// Hodge Laplacian L_p = B_p^T B_p + B_{p-1} B_{p-1}^T with the up and down
/// parts kept alongside the sum. L_0 is the classic graph Laplacian.
template <typename Scalar = double>
struct HodgeLaplacian {
    int dimension = 0;
    SparseMatrix<Scalar> matrix;
    SparseMatrix<Scalar> up;
    SparseMatrix<Scalar> down;

    Index size() const noexcept { return matrix.rows(); }
};

namespace detail {
template <typename Scalar>
void prune_zeros(SparseMatrix<Scalar>& m) {
    m.prune([](Index, Index, const Scalar& v) { return v != Scalar(0); });
    m.makeCompressed();
}
}  // namespace detail

template <typename Scalar = double>
HodgeLaplacian<Scalar> hodge_laplacian(const SimplicialComplex& complex, int p) {
    if (p < 0) throw std::invalid_argument("hodge_laplacian: negative dimension");
    const Index n = complex.count(p);
    if (n == 0)
        throw std::invalid_argument("hodge_laplacian: complex has no simplices of dimension " +
                                    std::to_string(p));
    HodgeLaplacian<Scalar> lap;
    lap.dimension = p;
    const SparseMatrix<Scalar> b_up = coboundary_matrix<Scalar>(complex, p);
    lap.up = SparseMatrix<Scalar>(b_up.transpose()) * b_up;
    if (p > 0) {
        const SparseMatrix<Scalar> b_down = coboundary_matrix<Scalar>(complex, p - 1);
        lap.down = b_down * SparseMatrix<Scalar>(b_down.transpose());
    } else {
        lap.down.resize(n, n);
    }
    lap.matrix = lap.up + lap.down;
    detail::prune_zeros(lap.up);
    detail::prune_zeros(lap.down);
    detail::prune_zeros(lap.matrix);
    return lap;
}

/// Exact sparse matrix-vector product with shape checking.
template <typename Scalar, typename Derived>
Vector<Scalar> apply(const SparseMatrix<Scalar>& op, const Eigen::MatrixBase<Derived>& x) {
    if (op.cols() != x.size())
        throw std::invalid_argument("apply: operator is " + std::to_string(op.rows()) + "x" +
                                    std::to_string(op.cols()) + " but vector has length " +
                                    std::to_string(x.size()));
    return op * x;
}

/// Orthonormal eigenbasis of a Hodge Laplacian, eigenvalues ascending.
template <typename Scalar = double>
struct EigenBasis {
    Vector<Scalar> eigenvalues;
    Matrix<Scalar> vectors;  // columns are eigencochains, U

    Index size() const noexcept { return eigenvalues.size(); }
};

/// Dense symmetric eigendecomposition. Guarded by max_size: beyond it the
/// dense solve is refused and callers should stay on the polynomial path.
template <typename Scalar>
EigenBasis<Scalar> eigendecompose(const HodgeLaplacian<Scalar>& laplacian,
                                  Index max_size = 5000) {
    const Index n = laplacian.size();
    if (n > max_size)
        throw numerical_error(
            "eigendecompose: operator size " + std::to_string(n) + " exceeds the dense guard (" +
            std::to_string(max_size) +
            "); use polynomial filters, which need only sparse matrix-vector products");
    Matrix<Scalar> dense(laplacian.matrix);
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(dense);
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigendecompose: eigensolver failed to converge");
    EigenBasis<Scalar> basis;
    basis.eigenvalues = solver.eigenvalues();
    basis.vectors = solver.eigenvectors();
    return basis;
}

/// Simplicial Fourier transform: coefficients of a cochain in the
/// eigencochain basis, F_p(c) = U^T c.
template <typename Derived, typename Scalar = typename Derived::Scalar>
Vector<Scalar> fourier_transform(const Eigen::MatrixBase<Derived>& cochain,
                                 const EigenBasis<Scalar>& basis) {
    if (cochain.size() != basis.size())
        throw std::invalid_argument("fourier_transform: cochain length " +
                                    std::to_string(cochain.size()) + " does not match basis size " +
                                    std::to_string(basis.size()));
    return basis.vectors.transpose() * cochain;
}

template <typename Derived, typename Scalar = typename Derived::Scalar>
Vector<Scalar> inverse_fourier_transform(const Eigen::MatrixBase<Derived>& coeffs,
                                         const EigenBasis<Scalar>& basis) {
    if (coeffs.size() != basis.size())
        throw std::invalid_argument("inverse_fourier_transform: coefficient length " +
                                    std::to_string(coeffs.size()) +
                                    " does not match basis size " + std::to_string(basis.size()));
    return basis.vectors * coeffs;
}

/// Convolution of two cochains: entrywise product in the frequency domain,
/// U ((U^T c) o (U^T c')). Basis-dependent when eigenvalues repeat; trained
/// filters use the basis-independent polynomial form instead.
template <typename DerivedA, typename DerivedB,
          typename Scalar = typename DerivedA::Scalar>
Vector<Scalar> spectral_convolve(const Eigen::MatrixBase<DerivedA>& c,
                                 const Eigen::MatrixBase<DerivedB>& c_prime,
                                 const EigenBasis<Scalar>& basis) {
    if (c.size() != c_prime.size())
        throw std::invalid_argument("spectral_convolve: cochain lengths differ");
    const Vector<Scalar> fc = fourier_transform(c, basis);
    const Vector<Scalar> fc_prime = fourier_transform(c_prime, basis);
    return basis.vectors * fc.cwiseProduct(fc_prime);
}

/// Number of k-dimensional holes: the count of (near-)zero eigenvalues of
/// L_k. The tolerance is relative to the spectral range because citation
/// complexes vary widely in scale; pass tolerance >= 0 to override.
template <typename Scalar = double>
Index betti_number(const SimplicialComplex& complex, int k, Scalar tolerance = Scalar(-1),
                   Index max_size = 5000) {
    const auto basis = eigendecompose(hodge_laplacian<Scalar>(complex, k), max_size);
    const Scalar lambda_max = basis.eigenvalues.size() ? basis.eigenvalues.tail(1)(0) : Scalar(0);
    const Scalar tol =
        tolerance >= Scalar(0) ? tolerance : Scalar(1e-8) * std::max(Scalar(1), lambda_max);
    Index zeros = 0;
    for (Index i = 0; i < basis.eigenvalues.size(); ++i)
        if (std::abs(basis.eigenvalues(i)) <= tol) ++zeros;
    return zeros;
}

/// Optional extension (off the paper's training path): rescale L -> L / lambda_max
/// for numerical-stability experiments. lambda_max is estimated with a fixed
/// 100-step power iteration from the all-ones vector, deterministically.
template <typename Scalar>
HodgeLaplacian<Scalar> rescale_by_spectral_norm(const HodgeLaplacian<Scalar>& laplacian) {
    const Index n = laplacian.size();
    Vector<Scalar> v = Vector<Scalar>::Ones(n);
    v /= v.norm();
    Scalar lambda = Scalar(0);
    for (int it = 0; it < 100; ++it) {
        Vector<Scalar> w = laplacian.matrix * v;
        const Scalar norm = w.norm();
        if (norm == Scalar(0)) break;  // L is the zero operator
        v = w / norm;
        lambda = norm;
    }
    HodgeLaplacian<Scalar> scaled = laplacian;
    if (lambda > Scalar(0)) {
        const Scalar inv = Scalar(1) / lambda;
        scaled.matrix *= inv;
        scaled.up *= inv;
        scaled.down *= inv;
    }
    return scaled;
}

}  // namespace snn

#endif
