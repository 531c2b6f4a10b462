/**
 * Simplicial convolutional layers: degree-N polynomials in the Hodge
 * Laplacian applied channel-wise, followed by bias and a nonlinearity.
 *
 * Cochain channels are stored as matrix columns (n_simplices x channels), so
 * one sparse product L * X advances every channel by one Laplacian power at
 * once. Powers are built iteratively; L^i is never materialized.
 */
#ifndef SNN_CONV_HPP
#define SNN_CONV_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "snn/errors.hpp"
#include "snn/linalg.hpp"

namespace snn {

enum class Nonlinearity { leaky_relu, identity };

template <typename Scalar>
struct ConvLayer {
    int degree = 0;  // N: highest Laplacian power in the filter polynomial
    // weights[i] is the out_channels x in_channels coefficient matrix of L^i.
    std::vector<Matrix<Scalar>> weights;
    Vector<Scalar> bias;  // per output channel
    Nonlinearity nonlinearity = Nonlinearity::leaky_relu;
    Scalar slope = Scalar(0.01);  // leaky ReLU slope, in (0, 1)

    Index in_channels() const noexcept { return weights.empty() ? 0 : weights[0].cols(); }
    Index out_channels() const noexcept { return weights.empty() ? 0 : weights[0].rows(); }

    Scalar weight(Index out, Index in, int power) const {
        return weights[static_cast<std::size_t>(power)](out, in);
    }
    Scalar& weight(Index out, Index in, int power) {
        return weights[static_cast<std::size_t>(power)](out, in);
    }

    /// Zero-initialized layer of the given shape.
    static ConvLayer zeros(Index in, Index out, int degree, Nonlinearity nl,
                           Scalar slope = Scalar(0.01)) {
        ConvLayer layer;
        layer.degree = degree;
        layer.weights.assign(static_cast<std::size_t>(degree) + 1, Matrix<Scalar>::Zero(out, in));
        layer.bias = Vector<Scalar>::Zero(out);
        layer.nonlinearity = nl;
        layer.slope = slope;
        return layer;
    }

    void validate() const {
        if (weights.empty() || weights.size() != static_cast<std::size_t>(degree) + 1)
            throw std::invalid_argument("ConvLayer: weights must hold degree+1 coefficient sets");
        for (const auto& w : weights) {
            if (w.rows() != out_channels() || w.cols() != in_channels())
                throw std::invalid_argument("ConvLayer: inconsistent weight shapes");
            if (!w.allFinite()) throw std::invalid_argument("ConvLayer: non-finite weight");
        }
        if (bias.size() != out_channels())
            throw std::invalid_argument("ConvLayer: bias length does not match output channels");
        if (!bias.allFinite()) throw std::invalid_argument("ConvLayer: non-finite bias");
        if (nonlinearity == Nonlinearity::leaky_relu &&
            !(slope > Scalar(0) && slope < Scalar(1)))
            throw std::invalid_argument("ConvLayer: leaky ReLU slope must lie in (0, 1)");
    }
};

namespace detail {

template <typename Scalar>
Matrix<Scalar> activate(const ConvLayer<Scalar>& layer, const Matrix<Scalar>& pre) {
    if (layer.nonlinearity == Nonlinearity::identity) return pre;
    const Scalar slope = layer.slope;
    return pre.unaryExpr([slope](Scalar v) { return v > Scalar(0) ? v : slope * v; });
}

template <typename Scalar>
Matrix<Scalar> activate_derivative(const ConvLayer<Scalar>& layer, const Matrix<Scalar>& pre) {
    if (layer.nonlinearity == Nonlinearity::identity)
        return Matrix<Scalar>::Ones(pre.rows(), pre.cols());
    const Scalar slope = layer.slope;
    return pre.unaryExpr([slope](Scalar v) { return v > Scalar(0) ? Scalar(1) : slope; });
}

}  // namespace detail

/// Forward pass intermediates kept for reverse-mode differentiation.
template <typename Scalar>
struct LayerCache {
    std::vector<Matrix<Scalar>> powers;  // powers[i] = L^i X, n x in_channels
    Matrix<Scalar> pre;                  // pre-activation, n x out_channels
};

/// Apply one layer: Y = psi( sum_i L^i X W_i^T + bias ). X has one column
/// per input channel; the result has one column per output channel.
template <typename Scalar>
Matrix<Scalar> conv_forward(const ConvLayer<Scalar>& layer, const SparseMatrix<Scalar>& laplacian,
                            const Matrix<Scalar>& x, LayerCache<Scalar>* cache = nullptr) {
    if (x.cols() != layer.in_channels())
        throw std::invalid_argument("conv_forward: input has " + std::to_string(x.cols()) +
                                    " channels, layer expects " +
                                    std::to_string(layer.in_channels()));
    if (laplacian.rows() != laplacian.cols() || laplacian.rows() != x.rows())
        throw std::invalid_argument("conv_forward: Laplacian is " +
                                    std::to_string(laplacian.rows()) + "x" +
                                    std::to_string(laplacian.cols()) + ", input has " +
                                    std::to_string(x.rows()) + " simplices");

    Matrix<Scalar> pre = Matrix<Scalar>::Zero(x.rows(), layer.out_channels());
    pre.rowwise() += layer.bias.transpose();

    Matrix<Scalar> power = x;  // L^0 X
    for (int i = 0; i <= layer.degree; ++i) {
        if (i > 0) power = laplacian * power;
        pre.noalias() += power * layer.weights[static_cast<std::size_t>(i)].transpose();
        if (cache) cache->powers.push_back(power);
    }
    if (cache) cache->pre = pre;
    return detail::activate(layer, pre);
}

}  // namespace snn

#endif
