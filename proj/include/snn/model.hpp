/**
 * Stacked simplicial convolutional model, the masked L1 loss, and exact
 * reverse-mode gradients.
 *
 * The backward pass relies on the Laplacian being symmetric: the adjoint of
 * x -> L^i x is itself, so cotangents are propagated with the same sparse
 * matvec kernel as the forward pass.
 */
#ifndef SNN_MODEL_HPP
#define SNN_MODEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "snn/conv.hpp"
#include "snn/errors.hpp"
#include "snn/linalg.hpp"

namespace snn {

template <typename Scalar>
struct SnnModel {
    int dimension = 0;  // cochain dimension the model operates on
    std::vector<ConvLayer<Scalar>> layers;

    void validate() const {
        if (layers.empty()) throw std::invalid_argument("SnnModel: no layers");
        for (std::size_t l = 0; l < layers.size(); ++l) {
            layers[l].validate();
            if (l > 0 && layers[l].in_channels() != layers[l - 1].out_channels())
                throw std::invalid_argument("SnnModel: channel mismatch between layers " +
                                            std::to_string(l - 1) + " and " + std::to_string(l));
        }
        if (layers.back().nonlinearity != Nonlinearity::identity)
            throw std::invalid_argument("SnnModel: final layer must use the identity "
                                        "nonlinearity");
    }
};

/// Multi-channel forward pass; fills per-layer caches when requested.
template <typename Scalar>
Matrix<Scalar> model_forward_channels(const SnnModel<Scalar>& model,
                                      const SparseMatrix<Scalar>& laplacian,
                                      const Matrix<Scalar>& input,
                                      std::vector<LayerCache<Scalar>>* caches = nullptr) {
    Matrix<Scalar> x = input;
    if (caches) {
        caches->clear();
        caches->resize(model.layers.size());
    }
    for (std::size_t l = 0; l < model.layers.size(); ++l)
        x = conv_forward(model.layers[l], laplacian, x, caches ? &(*caches)[l] : nullptr);
    return x;
}

/// Single-cochain forward pass: one input channel in, one imputed cochain out.
template <typename Scalar>
Vector<Scalar> model_forward(const SnnModel<Scalar>& model, const SparseMatrix<Scalar>& laplacian,
                             const Vector<Scalar>& input) {
    if (model.layers.empty()) throw std::invalid_argument("model_forward: no layers");
    if (model.layers.front().in_channels() != 1)
        throw std::invalid_argument("model_forward: first layer expects " +
                                    std::to_string(model.layers.front().in_channels()) +
                                    " channels; pass a channel matrix instead");
    if (model.layers.back().out_channels() != 1)
        throw std::invalid_argument("model_forward: final layer must emit one channel");
    return model_forward_channels(model, laplacian, Matrix<Scalar>(input)).col(0);
}

/// Mean absolute deviation over the known entries.
template <typename Scalar>
Scalar l1_masked_loss(const Vector<Scalar>& prediction, const Vector<Scalar>& target,
                      const Mask& known) {
    if (prediction.size() != target.size() || prediction.size() != known.size())
        throw std::invalid_argument("l1_masked_loss: length mismatch");
    Index count = 0;
    Scalar sum = Scalar(0);
    for (Index i = 0; i < prediction.size(); ++i) {
        if (!known(i)) continue;
        sum += std::abs(prediction(i) - target(i));
        ++count;
    }
    if (count == 0) throw std::invalid_argument("l1_masked_loss: mask marks nothing as known");
    return sum / Scalar(count);
}

template <typename Scalar>
struct LayerGradients {
    std::vector<Matrix<Scalar>> weights;  // same shapes as ConvLayer::weights
    Vector<Scalar> bias;
};

template <typename Scalar>
struct ModelGradients {
    std::vector<LayerGradients<Scalar>> layers;
};

template <typename Scalar>
struct BackpropResult {
    Scalar loss = Scalar(0);
    Vector<Scalar> prediction;
    ModelGradients<Scalar> gradients;
};

/// Loss, prediction, and exact d(loss)/d(parameter) for every weight and
/// bias. sign(0) is taken as 0 (the L1 subgradient at a tie).
template <typename Scalar>
BackpropResult<Scalar> gradients(const SnnModel<Scalar>& model,
                                 const SparseMatrix<Scalar>& laplacian,
                                 const Vector<Scalar>& input, const Vector<Scalar>& target,
                                 const Mask& known) {
    if (target.size() != input.size() || known.size() != input.size())
        throw std::invalid_argument("gradients: input, target and mask lengths differ");

    std::vector<LayerCache<Scalar>> caches;
    BackpropResult<Scalar> result;
    result.prediction =
        model_forward_channels(model, laplacian, Matrix<Scalar>(input), &caches).col(0);
    result.loss = l1_masked_loss(result.prediction, target, known);

    const Index known_count = static_cast<Index>(known.template cast<Index>().sum());
    Matrix<Scalar> grad_out = Matrix<Scalar>::Zero(input.size(), 1);
    for (Index i = 0; i < input.size(); ++i) {
        if (!known(i)) continue;
        const Scalar diff = result.prediction(i) - target(i);
        if (diff > Scalar(0))
            grad_out(i, 0) = Scalar(1) / Scalar(known_count);
        else if (diff < Scalar(0))
            grad_out(i, 0) = Scalar(-1) / Scalar(known_count);
    }

    result.gradients.layers.resize(model.layers.size());
    for (std::size_t l = model.layers.size(); l-- > 0;) {
        const ConvLayer<Scalar>& layer = model.layers[l];
        const LayerCache<Scalar>& cache = caches[l];
        auto& grads = result.gradients.layers[l];

        const Matrix<Scalar> grad_pre =
            grad_out.cwiseProduct(detail::activate_derivative(layer, cache.pre));

        grads.weights.resize(layer.weights.size());
        for (int i = 0; i <= layer.degree; ++i)
            grads.weights[static_cast<std::size_t>(i)].noalias() =
                grad_pre.transpose() * cache.powers[static_cast<std::size_t>(i)];
        grads.bias = grad_pre.colwise().sum().transpose();

        if (l > 0) {
            // d(loss)/dX = sum_i L^i grad_pre W_i  (L is symmetric).
            Matrix<Scalar> grad_in =
                Matrix<Scalar>::Zero(grad_pre.rows(), layer.in_channels());
            Matrix<Scalar> power = grad_pre;
            for (int i = 0; i <= layer.degree; ++i) {
                if (i > 0) power = laplacian * power;
                grad_in.noalias() += power * layer.weights[static_cast<std::size_t>(i)];
            }
            grad_out = std::move(grad_in);
        }
    }
    return result;
}

}  // namespace snn

#endif
