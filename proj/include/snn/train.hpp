/**
 * Full-batch training of a simplicial convolutional model against the
 * masked L1 loss. Deterministic for a fixed seed.
 */
#ifndef SNN_TRAIN_HPP
#define SNN_TRAIN_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "snn/adam.hpp"
#include "snn/errors.hpp"
#include "snn/linalg.hpp"
#include "snn/model.hpp"
#include "snn/rng.hpp"

namespace snn {

struct TrainConfig {
    int iterations = 1000;
    double lr = 1e-3;
    std::uint64_t seed = 0;
    std::vector<int> layer_widths = {1, 30, 30, 1};  // channels, including input and output
    int degree = 5;                                  // N
    double leaky_slope = 0.01;
    // Extension (off by default, not part of the reference protocol): train in
    // affine-standardized units derived from the known target entries.
    bool standardize = false;

    void validate() const {
        if (iterations < 1) throw std::invalid_argument("TrainConfig: iterations must be >= 1");
        if (layer_widths.size() < 2)
            throw std::invalid_argument("TrainConfig: need at least input and output widths");
        if (layer_widths.front() != 1 || layer_widths.back() != 1)
            throw std::invalid_argument("TrainConfig: model maps one cochain to one cochain");
        for (int w : layer_widths)
            if (w < 1) throw std::invalid_argument("TrainConfig: layer widths must be positive");
        if (degree < 0) throw std::invalid_argument("TrainConfig: degree must be >= 0");
        if (!(leaky_slope > 0.0 && leaky_slope < 1.0))
            throw std::invalid_argument("TrainConfig: leaky slope must lie in (0, 1)");
        if (!(lr > 0.0)) throw std::invalid_argument("TrainConfig: learning rate must be > 0");
    }
};

/// Fresh model per the config. Hidden layers use leaky ReLU, the final layer
/// is linear so negative corrections stay representable. Weights are
/// zero-mean uniform with Glorot-style fan accounting in which each
/// Laplacian power counts as one input feature; biases start at zero.
template <typename Scalar>
SnnModel<Scalar> init_model(int dimension, const TrainConfig& config, Rng& rng) {
    config.validate();
    SnnModel<Scalar> model;
    model.dimension = dimension;
    const std::size_t n_layers = config.layer_widths.size() - 1;
    for (std::size_t l = 0; l < n_layers; ++l) {
        const Index in = config.layer_widths[l];
        const Index out = config.layer_widths[l + 1];
        const bool last = (l + 1 == n_layers);
        auto layer = ConvLayer<Scalar>::zeros(
            in, out, config.degree, last ? Nonlinearity::identity : Nonlinearity::leaky_relu,
            Scalar(config.leaky_slope));
        const double fan = static_cast<double>(in + out) * (config.degree + 1);
        const double bound = std::sqrt(6.0 / fan);
        for (Index o = 0; o < out; ++o)
            for (Index c = 0; c < in; ++c)
                for (int i = 0; i <= config.degree; ++i)
                    layer.weight(o, c, i) = Scalar(rng.uniform(-bound, bound));
        model.layers.push_back(std::move(layer));
    }
    model.validate();
    return model;
}

template <typename Scalar>
struct TrainResult {
    SnnModel<Scalar> model;
    std::vector<Scalar> loss_history;  // loss before each update, length = iterations
    // Affine output map: prediction = model(x') * output_scale + output_shift,
    // identity unless the standardize extension was enabled.
    Scalar output_scale = Scalar(1);
    Scalar output_shift = Scalar(0);
};

/// Model output mapped back to data units.
template <typename Scalar>
Vector<Scalar> predict(const TrainResult<Scalar>& trained, const SparseMatrix<Scalar>& laplacian,
                       const Vector<Scalar>& input) {
    const Vector<Scalar> standardized =
        (input.array() - trained.output_shift) / trained.output_scale;
    Vector<Scalar> out = model_forward(trained.model, laplacian, standardized);
    return (out.array() * trained.output_scale + trained.output_shift).matrix();
}

/// Full-batch Adam on the masked L1 loss. The damaged input is both the
/// network input and, together with the mask, the supervision signal.
/// Aborts with numerical_error if the loss leaves the finite range.
template <typename Scalar>
TrainResult<Scalar> train(const SparseMatrix<Scalar>& laplacian,
                          const Vector<Scalar>& damaged_input, const Vector<Scalar>& target,
                          const Mask& known, const TrainConfig& config, int dimension = 0) {
    config.validate();
    if (damaged_input.size() != target.size() || damaged_input.size() != known.size())
        throw std::invalid_argument("train: input, target and mask lengths differ");
    if (!known.any()) throw std::invalid_argument("train: no known entries to supervise on");

    TrainResult<Scalar> result;
    if (config.standardize) {
        // Center/scale by the known target entries so the optimizer sees O(1) values.
        Scalar mean = Scalar(0), count = Scalar(0);
        for (Index i = 0; i < target.size(); ++i)
            if (known(i)) mean += target(i), count += Scalar(1);
        mean /= count;
        Scalar var = Scalar(0);
        for (Index i = 0; i < target.size(); ++i)
            if (known(i)) var += (target(i) - mean) * (target(i) - mean);
        var /= count;
        const Scalar stdev = std::sqrt(var);
        result.output_shift = mean;
        result.output_scale = stdev > Scalar(0) ? stdev : Scalar(1);
    }
    const Vector<Scalar> x =
        ((damaged_input.array() - result.output_shift) / result.output_scale).matrix();
    const Vector<Scalar> y =
        ((target.array() - result.output_shift) / result.output_scale).matrix();

    Rng rng(config.seed);
    result.model = init_model<Scalar>(dimension, config, rng);
    AdamParams<Scalar> adam_params;
    adam_params.lr = Scalar(config.lr);
    Adam<Scalar> optimizer(result.model, adam_params);

    result.loss_history.reserve(static_cast<std::size_t>(config.iterations));
    for (int it = 0; it < config.iterations; ++it) {
        auto step = gradients(result.model, laplacian, x, y, known);
        if (!std::isfinite(static_cast<double>(step.loss)))
            throw numerical_error("train: loss diverged to a non-finite value at iteration " +
                                  std::to_string(it));
        result.loss_history.push_back(step.loss);
        optimizer.step(result.model, step.gradients);
    }
    return result;
}

}  // namespace snn

#endif
