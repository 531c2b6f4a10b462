/**
 * Adam optimizer over the parameters of an SnnModel, with bias-corrected
 * first and second moments (Kingma & Ba).
 */
#ifndef SNN_ADAM_HPP
#define SNN_ADAM_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "snn/errors.hpp"
#include "snn/linalg.hpp"
#include "snn/model.hpp"

namespace snn {

template <typename Scalar>
struct AdamParams {
    Scalar lr = Scalar(1e-3);
    Scalar beta1 = Scalar(0.9);
    Scalar beta2 = Scalar(0.999);
    Scalar eps = Scalar(1e-8);
};

template <typename Scalar>
class Adam {
public:
    Adam(const SnnModel<Scalar>& model, AdamParams<Scalar> params = {}) : params_(params) {
        moments_.resize(model.layers.size());
        for (std::size_t l = 0; l < model.layers.size(); ++l) {
            const auto& layer = model.layers[l];
            auto& m = moments_[l];
            for (const auto& w : layer.weights) {
                m.w_first.push_back(Matrix<Scalar>::Zero(w.rows(), w.cols()));
                m.w_second.push_back(Matrix<Scalar>::Zero(w.rows(), w.cols()));
            }
            m.b_first = Vector<Scalar>::Zero(layer.bias.size());
            m.b_second = Vector<Scalar>::Zero(layer.bias.size());
        }
    }

    std::int64_t steps() const noexcept { return t_; }

    /// One update in place. Throws numerical_error naming the offending
    /// parameter if any gradient entry is non-finite.
    void step(SnnModel<Scalar>& model, const ModelGradients<Scalar>& grads) {
        check_finite(grads);
        ++t_;
        const Scalar correction1 = Scalar(1) - std::pow(params_.beta1, Scalar(t_));
        const Scalar correction2 = Scalar(1) - std::pow(params_.beta2, Scalar(t_));
        for (std::size_t l = 0; l < model.layers.size(); ++l) {
            auto& layer = model.layers[l];
            auto& m = moments_[l];
            const auto& g = grads.layers[l];
            for (std::size_t i = 0; i < layer.weights.size(); ++i) {
                update(layer.weights[i], m.w_first[i], m.w_second[i], g.weights[i], correction1,
                       correction2);
            }
            update(layer.bias, m.b_first, m.b_second, g.bias, correction1, correction2);
        }
    }

private:
    template <typename Param>
    void update(Param& theta, Param& first, Param& second, const Param& grad,
                Scalar correction1, Scalar correction2) {
        first = params_.beta1 * first + (Scalar(1) - params_.beta1) * grad;
        second = params_.beta2 * second + (Scalar(1) - params_.beta2) * grad.cwiseProduct(grad);
        theta.array() -= params_.lr * (first.array() / correction1) /
                         ((second.array() / correction2).sqrt() + params_.eps);
    }

    void check_finite(const ModelGradients<Scalar>& grads) const {
        for (std::size_t l = 0; l < grads.layers.size(); ++l) {
            const auto& g = grads.layers[l];
            for (std::size_t i = 0; i < g.weights.size(); ++i)
                if (!g.weights[i].allFinite())
                    throw numerical_error("adam_step: non-finite gradient for layer " +
                                          std::to_string(l) + " weights[power " +
                                          std::to_string(i) + "]");
            if (!g.bias.allFinite())
                throw numerical_error("adam_step: non-finite gradient for layer " +
                                      std::to_string(l) + " bias");
        }
    }

    struct LayerMoments {
        std::vector<Matrix<Scalar>> w_first, w_second;
        Vector<Scalar> b_first, b_second;
    };

    AdamParams<Scalar> params_;
    std::vector<LayerMoments> moments_;
    std::int64_t t_ = 0;
};

}  // namespace snn

#endif
