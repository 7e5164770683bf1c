#include "hfrlab/adam.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hfrlab::nn {

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state) {
    if (params.size() != grads.size() || params.size() != state.m.size())
        throw std::invalid_argument("adam_step: array length mismatch");
    for (std::size_t i = 0; i < grads.size(); ++i) {
        if (!std::isfinite(grads[i]))
            throw std::domain_error("adam_step: non-finite gradient at index " + std::to_string(i));
    }
    state.step += 1;
    const double b1t = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double b2t = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grads[i];
        state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * g;
        state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * g * g;
        const double mhat = state.m[i] / b1t;
        const double vhat = state.v[i] / b2t;
        params[i] -= state.lr * mhat / (std::sqrt(vhat) + state.eps);
    }
}

void adam_step(Mlp& net, const Gradients& grads, AdamState& state) {
    auto params = flatten_params(net);
    auto flat_grads = flatten_grads(grads);
    adam_step(params, flat_grads, state);
    unflatten_params(net, params);
}

} // namespace hfrlab::nn
