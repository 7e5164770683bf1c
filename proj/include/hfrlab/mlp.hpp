#pragma once

#include <optional>
#include <vector>

#include "hfrlab/rng.hpp"
#include "hfrlab/tensor.hpp"

namespace hfrlab::nn {

enum class Activation { Identity, Relu, Tanh };

/// Output head producing (mean, log-variance) halves; the log-variance half
/// is clamped to [log_var_min, log_var_max]. Requires an even output width.
struct GaussianHead {
    double log_var_min = -10.0;
    double log_var_max = 2.0;
};

struct Mlp {
    std::vector<std::size_t> widths;  // {in, hidden..., out}
    std::vector<Tensor> weights;      // per layer, [out x in]
    std::vector<Tensor> biases;       // per layer, [out]
    Activation hidden = Activation::Relu;
    std::optional<GaussianHead> head; // nullopt -> plain affine output

    std::size_t in_dim() const { return widths.front(); }
    std::size_t out_dim() const { return widths.back(); }
    std::size_t layer_count() const { return weights.size(); }
    std::size_t param_count() const;
};

/// Fan-in uniform init: W ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in)), biases zero.
Mlp make_mlp(std::vector<std::size_t> widths, Activation hidden,
             std::optional<GaussianHead> head, Rng& rng);

/// Cached per-layer forward results reused by backward.
struct ForwardTrace {
    Tensor input;
    std::vector<Tensor> pre;  // pre-activation of each layer
    Tensor output;            // after output head
};

Tensor forward(const Mlp& net, const Tensor& input);
const Tensor& forward(const Mlp& net, const Tensor& input, ForwardTrace& trace);

struct Gradients {
    std::vector<Tensor> weights;
    std::vector<Tensor> biases;
    Tensor input;  // dL/dinput, empty when not requested
};

/// Reverse-mode pass. `output_grad` must match [batch x out_dim].
Gradients backward(const Mlp& net, const Tensor& input, const Tensor& output_grad);
Gradients backward(const Mlp& net, const ForwardTrace& trace, const Tensor& output_grad,
                   bool want_param_grads = true, bool want_input_grad = true);

void accumulate(Gradients& into, const Gradients& g);
void scale(Gradients& g, double factor);
Gradients zero_like(const Mlp& net);

/// Flat views over all parameters, layer by layer (weights then bias).
std::vector<double> flatten_params(const Mlp& net);
void unflatten_params(Mlp& net, std::span<const double> flat);
std::vector<double> flatten_grads(const Gradients& g);

/// mean + exp(log_var / 2) * noise, elementwise; shapes must agree.
Tensor gaussian_rsample(const Tensor& mean, const Tensor& log_var, const Tensor& noise);

} // namespace hfrlab::nn
