#include "hfrlab/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace hfrlab::nn {

namespace {

// y[r,:] = W x[r,:] + b for every row r
void affine_forward(const Tensor& W, const Tensor& b, const Tensor& x, Tensor& y) {
    const std::size_t rows = x.rows(), in = W.cols(), out = W.rows();
    for (std::size_t r = 0; r < rows; ++r) {
        const double* xr = x.row_ptr(r);
        double* yr = y.row_ptr(r);
        for (std::size_t o = 0; o < out; ++o) {
            const double* wr = W.row_ptr(o);
            double acc = b.data[o];
            for (std::size_t k = 0; k < in; ++k) acc += wr[k] * xr[k];
            yr[o] = acc;
        }
    }
}

void apply_activation(Activation act, Tensor& t) {
    switch (act) {
    case Activation::Identity: return;
    case Activation::Relu:
        for (double& v : t.data) v = v > 0.0 ? v : 0.0;
        return;
    case Activation::Tanh:
        for (double& v : t.data) v = std::tanh(v);
        return;
    }
}

// g *= act'(pre), elementwise
void activation_backward(Activation act, const Tensor& pre, Tensor& g) {
    switch (act) {
    case Activation::Identity: return;
    case Activation::Relu:
        for (std::size_t i = 0; i < g.data.size(); ++i)
            if (pre.data[i] <= 0.0) g.data[i] = 0.0;
        return;
    case Activation::Tanh:
        for (std::size_t i = 0; i < g.data.size(); ++i) {
            const double t = std::tanh(pre.data[i]);
            g.data[i] *= 1.0 - t * t;
        }
        return;
    }
}

Tensor activated(Activation act, const Tensor& pre) {
    Tensor out = pre;
    apply_activation(act, out);
    return out;
}

void apply_head(const GaussianHead& head, Tensor& out) {
    const std::size_t half = out.cols() / 2;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        double* o = out.row_ptr(r);
        for (std::size_t c = half; c < out.cols(); ++c) {
            if (o[c] < head.log_var_min) o[c] = head.log_var_min;
            else if (o[c] > head.log_var_max) o[c] = head.log_var_max;
        }
    }
}

// zero the gradient wherever the clamp was active
void head_backward(const GaussianHead& head, const Tensor& pre, Tensor& g) {
    const std::size_t half = g.cols() / 2;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const double* p = pre.row_ptr(r);
        double* gr = g.row_ptr(r);
        for (std::size_t c = half; c < g.cols(); ++c) {
            if (p[c] < head.log_var_min || p[c] > head.log_var_max) gr[c] = 0.0;
        }
    }
}

} // namespace

std::size_t Mlp::param_count() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l < weights.size(); ++l)
        n += weights[l].numel() + biases[l].numel();
    return n;
}

Mlp make_mlp(std::vector<std::size_t> widths, Activation hidden,
             std::optional<GaussianHead> head, Rng& rng) {
    if (widths.size() < 2) throw std::invalid_argument("make_mlp: need at least two widths");
    if (head && widths.back() % 2 != 0)
        throw std::invalid_argument("make_mlp: gaussian head needs an even output width");
    Mlp net;
    net.widths = std::move(widths);
    net.hidden = hidden;
    net.head = head;
    for (std::size_t l = 0; l + 1 < net.widths.size(); ++l) {
        const std::size_t in = net.widths[l], out = net.widths[l + 1];
        Tensor W({out, in});
        const double bound = 1.0 / std::sqrt(static_cast<double>(in));
        for (double& w : W.data) w = rng.uniform(-bound, bound);
        net.weights.push_back(std::move(W));
        net.biases.push_back(Tensor({out}));
    }
    return net;
}

const Tensor& forward(const Mlp& net, const Tensor& input, ForwardTrace& trace) {
    check_width(input, net.in_dim(), "mlp forward");
    const std::size_t rows = input.rows();
    trace.input = input;
    trace.pre.assign(net.layer_count(), Tensor{});
    const Tensor* cur = &trace.input;
    Tensor post;
    for (std::size_t l = 0; l < net.layer_count(); ++l) {
        trace.pre[l] = Tensor({rows, net.widths[l + 1]});
        affine_forward(net.weights[l], net.biases[l], *cur, trace.pre[l]);
        if (l + 1 < net.layer_count()) {
            post = activated(net.hidden, trace.pre[l]);
            cur = &post;
        }
    }
    trace.output = trace.pre.back();
    if (net.head) apply_head(*net.head, trace.output);
    return trace.output;
}

Tensor forward(const Mlp& net, const Tensor& input) {
    ForwardTrace trace;
    forward(net, input, trace);
    return std::move(trace.output);
}

Gradients zero_like(const Mlp& net) {
    Gradients g;
    for (std::size_t l = 0; l < net.layer_count(); ++l) {
        g.weights.emplace_back(net.weights[l].shape);
        g.biases.emplace_back(net.biases[l].shape);
    }
    return g;
}

Gradients backward(const Mlp& net, const ForwardTrace& trace, const Tensor& output_grad,
                   bool want_param_grads, bool want_input_grad) {
    check_width(output_grad, net.out_dim(), "mlp backward");
    if (output_grad.rows() != trace.input.rows())
        throw std::invalid_argument("mlp backward: output_grad batch size mismatch");

    const std::size_t rows = trace.input.rows();
    const std::size_t layers = net.layer_count();
    Gradients g;
    if (want_param_grads) g = zero_like(net);

    Tensor delta = output_grad;
    if (net.head) head_backward(*net.head, trace.pre.back(), delta);

    for (std::size_t li = layers; li-- > 0;) {
        if (li + 1 < layers) activation_backward(net.hidden, trace.pre[li], delta);

        // layer input: activated previous pre, or the network input
        Tensor prev_post;
        const Tensor* layer_in;
        if (li == 0) {
            layer_in = &trace.input;
        } else {
            prev_post = activated(net.hidden, trace.pre[li - 1]);
            layer_in = &prev_post;
        }

        const Tensor& W = net.weights[li];
        const std::size_t in = W.cols(), out = W.rows();

        if (want_param_grads) {
            Tensor& dW = g.weights[li];
            Tensor& db = g.biases[li];
            for (std::size_t r = 0; r < rows; ++r) {
                const double* xr = layer_in->row_ptr(r);
                const double* dr = delta.row_ptr(r);
                for (std::size_t o = 0; o < out; ++o) {
                    const double d = dr[o];
                    if (d == 0.0) continue;
                    double* dwr = dW.row_ptr(o);
                    for (std::size_t k = 0; k < in; ++k) dwr[k] += d * xr[k];
                    db.data[o] += d;
                }
            }
        }

        const bool need_prev = li > 0 || want_input_grad;
        if (!need_prev) break;
        Tensor next_delta({rows, in});
        for (std::size_t r = 0; r < rows; ++r) {
            const double* dr = delta.row_ptr(r);
            double* nr = next_delta.row_ptr(r);
            for (std::size_t o = 0; o < out; ++o) {
                const double d = dr[o];
                if (d == 0.0) continue;
                const double* wr = W.row_ptr(o);
                for (std::size_t k = 0; k < in; ++k) nr[k] += d * wr[k];
            }
        }
        delta = std::move(next_delta);
    }
    if (want_input_grad) g.input = std::move(delta);
    return g;
}

Gradients backward(const Mlp& net, const Tensor& input, const Tensor& output_grad) {
    ForwardTrace trace;
    forward(net, input, trace);
    return backward(net, trace, output_grad);
}

void accumulate(Gradients& into, const Gradients& g) {
    for (std::size_t l = 0; l < into.weights.size(); ++l) {
        for (std::size_t i = 0; i < into.weights[l].data.size(); ++i)
            into.weights[l].data[i] += g.weights[l].data[i];
        for (std::size_t i = 0; i < into.biases[l].data.size(); ++i)
            into.biases[l].data[i] += g.biases[l].data[i];
    }
}

void scale(Gradients& g, double factor) {
    for (auto& t : g.weights)
        for (double& v : t.data) v *= factor;
    for (auto& t : g.biases)
        for (double& v : t.data) v *= factor;
    for (double& v : g.input.data) v *= factor;
}

std::vector<double> flatten_params(const Mlp& net) {
    std::vector<double> flat;
    flat.reserve(net.param_count());
    for (std::size_t l = 0; l < net.layer_count(); ++l) {
        flat.insert(flat.end(), net.weights[l].data.begin(), net.weights[l].data.end());
        flat.insert(flat.end(), net.biases[l].data.begin(), net.biases[l].data.end());
    }
    return flat;
}

void unflatten_params(Mlp& net, std::span<const double> flat) {
    if (flat.size() != net.param_count())
        throw std::invalid_argument("unflatten_params: length mismatch");
    std::size_t pos = 0;
    for (std::size_t l = 0; l < net.layer_count(); ++l) {
        for (double& v : net.weights[l].data) v = flat[pos++];
        for (double& v : net.biases[l].data) v = flat[pos++];
    }
}

std::vector<double> flatten_grads(const Gradients& g) {
    std::vector<double> flat;
    for (std::size_t l = 0; l < g.weights.size(); ++l) {
        flat.insert(flat.end(), g.weights[l].data.begin(), g.weights[l].data.end());
        flat.insert(flat.end(), g.biases[l].data.begin(), g.biases[l].data.end());
    }
    return flat;
}

Tensor gaussian_rsample(const Tensor& mean, const Tensor& log_var, const Tensor& noise) {
    if (mean.shape != log_var.shape || mean.shape != noise.shape)
        throw std::invalid_argument("gaussian_rsample: shape mismatch");
    Tensor out = mean;
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] += std::exp(0.5 * log_var.data[i]) * noise.data[i];
    return out;
}

} // namespace hfrlab::nn
