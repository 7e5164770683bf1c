#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hfrlab/mlp.hpp"

namespace hfrlab::nn {

struct AdamState {
    std::vector<double> m;  // first moments
    std::vector<double> v;  // second moments
    std::uint64_t step = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double lr = 3e-4;

    explicit AdamState(std::size_t n = 0, double lr_ = 3e-4)
        : m(n, 0.0), v(n, 0.0), lr(lr_) {}
};

/// One bias-corrected Adam update, in place. Throws std::domain_error naming
/// the offending index on a non-finite gradient.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

/// Convenience wrapper updating an Mlp from per-tensor gradients.
void adam_step(Mlp& net, const Gradients& grads, AdamState& state);

} // namespace hfrlab::nn
