#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hfrlab {

/// Dense row-major tensor of doubles. The batch dimension, when present,
/// comes first. Rank-1 tensors are treated as a single row by the 2-D
/// accessors.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s);
    Tensor(std::vector<std::size_t> s, std::vector<double> d);

    static Tensor row(std::span<const double> values);
    static Tensor zeros(std::size_t rows, std::size_t cols);

    std::size_t numel() const { return data.size(); }
    std::size_t rows() const { return shape.size() < 2 ? (shape.empty() ? 0 : 1) : shape[0]; }
    std::size_t cols() const { return shape.empty() ? 0 : shape.back(); }

    double* row_ptr(std::size_t r) { return data.data() + r * cols(); }
    const double* row_ptr(std::size_t r) const { return data.data() + r * cols(); }

    double& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }

    bool all_finite() const;
};

std::string shape_string(std::span<const std::size_t> shape);

/// Throws std::invalid_argument naming expected/actual widths when the last
/// dimension of `t` is not `expected`.
void check_width(const Tensor& t, std::size_t expected, const char* where);

} // namespace hfrlab
