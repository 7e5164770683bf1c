#include "hfrlab/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hfrlab {

namespace {
std::size_t product(std::span<const std::size_t> dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}
} // namespace

Tensor::Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
    data.assign(product(shape), 0.0);
}

Tensor::Tensor(std::vector<std::size_t> s, std::vector<double> d)
    : shape(std::move(s)), data(std::move(d)) {
    if (data.size() != product(shape)) {
        throw std::invalid_argument("Tensor: data length " + std::to_string(data.size()) +
                                    " does not match shape " + shape_string(shape));
    }
}

Tensor Tensor::row(std::span<const double> values) {
    return Tensor({1, values.size()}, std::vector<double>(values.begin(), values.end()));
}

Tensor Tensor::zeros(std::size_t rows, std::size_t cols) {
    return Tensor({rows, cols});
}

bool Tensor::all_finite() const {
    for (double v : data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

std::string shape_string(std::span<const std::size_t> shape) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ", ";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

void check_width(const Tensor& t, std::size_t expected, const char* where) {
    if (t.cols() != expected) {
        std::ostringstream os;
        os << where << ": expected width " << expected << ", got " << t.cols()
           << " (shape " << shape_string(t.shape) << ")";
        throw std::invalid_argument(os.str());
    }
}

} // namespace hfrlab
