#pragma once

#include <filesystem>
#include <string>

#include "hfrlab/mlp.hpp"
#include "hfrlab/tensor.hpp"

namespace hfrlab {

/// Tensor file format: u64 rank, u64 dims[rank], f64 data, all little-endian.
void save_tensor(const std::filesystem::path& path, const Tensor& t);
Tensor load_tensor(const std::filesystem::path& path);

/// A checkpoint is a directory of tensor files plus manifest.txt with one
/// "name dim0 dim1 ..." line per tensor. Networks are stored one file per
/// weight/bias tensor, named <component>.w<l> / <component>.b<l>.
void save_mlp(const std::filesystem::path& dir, const std::string& component,
              const nn::Mlp& net);

/// Loads into an already-constructed architecture; shapes must match.
void load_mlp(const std::filesystem::path& dir, const std::string& component, nn::Mlp& net);

void append_manifest(const std::filesystem::path& dir, const std::string& name,
                     std::span<const std::size_t> shape);

} // namespace hfrlab
