#include "hfrlab/serialize.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace hfrlab {

namespace {

static_assert(std::endian::native == std::endian::little,
              "tensor files are little-endian; byte swapping not implemented");

void write_u64(std::ofstream& out, std::uint64_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint64_t read_u64(std::ifstream& in) {
    std::uint64_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

} // namespace

void save_tensor(const std::filesystem::path& path, const Tensor& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_tensor: cannot open " + path.string());
    write_u64(out, t.shape.size());
    for (auto d : t.shape) write_u64(out, d);
    out.write(reinterpret_cast<const char*>(t.data.data()),
              static_cast<std::streamsize>(t.data.size() * sizeof(double)));
    if (!out) throw std::runtime_error("save_tensor: write failed for " + path.string());
}

Tensor load_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_tensor: cannot open " + path.string());
    const std::uint64_t rank = read_u64(in);
    if (rank > 8) throw std::runtime_error("load_tensor: implausible rank in " + path.string());
    std::vector<std::size_t> shape(rank);
    for (auto& d : shape) d = read_u64(in);
    Tensor t(shape);
    in.read(reinterpret_cast<char*>(t.data.data()),
            static_cast<std::streamsize>(t.data.size() * sizeof(double)));
    if (!in) throw std::runtime_error("load_tensor: truncated file " + path.string());
    return t;
}

void append_manifest(const std::filesystem::path& dir, const std::string& name,
                     std::span<const std::size_t> shape) {
    std::ofstream out(dir / "manifest.txt", std::ios::app);
    out << name;
    for (auto d : shape) out << ' ' << d;
    out << '\n';
}

void save_mlp(const std::filesystem::path& dir, const std::string& component,
              const nn::Mlp& net) {
    std::filesystem::create_directories(dir);
    for (std::size_t l = 0; l < net.layer_count(); ++l) {
        const std::string wname = component + ".w" + std::to_string(l);
        const std::string bname = component + ".b" + std::to_string(l);
        save_tensor(dir / (wname + ".bin"), net.weights[l]);
        save_tensor(dir / (bname + ".bin"), net.biases[l]);
        append_manifest(dir, wname, net.weights[l].shape);
        append_manifest(dir, bname, net.biases[l].shape);
    }
}

void load_mlp(const std::filesystem::path& dir, const std::string& component, nn::Mlp& net) {
    for (std::size_t l = 0; l < net.layer_count(); ++l) {
        Tensor w = load_tensor(dir / (component + ".w" + std::to_string(l) + ".bin"));
        Tensor b = load_tensor(dir / (component + ".b" + std::to_string(l) + ".bin"));
        if (w.shape != net.weights[l].shape || b.shape != net.biases[l].shape)
            throw std::runtime_error("load_mlp: shape mismatch for component " + component);
        net.weights[l] = std::move(w);
        net.biases[l] = std::move(b);
    }
}

} // namespace hfrlab
