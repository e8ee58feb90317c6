#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace fbmlab {

// splitmix64 finaliser applied to (seed, stream); used to give every path its own generator.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

// Standard normal draws for one path; the sequence depends only on (seed, stream).
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream) : engine_(stream_seed(seed, stream)) {}

    double operator()() { return dist_(engine_); }
    void fill(std::span<double> out) {
        for (double& x : out) x = dist_(engine_);
    }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> dist_{0.0, 1.0};
};

} // namespace fbmlab
