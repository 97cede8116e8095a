#pragma once

#include <cstdint>

namespace hv {

// Counter-based splitmix64: output(i) = mix(seed + i * GAMMA). Stateless per
// index, so independent streams split off cheaply and every witness reproduces
// from (seed, stream, index). Reports record the algorithm id below.
inline constexpr const char* kRngAlgorithm = "splitmix64-counter-v1";

class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed) {}

    uint64_t next() {
        ++counter_;
        return mix(seed_ + counter_ * kGamma);
    }

    // Child stream: decorrelated by mixing the stream label into the seed.
    Rng split(uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + kGamma))); }

    // Uniform-ish in [0, n); modulo bias is irrelevant for test sampling.
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
    uint64_t seed_;
    uint64_t counter_ = 0;
};

}  // namespace hv
