#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace diplo {

// Deterministic random source. All draws go through the raw 64-bit engine
// so replays are identical across platforms (no distribution objects).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() {
        ++draws_;
        return engine_();
    }

    // uniform in [0, 1) with 53 bits
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, n)
    std::uint64_t index(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    std::uint64_t draws() const { return draws_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(const std::string& s);

// Per-agent seed derived from the game seed and the power name.
std::uint64_t derive_seed(std::uint64_t game_seed, const std::string& tag);

} // namespace diplo
