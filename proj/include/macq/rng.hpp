#pragma once

#include <cstdint>
#include <random>

namespace macq {

/// Seeded generator with a portable integer draw (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }

    std::uint64_t next() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace macq
