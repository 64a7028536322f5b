#pragma once

#include <cstdint>
#include <random>

namespace olq {

// Seeded draws on top of mt19937_64 with explicit bit-to-double mapping, so
// sequences are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();  // [0, 1)
    double normal();   // standard normal (Box-Muller)
    bool bernoulli(double p);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace olq
