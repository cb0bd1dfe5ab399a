#pragma once

#include <cstdint>
#include <random>

#include "qi3d/vec.hpp"

namespace qi3d {

/// Seeded random source with a platform-independent uniform mapping,
/// so that a fixed seed reproduces identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// uniform in [0, 1)
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

    /// uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    Vec3 vec3(double lo, double hi) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

    /// isotropic unit vector
    Vec3 unit_vec3() {
        double c = uniform(-1, 1), phi = uniform(0, 2 * M_PI);
        double s = std::sqrt(std::max(0.0, 1 - c * c));
        return {s * std::cos(phi), s * std::sin(phi), c};
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace qi3d
